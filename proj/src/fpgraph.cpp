// Copyright 2026 The Isogenium Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isogenium/fpgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "isogenium/errors.hpp"
#include "isogenium/modpoly.hpp"
#include "isogenium/unipoly.hpp"

namespace isogenium {
namespace {

// Roots in F_p of a polynomial with F_p coefficients (constant first).
std::vector<Fp> rational_roots(const PrimeField& f, const std::vector<Fp>& c) {
  const Fp2Field f2(f.modulus());
  std::vector<Fp2> lifted;
  for (Fp x : c) lifted.push_back(f2.from_fp(x));
  UniPoly a(std::move(lifted));
  const UniPoly y({f2.zero(), f2.one()});
  UniPoly frob = poly::powmod(f2, y, f.modulus(), a);
  UniPoly g = poly::gcd(f2, poly::sub(f2, frob, y), a);
  std::vector<Fp> out;
  if (g.degree() < 1) return out;
  for (const Fp2& r : distinct_roots(f2, g)) out.push_back(r.a0);
  std::sort(out.begin(), out.end());
  return out;
}

Fp cubic_at(const PrimeField& f, const CurveModel& e, Fp x) {
  return f.add(f.mul(f.add(f.sqr(x), e.a), x), e.b);
}

std::vector<Fp> division_polynomial(const PrimeField& f, const CurveModel& e,
                                    int ell) {
  if (ell == 2) return {e.b, e.a, Fp{0}, Fp{1}};
  // 3 x^4 + 6 a x^2 + 12 b x - a^2.
  return {f.neg(f.sqr(e.a)), f.mul(f.from_int(12), e.b),
          f.mul(f.from_int(6), e.a), Fp{0}, f.from_int(3)};
}

}  // namespace

Fp j_invariant(const PrimeField& f, const CurveModel& e) {
  Fp a3 = f.mul(f.from_int(4), f.mul(e.a, f.sqr(e.a)));
  Fp den = f.add(a3, f.mul(f.from_int(27), f.sqr(e.b)));
  return f.div(f.mul(f.from_int(1728), a3), den);
}

std::pair<CurveModel, CurveModel> canonical_models(const PrimeField& f, Fp j) {
  const std::uint64_t p = f.modulus();
  const Fp n{smallest_nonresidue(p)};
  const Fp n2 = f.sqr(n);
  const Fp n3 = f.mul(n2, n);
  if (j == f.from_int(1728)) {
    if (p % 4 != 3) throw NotSupersingular("j = 1728 is ordinary for p = 1 mod 4");
    return {CurveModel{f.from_int(-1), Fp{0}}, CurveModel{f.from_int(4), Fp{0}}};
  }
  if (j.v == 0) {
    if (p % 3 != 2) throw NotSupersingular("j = 0 is ordinary for p = 1 mod 3");
    return {CurveModel{Fp{0}, Fp{1}}, CurveModel{Fp{0}, n3}};
  }
  Fp k = f.mul(j, f.sub(f.from_int(1728), j));
  CurveModel e{f.mul(f.from_int(3), k),
               f.mul(f.mul(f.from_int(2), k), f.sub(f.from_int(1728), j))};
  return {e, CurveModel{f.mul(e.a, n2), f.mul(e.b, n3)}};
}

bool is_fp_isomorphic(const PrimeField& f, const CurveModel& e1,
                      const CurveModel& e2) {
  if (!(j_invariant(f, e1) == j_invariant(f, e2))) {
    throw DifferentJInvariants("isomorphism test needs equal j-invariants");
  }
  if (e1.a.v == 0) return f.is_kth_power(f.div(e2.b, e1.b), 6);
  if (e1.b.v == 0) return f.is_kth_power(f.div(e2.a, e1.a), 4);
  return f.legendre(f.div(f.mul(e1.a, e2.b), f.mul(e2.a, e1.b))) == 1;
}

std::vector<Fp> rational_kernels(const PrimeField& f, const CurveModel& e,
                                 int ell) {
  check_degree(ell);
  return rational_roots(f, division_polynomial(f, e, ell));
}

CurveModel velu_codomain(const PrimeField& f, const CurveModel& e, Fp x0,
                         int ell) {
  check_degree(ell);
  const auto psi = division_polynomial(f, e, ell);
  Fp v{0};
  for (auto it = psi.rbegin(); it != psi.rend(); ++it) v = f.add(f.mul(v, x0), *it);
  if (v.v != 0) throw KernelNotOnCurve("x0 does not generate an ell-kernel");

  const Fp gx = f.add(f.mul(f.from_int(3), f.sqr(x0)), e.a);
  Fp t, w;
  if (ell == 2) {
    t = gx;
    w = f.mul(x0, gx);
  } else {
    // One representative of the pair {Q, -Q}: v_Q = 2 gx, u_Q = 4 y_Q^2.
    t = f.add(gx, gx);
    w = f.add(f.mul(f.from_int(4), cubic_at(f, e, x0)), f.mul(x0, t));
  }
  return CurveModel{f.sub(e.a, f.mul(f.from_int(5), t)),
                    f.sub(e.b, f.mul(f.from_int(7), w))};
}

const char* level_name(Level level) {
  switch (level) {
    case Level::kSurface:
      return "surface";
    case Level::kFloor:
      return "floor";
    case Level::kFlat:
      return "flat";
  }
  return "flat";
}

Level curve_level(const PrimeField& f, const CurveModel& e) {
  if (f.modulus() % 4 == 1) return Level::kFlat;
  return rational_kernels(f, e, 2).size() == 3 ? Level::kSurface
                                               : Level::kFloor;
}

std::optional<std::uint32_t> FpGraph::index_of(Fp j, int tag) const {
  auto it = std::lower_bound(
      vertices.begin(), vertices.end(), std::make_pair(j, tag),
      [](const FpVertex& v, const std::pair<Fp, int>& key) {
        return std::make_pair(v.j, v.twist_tag) < key;
      });
  if (it == vertices.end() || !(it->j == j) || it->twist_tag != tag) {
    return std::nullopt;
  }
  return static_cast<std::uint32_t>(it - vertices.begin());
}

std::vector<std::vector<std::uint32_t>> FpGraph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(vertices.size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::uint32_t> FpGraph::components() const {
  std::vector<std::uint32_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges) {
    std::uint32_t a = find(u), b = find(v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> out(vertices.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = find(i);
  return out;
}

FpGraph build_fp_graph(std::uint64_t p, int ell,
                       const std::vector<Fp>& supersingular_fp) {
  check_degree(ell);
  const PrimeField f(p);
  const Fp2Field f2(p);
  const ReducedModularPolynomial phi(f2, ell);
  std::vector<Fp> js = supersingular_fp;
  std::sort(js.begin(), js.end());

  FpGraph g;
  g.p = p;
  g.ell = ell;
  for (Fp j : js) {
    auto [e0, e1] = canonical_models(f, j);
    g.vertices.push_back(FpVertex{j, 0, curve_level(f, e0), e0});
    g.vertices.push_back(FpVertex{j, 1, curve_level(f, e1), e1});
  }

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> directed;
  for (std::uint32_t u = 0; u < g.vertices.size(); ++u) {
    const FpVertex& src = g.vertices[u];
    for (Fp x0 : rational_kernels(f, src.model, ell)) {
      CurveModel image = velu_codomain(f, src.model, x0, ell);
      Fp j2 = j_invariant(f, image);
      if (!(phi.evaluate(f2.from_fp(src.j), f2.from_fp(j2)) == f2.zero())) {
        throw InvariantViolation("codomain j is not a modular neighbour");
      }
      auto base = g.index_of(j2, 0);
      if (!base) {
        throw InvariantViolation("codomain j = " + std::to_string(j2.v) +
                                 " is not a supersingular F_p vertex");
      }
      std::uint32_t v;
      if (is_fp_isomorphic(f, image, g.vertices[*base].model)) {
        v = *base;
      } else if (is_fp_isomorphic(f, image, g.vertices[*base + 1].model)) {
        v = *base + 1;
      } else {
        throw TwistIdentificationFailure("codomain matches neither model");
      }
      ++directed[{u, v}];
    }
  }
  for (const auto& [key, count] : directed) {
    const auto [u, v] = key;
    std::uint32_t mult;
    if (u == v) {
      // A loop and its dual are both counted from the same vertex.
      mult = (count + 1) / 2;
    } else if (u < v) {
      auto it = directed.find({v, u});
      mult = std::max(count, it == directed.end() ? 0u : it->second);
    } else {
      if (directed.count({v, u})) continue;
      mult = count;
    }
    for (std::uint32_t k = 0; k < mult; ++k) {
      g.edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

FpGraph build_fp_graph(const IsogenyMultiGraph& g) {
  std::vector<Fp> js;
  for (const Fp2& j : g.vertices()) {
    if (j.a1.v == 0) js.push_back(j.a0);
  }
  return build_fp_graph(g.p(), g.ell(), js);
}

std::uint64_t class_number(std::int64_t discriminant) {
  const std::int64_t d = discriminant;
  if (d >= 0 || ((d % 4) + 4) % 4 > 1) {
    throw InvalidDiscriminant("discriminant must be negative and 0 or 1 mod 4");
  }
  std::uint64_t h = 0;
  const std::int64_t n = -d;
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - d) & 1) != 0) continue;
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

std::string fp_graph_to_json(const FpGraph& g) {
  nlohmann::ordered_json out;
  out["p"] = g.p;
  out["ell"] = g.ell;
  auto& vertices = out["vertices"] = nlohmann::ordered_json::array();
  for (const FpVertex& v : g.vertices) {
    nlohmann::ordered_json x;
    x["j"] = v.j.v;
    x["twist_tag"] = v.twist_tag;
    x["level"] = level_name(v.level);
    vertices.push_back(std::move(x));
  }
  auto& edges = out["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return out.dump() + "\n";
}

}  // namespace isogenium
