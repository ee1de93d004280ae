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

#include "isogenium/modpoly.hpp"

#include <algorithm>
#include <string>
#include <string_view>

#include "isogenium/errors.hpp"

namespace isogenium {
namespace {

i128 parse_i128(std::string_view s) {
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  i128 v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return negative ? -v : v;
}

struct Term {
  int x;
  int y;
  const char* coeff;
};

// Symmetric terms are listed once with x >= y.
constexpr Term kPhi2[] = {
    {3, 0, "1"},
    {2, 2, "-1"},
    {2, 1, "1488"},
    {2, 0, "-162000"},
    {1, 1, "40773375"},
    {1, 0, "8748000000"},
    {0, 0, "-157464000000000"},
};

constexpr Term kPhi3[] = {
    {4, 0, "1"},
    {3, 3, "-1"},
    {3, 2, "2232"},
    {3, 1, "-1069956"},
    {3, 0, "36864000"},
    {2, 2, "2587918086"},
    {2, 1, "8900222976000"},
    {2, 0, "452984832000000"},
    {1, 1, "-770845966336000000"},
    {1, 0, "1855425871872000000000"},
};

std::vector<std::vector<i128>> build_matrix(int ell) {
  const int n = ell + 2;
  std::vector<std::vector<i128>> c(static_cast<std::size_t>(n),
                                   std::vector<i128>(static_cast<std::size_t>(n), 0));
  auto fill = [&](const auto& terms) {
    for (const Term& t : terms) {
      i128 v = parse_i128(t.coeff);
      c[static_cast<std::size_t>(t.x)][static_cast<std::size_t>(t.y)] = v;
      c[static_cast<std::size_t>(t.y)][static_cast<std::size_t>(t.x)] = v;
    }
  };
  if (ell == 2) {
    fill(kPhi2);
  } else {
    fill(kPhi3);
  }
  return c;
}

IntFactorization make_factorization(
    std::int64_t unit, std::vector<std::pair<IntPoly, int>> factors) {
  IntFactorization f;
  f.unit = unit;
  f.factors = std::move(factors);
  return f;
}

}  // namespace

void check_degree(int ell) {
  if (ell != 2 && ell != 3) {
    throw InvalidDegree("isogeny degree must be 2 or 3, got " +
                        std::to_string(ell));
  }
}

const std::vector<std::vector<i128>>& modular_polynomial(int ell) {
  check_degree(ell);
  static const auto phi2 = build_matrix(2);
  static const auto phi3 = build_matrix(3);
  return ell == 2 ? phi2 : phi3;
}

ReducedModularPolynomial::ReducedModularPolynomial(const Fp2Field& field,
                                                   int ell)
    : field_(field), ell_(ell) {
  const auto& m = modular_polynomial(ell);
  c_.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    c_[i].resize(m[i].size());
    for (std::size_t k = 0; k < m[i].size(); ++k) {
      c_[i][k] = field_.base().from_i128(m[i][k]);
    }
  }
}

UniPoly ReducedModularPolynomial::specialize(const Fp2& j) const {
  const std::size_t n = c_.size();
  std::vector<Fp2> powers(n);
  powers[0] = field_.one();
  for (std::size_t i = 1; i < n; ++i) powers[i] = field_.mul(powers[i - 1], j);
  std::vector<Fp2> out(n, field_.zero());
  for (std::size_t k = 0; k < n; ++k) {
    Fp2 acc = field_.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (c_[i][k].v == 0) continue;
      acc = field_.add(acc, field_.mul_base(powers[i], c_[i][k]));
    }
    out[k] = acc;
  }
  return UniPoly(std::move(out));
}

Fp2 ReducedModularPolynomial::evaluate(const Fp2& x, const Fp2& y) const {
  return poly::eval(field_, specialize(x), y);
}

UniPoly phi_specialize(const Fp2Field& field, int ell, const Fp2& j) {
  return ReducedModularPolynomial(field, ell).specialize(j);
}

const IntFactorization& self_loop_factorization(int ell) {
  check_degree(ell);
  static const IntFactorization two = make_factorization(
      -1, {{{-1728, 1}, 1}, {{-8000, 1}, 1}, {{3375, 1}, 2}});
  static const IntFactorization three = make_factorization(
      -1,
      {{{0, 1}, 1}, {{-54000, 1}, 1}, {{-8000, 1}, 2}, {{32768, 1}, 2}});
  return ell == 2 ? two : three;
}

const IntFactorization& double_edge_factorization(int ell) {
  check_degree(ell);
  static const IntFactorization two = make_factorization(
      -4, {{{0, 1}, 2},
           {{-1728, 1}, 1},
           {{3375, 1}, 2},
           {{-121287375, 191025, 1}, 2}});
  static const IntFactorization three = make_factorization(
      -27, {{{0, 1}, 2},
            {{-8000, 1}, 2},
            {{-1728, 1}, 2},
            {{32768, 1}, 2},
            {{12167000000, -52250000, 1}, 2},
            {{-681472000, -1264000, 1}, 2},
            {{-134217728000, 117964800, 1}, 2}});
  return ell == 2 ? two : three;
}

std::vector<std::pair<Fp, int>> self_loop_locus(int ell, std::uint64_t p) {
  const PrimeField f(p);
  std::map<std::uint64_t, int> merged;
  for (const auto& [factor, mult] : self_loop_factorization(ell).factors) {
    // Every factor is linear: X + c.
    merged[f.neg(f.from_int(factor[0])).v] += mult;
  }
  std::vector<std::pair<Fp, int>> out;
  for (const auto& [v, m] : merged) out.emplace_back(Fp{v}, m);
  return out;
}

std::vector<Fp2> double_edge_locus(int ell, std::uint64_t p) {
  const Fp2Field f(p);
  std::vector<Fp2> out;
  for (const auto& [factor, mult] : double_edge_factorization(ell).factors) {
    std::vector<Fp2> c;
    for (std::int64_t x : factor) c.push_back(f.from_int(x));
    for (const Fp2& r : distinct_roots(f, UniPoly(std::move(c)))) {
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Fp2& a, const Fp2& b) { return f.less(a, b); });
  return out;
}

std::optional<std::pair<Fp, Fp>> attachment_roots(std::uint64_t p) {
  const PrimeField f(p);
  if (f.legendre(f.from_int(-15)) != -1) return std::nullopt;
  const Fp b = f.from_int(191025);
  const Fp c = f.from_int(-121287375);
  const Fp disc = f.sub(f.sqr(b), f.mul(f.from_int(4), c));
  if (disc.v == 0) return std::nullopt;
  auto s = f.sqrt(disc);
  if (!s) return std::nullopt;
  const Fp half = f.inv(Fp{2});
  Fp r1 = f.mul(f.sub(*s, b), half);
  Fp r2 = f.mul(f.sub(f.neg(*s), b), half);
  if (r2 < r1) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

const std::map<int, IntPoly>& hilbert_start_table() {
  static const std::map<int, IntPoly> table = {
      {-3, {0, 1}},
      {-4, {-1728, 1}},
      {-7, {3375, 1}},
      {-8, {-8000, 1}},
      {-11, {32768, 1}},
      {-19, {884736, 1}},
      {-43, {884736000, 1}},
      {-67, {147197952000, 1}},
      {-163, {262537412640768000, 1}},
      {-15, {-121287375, 191025, 1}},
      {-20, {-681472000, -1264000, 1}},
      {-24, {14670139392, -4834944, 1}},
  };
  return table;
}

const IntPoly& hilbert_class_polynomial(int discriminant) {
  const auto& table = hilbert_start_table();
  auto it = table.find(discriminant);
  if (it == table.end()) {
    throw UnknownDiscriminant("no class polynomial stored for D = " +
                              std::to_string(discriminant));
  }
  return it->second;
}

int kronecker(std::int64_t d, std::uint64_t p) {
  const PrimeField f(p);
  return f.legendre(f.from_int(d));
}

}  // namespace isogenium
