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

#include "isogenium/ssgraph.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "isogenium/errors.hpp"
#include "isogenium/modpoly.hpp"
#include "isogenium/unipoly.hpp"

namespace isogenium {
namespace {

// Discriminants tried for the starting vertex, in order.
constexpr int kStartOrder[] = {-4,  -3,   -7,  -8,  -11, -19,
                               -43, -67, -163, -15, -20, -24};

}  // namespace

IsogenyMultiGraph::IsogenyMultiGraph(const Fp2Field& field, int ell,
                                     std::vector<Fp2> vertices,
                                     std::vector<std::vector<Edge>> adjacency)
    : field_(field),
      ell_(ell),
      vertices_(std::move(vertices)),
      adj_(std::move(adjacency)) {
  index_.reserve(vertices_.size());
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) {
    index_.emplace(vertices_[i], i);
  }
  conj_.resize(vertices_.size());
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) {
    auto it = index_.find(field_.frobenius(vertices_[i]));
    if (it == index_.end()) {
      throw InvariantViolation("vertex set is not closed under Frobenius");
    }
    conj_[i] = it->second;
  }
}

std::optional<std::uint32_t> IsogenyMultiGraph::index_of(const Fp2& j) const {
  auto it = index_.find(j);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t IsogenyMultiGraph::multiplicity(std::uint32_t i,
                                              std::uint32_t j) const {
  const auto& e = adj_[i];
  auto it = std::lower_bound(
      e.begin(), e.end(), j,
      [](const Edge& x, std::uint32_t t) { return x.target < t; });
  return it != e.end() && it->target == j ? it->multiplicity : 0;
}

StartVertex choose_start(std::uint64_t p) {
  const Fp2Field f(p);
  std::optional<StartVertex> fallback;
  for (int d : kStartOrder) {
    if (kronecker(d, p) != -1) continue;
    std::vector<Fp2> c;
    for (std::int64_t x : hilbert_class_polynomial(d)) c.push_back(f.from_int(x));
    for (const Fp2& r : distinct_roots(f, UniPoly(std::move(c)))) {
      if (f.in_base_field(r)) return StartVertex{r, d};
      if (!fallback) fallback = StartVertex{r, d};
    }
  }
  if (fallback) return *fallback;
  throw NoStartFound("p = " + std::to_string(p) +
                     " splits in every stored imaginary quadratic field");
}

Fp2 initial_supersingular_j(std::uint64_t p) { return choose_start(p).j; }

IsogenyMultiGraph build_graph(std::uint64_t p, int ell) {
  check_degree(ell);
  return build_graph_from(p, ell, initial_supersingular_j(p));
}

IsogenyMultiGraph build_graph_from(std::uint64_t p, int ell,
                                   const Fp2& start) {
  check_degree(ell);
  const Fp2Field f(p);
  const ReducedModularPolynomial phi(f, ell);

  std::vector<Fp2> found{start};
  std::vector<std::uint32_t> parent{UINT32_MAX};
  std::vector<std::vector<Root>> roots;
  std::unordered_map<Fp2, std::uint32_t, Fp2Hash> index{{start, 0}};

  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                return f.less(found[a], found[b]);
              });
    std::vector<std::uint32_t> next;
    for (std::uint32_t u : frontier) {
      UniPoly g = phi.specialize(found[u]);
      std::vector<Root> r =
          parent[u] == UINT32_MAX
              ? find_roots(f, g)
              : find_roots_with_known(f, g, found[parent[u]]);
      int total = 0;
      for (const Root& x : r) total += x.multiplicity;
      if (total != ell + 1) {
        throw InvariantViolation("vertex " + f.format(found[u]) + " has " +
                                 std::to_string(total) +
                                 " neighbours counted with multiplicity");
      }
      for (const Root& x : r) {
        if (index.emplace(x.value, static_cast<std::uint32_t>(found.size()))
                .second) {
          next.push_back(static_cast<std::uint32_t>(found.size()));
          found.push_back(x.value);
          parent.push_back(u);
        }
      }
      if (roots.size() <= u) roots.resize(u + 1);
      roots[u] = std::move(r);
    }
    frontier = std::move(next);
  }

  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return f.less(found[a], found[b]);
  });
  std::vector<std::uint32_t> rank(found.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::vector<Fp2> vertices(found.size());
  std::vector<std::vector<Edge>> adj(found.size());
  for (std::uint32_t old = 0; old < found.size(); ++old) {
    const std::uint32_t v = rank[old];
    vertices[v] = found[old];
    for (const Root& x : roots[old]) {
      adj[v].push_back(Edge{rank[index.at(x.value)],
                            static_cast<std::uint32_t>(x.multiplicity)});
    }
    std::sort(adj[v].begin(), adj[v].end(),
              [](const Edge& a, const Edge& b) { return a.target < b.target; });
  }
  return IsogenyMultiGraph(f, ell, std::move(vertices), std::move(adj));
}

std::uint64_t expected_vertex_count(std::uint64_t p) {
  static constexpr std::uint64_t kEps[12] = {0, 0, 0, 0, 0, 1,
                                             0, 1, 0, 0, 0, 2};
  return p / 12 + kEps[p % 12];
}

bool mirror_check(const IsogenyMultiGraph& g) {
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    const std::uint32_t cu = g.conjugate(u);
    if (g.conjugate(cu) != u) return false;
    for (const Edge& e : g.edges(u)) {
      if (g.multiplicity(cu, g.conjugate(e.target)) != e.multiplicity) {
        return false;
      }
    }
    if (g.edges(u).size() != g.edges(cu).size()) return false;
  }
  return true;
}

std::string graph_to_json(const IsogenyMultiGraph& g) {
  nlohmann::ordered_json out;
  out["p"] = g.p();
  out["ell"] = g.ell();
  out["w_squared"] = g.field().nonresidue().v;
  auto& vertices = out["vertices"] = nlohmann::ordered_json::array();
  for (const Fp2& j : g.vertices()) vertices.push_back(g.field().format(j));
  auto& edges = out["edges"] = nlohmann::ordered_json::array();
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    for (const Edge& e : g.edges(u)) {
      edges.push_back({u, e.target, e.multiplicity});
    }
  }
  return out.dump() + "\n";
}

}  // namespace isogenium
