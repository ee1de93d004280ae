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

#ifndef ISOGENIUM_SSGRAPH_HPP_
#define ISOGENIUM_SSGRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isogenium/arith.hpp"

namespace isogenium {

struct Edge {
  std::uint32_t target = 0;
  std::uint32_t multiplicity = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed ell-isogeny multigraph on supersingular j-invariants. Vertices are
// sorted by canonical key; adjacency lists are sorted by target index. The
// multiplicity of j -> j' is the multiplicity of j' as a root of Phi(j, Y).
class IsogenyMultiGraph {
 public:
  IsogenyMultiGraph(const Fp2Field& field, int ell, std::vector<Fp2> vertices,
                    std::vector<std::vector<Edge>> adjacency);

  std::uint64_t p() const { return field_.characteristic(); }
  int ell() const { return ell_; }
  const Fp2Field& field() const { return field_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Fp2>& vertices() const { return vertices_; }
  const Fp2& vertex(std::uint32_t i) const { return vertices_[i]; }
  const std::vector<Edge>& edges(std::uint32_t i) const { return adj_[i]; }
  std::optional<std::uint32_t> index_of(const Fp2& j) const;
  // Index of j^p.
  std::uint32_t conjugate(std::uint32_t i) const { return conj_[i]; }
  bool is_rational(std::uint32_t i) const {
    return vertices_[i].a1.v == 0;
  }
  // Sum of multiplicities of i -> j (0 if absent).
  std::uint32_t multiplicity(std::uint32_t i, std::uint32_t j) const;

 private:
  Fp2Field field_;
  int ell_;
  std::vector<Fp2> vertices_;
  std::vector<std::vector<Edge>> adj_;
  std::unordered_map<Fp2, std::uint32_t, Fp2Hash> index_;
  std::vector<std::uint32_t> conj_;
};

// Where the search starts and why.
struct StartVertex {
  Fp2 j;
  int discriminant = 0;
};

// Scans the stored class polynomials for a discriminant in which p is inert
// and returns one root. A root in F_p is preferred; otherwise the first root
// in F_{p^2} is used. Throws NoStartFound if p splits in every stored field.
StartVertex choose_start(std::uint64_t p);
Fp2 initial_supersingular_j(std::uint64_t p);

// Breadth-first construction from the start vertex. Throws InvalidDegree,
// InvalidPrime, or InvariantViolation if a vertex does not have out-degree
// ell + 1.
IsogenyMultiGraph build_graph(std::uint64_t p, int ell);
IsogenyMultiGraph build_graph_from(std::uint64_t p, int ell, const Fp2& start);

// floor(p / 12) + {0, 1, 1, 2} for p = 1, 5, 7, 11 mod 12.
std::uint64_t expected_vertex_count(std::uint64_t p);

// Independent enumeration of supersingular j-invariants via the Legendre
// form: roots of the resultant of the Hasse polynomial against the
// lambda-to-j map. Sorted by key. Throws OracleTooLarge above 10^4.
inline constexpr std::uint64_t kOracleMaxPrime = 10000;
std::vector<Fp2> supersingular_oracle(std::uint64_t p);

// True when Frobenius maps the vertex set to itself and preserves every edge
// multiplicity.
bool mirror_check(const IsogenyMultiGraph& g);

// {"p", "ell", "w_squared", "vertices": ["a0+a1*w", ...],
//  "edges": [[u, v, mult], ...]}.
std::string graph_to_json(const IsogenyMultiGraph& g);

}  // namespace isogenium

#endif  // ISOGENIUM_SSGRAPH_HPP_
