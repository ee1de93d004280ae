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

#ifndef ISOGENIUM_FPGRAPH_HPP_
#define ISOGENIUM_FPGRAPH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isogenium/arith.hpp"
#include "isogenium/ssgraph.hpp"

namespace isogenium {

// y^2 = x^3 + a x + b over F_p.
struct CurveModel {
  Fp a;
  Fp b;
  friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

Fp j_invariant(const PrimeField& f, const CurveModel& e);

// The model with tag 0 and its quadratic twist by the smallest non-residue n,
// with tag 1. For j = 1728 the first model is y^2 = x^3 - x, for j = 0 it is
// y^2 = x^3 + 1. Throws NotSupersingular when j = 1728 with p = 1 mod 4 or
// j = 0 with p = 1 mod 3.
std::pair<CurveModel, CurveModel> canonical_models(const PrimeField& f, Fp j);

// Throws DifferentJInvariants if the j-invariants differ.
bool is_fp_isomorphic(const PrimeField& f, const CurveModel& e1,
                      const CurveModel& e2);

// x-coordinates in F_p that generate F_p-rational kernels of degree ell:
// roots of x^3 + a x + b for ell = 2, of the 3-division polynomial for
// ell = 3. Sorted ascending.
std::vector<Fp> rational_kernels(const PrimeField& f, const CurveModel& e,
                                 int ell);

// Codomain of the ell-isogeny with kernel generated by the point with
// x-coordinate x0. Throws KernelNotOnCurve if x0 is not a kernel abscissa.
CurveModel velu_codomain(const PrimeField& f, const CurveModel& e, Fp x0,
                         int ell);

enum class Level { kSurface, kFloor, kFlat };
const char* level_name(Level level);

// Surface when all 2-torsion is rational (p = 3 mod 4); flat for p = 1 mod 4.
Level curve_level(const PrimeField& f, const CurveModel& e);

struct FpVertex {
  Fp j;
  int twist_tag = 0;
  Level level = Level::kFlat;
  CurveModel model;
};

// F_p-rational isogeny graph. Vertex 2k + t is the model with tag t of the
// k-th smallest j. Edges are undirected pairs (u <= v) repeated by
// multiplicity.
struct FpGraph {
  std::uint64_t p = 0;
  int ell = 0;
  std::vector<FpVertex> vertices;
  std::vector<std::array<std::uint32_t, 2>> edges;

  std::uint32_t twin(std::uint32_t v) const { return v ^ 1u; }
  std::optional<std::uint32_t> index_of(Fp j, int tag) const;
  // Neighbour lists; a loop contributes its vertex once.
  std::vector<std::vector<std::uint32_t>> adjacency() const;
  // Component id per vertex, numbered by smallest member.
  std::vector<std::uint32_t> components() const;
};

// Builds the graph on the supersingular j in F_p. Each codomain is matched to
// one of the two models of its j-invariant; throws TwistIdentificationFailure
// if neither matches and InvariantViolation if the codomain j is not a root
// of Phi_ell(j, Y) or not supersingular.
FpGraph build_fp_graph(std::uint64_t p, int ell,
                       const std::vector<Fp>& supersingular_fp);
FpGraph build_fp_graph(const IsogenyMultiGraph& g);

// Number of primitive reduced positive definite forms of discriminant D.
// Throws InvalidDiscriminant unless D < 0 and D = 0, 1 mod 4.
std::uint64_t class_number(std::int64_t discriminant);

// {"p", "ell", "vertices": [{"j", "twist_tag", "level"}], "edges": [[u, v]]}.
std::string fp_graph_to_json(const FpGraph& g);

}  // namespace isogenium

#endif  // ISOGENIUM_FPGRAPH_HPP_
