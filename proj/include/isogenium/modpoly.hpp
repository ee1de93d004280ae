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

#ifndef ISOGENIUM_MODPOLY_HPP_
#define ISOGENIUM_MODPOLY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isogenium/arith.hpp"
#include "isogenium/unipoly.hpp"

namespace isogenium {

// Throws InvalidDegree unless ell is 2 or 3.
void check_degree(int ell);

// Integer coefficients c[i][k] of the classical modular polynomial
// Phi_ell(X, Y) = sum c[i][k] X^i Y^k, for i, k in [0, ell + 1].
const std::vector<std::vector<i128>>& modular_polynomial(int ell);

// Phi_ell reduced into one field, cached so specialization is cheap.
class ReducedModularPolynomial {
 public:
  ReducedModularPolynomial(const Fp2Field& field, int ell);

  int ell() const { return ell_; }
  const Fp2Field& field() const { return field_; }
  // Phi_ell(j, Y), a polynomial of degree ell + 1 in Y.
  UniPoly specialize(const Fp2& j) const;
  Fp2 evaluate(const Fp2& x, const Fp2& y) const;

 private:
  Fp2Field field_;
  int ell_;
  std::vector<std::vector<Fp>> c_;
};

UniPoly phi_specialize(const Fp2Field& field, int ell, const Fp2& j);

// Integer polynomial, constant term first.
using IntPoly = std::vector<std::int64_t>;

// unit * prod factor^multiplicity over Z.
struct IntFactorization {
  std::int64_t unit = 1;
  std::vector<std::pair<IntPoly, int>> factors;
};

// Phi_ell(X, X) = unit * prod factors.
const IntFactorization& self_loop_factorization(int ell);
// Discriminant of Phi_ell(X, Y) with respect to Y.
const IntFactorization& double_edge_factorization(int ell);

// Roots in F_p of Phi_ell(X, X) with multiplicity; coincident reductions are
// merged. Sorted by value.
std::vector<std::pair<Fp, int>> self_loop_locus(int ell, std::uint64_t p);

// Distinct roots in F_{p^2} of the discriminant above, sorted by key.
std::vector<Fp2> double_edge_locus(int ell, std::uint64_t p);

// The two roots of X^2 + 191025 X - 121287375 in F_p, ascending, returned only
// when they are distinct and (-15 | p) = -1. The roots are where a spine edge
// can appear with no rational counterpart for ell = 2.
std::optional<std::pair<Fp, Fp>> attachment_roots(std::uint64_t p);

// Hilbert class polynomials for small discriminants, keyed by D < 0.
const std::map<int, IntPoly>& hilbert_start_table();
// Throws UnknownDiscriminant if D is not in the table.
const IntPoly& hilbert_class_polynomial(int discriminant);

// Kronecker symbol (D | p) for an odd prime p.
int kronecker(std::int64_t d, std::uint64_t p);

}  // namespace isogenium

#endif  // ISOGENIUM_MODPOLY_HPP_
