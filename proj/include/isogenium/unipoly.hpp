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

#ifndef ISOGENIUM_UNIPOLY_HPP_
#define ISOGENIUM_UNIPOLY_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "isogenium/arith.hpp"

namespace isogenium {

// Dense univariate polynomial over F_{p^2}; coefficient i multiplies Y^i.
// The coefficient vector never has trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Fp2> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const Fp2& c) { return UniPoly({c}); }
  // Y - r.
  static UniPoly linear_root(const Fp2Field& f, const Fp2& r) {
    return UniPoly({f.neg(r), f.one()});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Fp2>& coeffs() const { return c_; }
  const Fp2& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Fp2& lead() const { return c_.back(); }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().a0.v == 0 && c_.back().a1.v == 0) {
      c_.pop_back();
    }
  }
  std::vector<Fp2> c_;
};

namespace poly {

Fp2 eval(const Fp2Field& f, const UniPoly& a, const Fp2& x);
UniPoly add(const Fp2Field& f, const UniPoly& a, const UniPoly& b);
UniPoly sub(const Fp2Field& f, const UniPoly& a, const UniPoly& b);
UniPoly mul(const Fp2Field& f, const UniPoly& a, const UniPoly& b);
UniPoly scale(const Fp2Field& f, const UniPoly& a, const Fp2& s);
// Throws ZeroPolynomial when b is zero.
std::pair<UniPoly, UniPoly> divmod(const Fp2Field& f, const UniPoly& a,
                                   const UniPoly& b);
UniPoly rem(const Fp2Field& f, const UniPoly& a, const UniPoly& b);
UniPoly monic(const Fp2Field& f, const UniPoly& a);
// Monic gcd; gcd(0, 0) is 0.
UniPoly gcd(const Fp2Field& f, UniPoly a, UniPoly b);
UniPoly derivative(const Fp2Field& f, const UniPoly& a);
// base^e mod m.
UniPoly powmod(const Fp2Field& f, const UniPoly& base, u128 e,
               const UniPoly& m);
// Divides by (Y - r); the remainder is discarded.
UniPoly deflate(const Fp2Field& f, const UniPoly& a, const Fp2& r);
UniPoly from_roots(const Fp2Field& f, const std::vector<Fp2>& roots);

}  // namespace poly

struct Root {
  Fp2 value;
  int multiplicity = 0;
  friend bool operator==(const Root&, const Root&) = default;
};

// All roots in F_{p^2} with multiplicity, sorted by canonical key.
// Throws ZeroPolynomial for the zero polynomial.
std::vector<Root> find_roots(const Fp2Field& f, const UniPoly& a);

// Distinct roots in F_{p^2} of a, sorted by canonical key.
std::vector<Fp2> distinct_roots(const Fp2Field& f, const UniPoly& a);

// Same as find_roots when `known` is already known to be a root; the
// polynomial is deflated once before the search.
std::vector<Root> find_roots_with_known(const Fp2Field& f, const UniPoly& a,
                                        const Fp2& known);

}  // namespace isogenium

#endif  // ISOGENIUM_UNIPOLY_HPP_
