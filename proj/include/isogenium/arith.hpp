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

#ifndef ISOGENIUM_ARITH_HPP_
#define ISOGENIUM_ARITH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace isogenium {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

// Largest supported characteristic is below 2^kMaxPrimeBits. The bound keeps
// the double-precision quotient estimate in PrimeField::mul exact to +-1.
inline constexpr int kMaxPrimeBits = 50;

bool is_prime(std::uint64_t n);

// Element of F_p, always stored reduced in [0, p).
struct Fp {
  std::uint64_t v = 0;
  friend constexpr bool operator==(Fp, Fp) = default;
  friend constexpr auto operator<=>(Fp, Fp) = default;
};

class PrimeField {
 public:
  // Throws InvalidPrime unless p is a prime with 5 <= p < 2^50.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Fp zero() const { return Fp{0}; }
  Fp one() const { return Fp{1}; }
  Fp from_uint(std::uint64_t x) const { return Fp{x % p_}; }
  Fp from_int(std::int64_t x) const;
  Fp from_i128(i128 x) const;
  // Reduces a signed decimal integer of any length.
  Fp from_decimal(std::string_view digits) const;

  Fp add(Fp a, Fp b) const {
    std::uint64_t s = a.v + b.v;
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const {
    return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
  }
  Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
  Fp mul(Fp a, Fp b) const {
    auto q = static_cast<std::uint64_t>(static_cast<double>(a.v) *
                                        static_cast<double>(b.v) * inv_p_);
    auto r = static_cast<std::int64_t>(a.v * b.v - q * p_);
    if (r < 0) {
      r += static_cast<std::int64_t>(p_);
    } else if (r >= static_cast<std::int64_t>(p_)) {
      r -= static_cast<std::int64_t>(p_);
    }
    return Fp{static_cast<std::uint64_t>(r)};
  }
  Fp sqr(Fp a) const { return mul(a, a); }
  Fp pow(Fp a, u128 e) const;
  // Throws NotInvertible for zero.
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  // 0 for zero, 1 for nonzero squares, -1 otherwise.
  int legendre(Fp a) const;
  bool is_square(Fp a) const { return legendre(a) >= 0; }
  // True when a = u^k for some u in F_p.
  bool is_kth_power(Fp a, std::uint64_t k) const;
  // Tonelli-Shanks. Returns the root with the smaller representative.
  std::optional<Fp> sqrt(Fp a) const;

 private:
  std::uint64_t p_;
  double inv_p_;
  // p - 1 = q * 2^s with q odd, and a fixed non-residue z.
  std::uint64_t odd_part_;
  int two_adicity_;
  Fp nonresidue_;
};

std::uint64_t smallest_nonresidue(std::uint64_t p);
// Legendre symbol (a | p) for any signed a.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Element a0 + a1*w of F_{p^2} = F_p[w] / (w^2 - n).
struct Fp2 {
  Fp a0;
  Fp a1;
  friend constexpr bool operator==(const Fp2&, const Fp2&) = default;
};

class Fp2Field {
 public:
  // n is the smallest quadratic non-residue mod p.
  explicit Fp2Field(std::uint64_t p);

  const PrimeField& base() const { return fp_; }
  std::uint64_t characteristic() const { return fp_.modulus(); }
  Fp nonresidue() const { return n_; }

  Fp2 zero() const { return Fp2{}; }
  Fp2 one() const { return Fp2{Fp{1}, Fp{0}}; }
  Fp2 from_fp(Fp a) const { return Fp2{a, Fp{0}}; }
  Fp2 from_int(std::int64_t a) const { return from_fp(fp_.from_int(a)); }
  Fp2 make(std::uint64_t a0, std::uint64_t a1) const {
    return Fp2{fp_.from_uint(a0), fp_.from_uint(a1)};
  }
  bool in_base_field(const Fp2& a) const { return a.a1.v == 0; }
  bool is_zero(const Fp2& a) const { return a.a0.v == 0 && a.a1.v == 0; }

  Fp2 add(const Fp2& a, const Fp2& b) const {
    return Fp2{fp_.add(a.a0, b.a0), fp_.add(a.a1, b.a1)};
  }
  Fp2 sub(const Fp2& a, const Fp2& b) const {
    return Fp2{fp_.sub(a.a0, b.a0), fp_.sub(a.a1, b.a1)};
  }
  Fp2 neg(const Fp2& a) const { return Fp2{fp_.neg(a.a0), fp_.neg(a.a1)}; }
  Fp2 mul(const Fp2& a, const Fp2& b) const {
    Fp t0 = fp_.mul(a.a0, b.a0);
    Fp t1 = fp_.mul(a.a1, b.a1);
    Fp c0 = fp_.add(t0, fp_.mul(n_, t1));
    Fp c1 = fp_.add(fp_.mul(a.a0, b.a1), fp_.mul(a.a1, b.a0));
    return Fp2{c0, c1};
  }
  Fp2 mul_base(const Fp2& a, Fp b) const {
    return Fp2{fp_.mul(a.a0, b), fp_.mul(a.a1, b)};
  }
  Fp2 sqr(const Fp2& a) const { return mul(a, a); }
  Fp2 pow(const Fp2& a, u128 e) const;
  Fp2 inv(const Fp2& a) const;
  Fp2 div(const Fp2& a, const Fp2& b) const { return mul(a, inv(b)); }

  // x -> x^p, which is a0 - a1*w.
  Fp2 frobenius(const Fp2& a) const { return Fp2{a.a0, fp_.neg(a.a1)}; }
  Fp norm(const Fp2& a) const {
    return fp_.sub(fp_.sqr(a.a0), fp_.mul(n_, fp_.sqr(a.a1)));
  }
  bool is_square(const Fp2& a) const { return fp_.is_square(norm(a)); }
  std::optional<Fp2> sqrt(const Fp2& a) const;

  // Canonical total order: a0 + p * a1 as an integer.
  u128 key(const Fp2& a) const {
    return static_cast<u128>(a.a0.v) +
           static_cast<u128>(fp_.modulus()) * a.a1.v;
  }
  bool less(const Fp2& a, const Fp2& b) const { return key(a) < key(b); }
  // "a0+a1*w".
  std::string format(const Fp2& a) const;

 private:
  PrimeField fp_;
  Fp n_;
};

// Hash for Fp2 values inside one field (uses the raw limbs).
struct Fp2Hash {
  std::size_t operator()(const Fp2& a) const {
    std::uint64_t h = a.a0.v * 0x9E3779B97F4A7C15ULL;
    h ^= a.a1.v + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace isogenium

#endif  // ISOGENIUM_ARITH_HPP_
