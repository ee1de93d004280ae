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

#include "isogenium/arith.hpp"

#include <numeric>
#include <string>

#include "isogenium/errors.hpp"

namespace isogenium {
namespace {

std::uint64_t mulmod_u128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u128(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u128(r, a, m);
    a = mulmod_u128(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 5 || p >= (std::uint64_t{1} << kMaxPrimeBits) || !is_prime(p)) {
    throw InvalidPrime("characteristic must be a prime in [5, 2^50): " +
                       std::to_string(p));
  }
  inv_p_ = 1.0 / static_cast<double>(p);
  odd_part_ = p - 1;
  two_adicity_ = 0;
  while ((odd_part_ & 1) == 0) {
    odd_part_ >>= 1;
    ++two_adicity_;
  }
  std::uint64_t z = 2;
  while (legendre(Fp{z}) != -1) ++z;
  nonresidue_ = Fp{z};
}

Fp PrimeField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return Fp{static_cast<std::uint64_t>(r)};
}

Fp PrimeField::from_i128(i128 x) const {
  i128 r = x % static_cast<i128>(p_);
  if (r < 0) r += p_;
  return Fp{static_cast<std::uint64_t>(r)};
}

Fp PrimeField::from_decimal(std::string_view digits) const {
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("empty decimal literal");
  Fp acc{0};
  const Fp ten{10 % p_};
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad decimal literal");
    }
    acc = add(mul(acc, ten), from_uint(static_cast<std::uint64_t>(c - '0')));
  }
  return negative ? neg(acc) : acc;
}

Fp PrimeField::pow(Fp a, u128 e) const {
  Fp r{1};
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = sqr(a);
    e >>= 1;
  }
  return r;
}

Fp PrimeField::inv(Fp a) const {
  if (a.v == 0) throw NotInvertible("zero has no inverse in F_p");
  // Extended Euclid on signed 64-bit values; p < 2^50 so nothing overflows.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_);
  std::int64_t new_r = static_cast<std::int64_t>(a.v);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return Fp{static_cast<std::uint64_t>(t)};
}

int PrimeField::legendre(Fp a) const {
  if (a.v == 0) return 0;
  // Binary Jacobi symbol, faster than Euler's criterion.
  std::uint64_t x = a.v, m = p_;
  int result = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      std::uint64_t r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if ((x & 3) == 3 && (m & 3) == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

bool PrimeField::is_kth_power(Fp a, std::uint64_t k) const {
  if (a.v == 0) return true;
  std::uint64_t g = std::gcd(k, p_ - 1);
  return pow(a, (p_ - 1) / g).v == 1;
}

std::optional<Fp> PrimeField::sqrt(Fp a) const {
  int l = legendre(a);
  if (l == 0) return Fp{0};
  if (l < 0) return std::nullopt;
  int m = two_adicity_;
  Fp c = pow(nonresidue_, odd_part_);
  Fp t = pow(a, odd_part_);
  Fp r = pow(a, (odd_part_ + 1) / 2);
  while (t.v != 1) {
    int i = 0;
    Fp t2 = t;
    while (t2.v != 1) {
      t2 = sqr(t2);
      ++i;
    }
    Fp b = c;
    for (int j = 0; j < m - i - 1; ++j) b = sqr(b);
    m = i;
    c = sqr(b);
    t = mul(t, c);
    r = mul(r, b);
  }
  Fp other = neg(r);
  return other.v < r.v ? other : r;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  PrimeField f(p);
  std::uint64_t z = 2;
  while (f.legendre(Fp{z}) != -1) ++z;
  return z;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  PrimeField f(p);
  return f.legendre(f.from_int(a));
}

Fp2Field::Fp2Field(std::uint64_t p)
    : fp_(p), n_(Fp{smallest_nonresidue(p)}) {}

Fp2 Fp2Field::pow(const Fp2& a, u128 e) const {
  Fp2 r = one();
  Fp2 b = a;
  while (e != 0) {
    if (e & 1) r = mul(r, b);
    b = sqr(b);
    e >>= 1;
  }
  return r;
}

Fp2 Fp2Field::inv(const Fp2& a) const {
  Fp d = norm(a);
  if (d.v == 0) throw NotInvertible("zero has no inverse in F_p^2");
  Fp di = fp_.inv(d);
  return Fp2{fp_.mul(a.a0, di), fp_.neg(fp_.mul(a.a1, di))};
}

std::optional<Fp2> Fp2Field::sqrt(const Fp2& a) const {
  if (is_zero(a)) return zero();
  if (a.a1.v == 0) {
    if (auto s = fp_.sqrt(a.a0)) return Fp2{*s, Fp{0}};
    // a0 is a non-residue, so a0 / n is a residue and sqrt(a0) = s * w.
    auto s = fp_.sqrt(fp_.div(a.a0, n_));
    return Fp2{Fp{0}, *s};
  }
  auto s = fp_.sqrt(norm(a));
  if (!s) return std::nullopt;
  const Fp half = fp_.inv(Fp{2});
  Fp t = fp_.mul(fp_.add(a.a0, *s), half);
  if (!fp_.is_square(t)) t = fp_.mul(fp_.sub(a.a0, *s), half);
  Fp c = *fp_.sqrt(t);
  Fp d = fp_.div(a.a1, fp_.add(c, c));
  return Fp2{c, d};
}

std::string Fp2Field::format(const Fp2& a) const {
  return std::to_string(a.a0.v) + "+" + std::to_string(a.a1.v) + "*w";
}

}  // namespace isogenium
