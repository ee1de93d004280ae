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

// Supersingular j-invariants from the Legendre family
//   y^2 = x (x - 1) (x - t),  j(t) = 256 (t^2 - t + 1)^3 / (t^2 (t - 1)^2).
// The curve is supersingular iff H(t) = sum_i C(m, i)^2 t^i vanishes, with
// m = (p - 1) / 2. Eliminating t gives a polynomial in j whose roots are the
// supersingular j-invariants; it is recovered by evaluation at m + 1 points
// and interpolation, all over F_p.

#include <algorithm>
#include <string>
#include <vector>

#include "isogenium/errors.hpp"
#include "isogenium/ssgraph.hpp"
#include "isogenium/unipoly.hpp"

namespace isogenium {
namespace {

using FpPoly = std::vector<Fp>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly rem(const PrimeField& f, FpPoly a, const FpPoly& b) {
  const int db = deg(b);
  const Fp lead_inv = f.inv(b.back());
  for (int i = deg(a) - db; i >= 0; --i) {
    Fp t = f.mul(a[static_cast<std::size_t>(i + db)], lead_inv);
    if (t.v == 0) continue;
    for (int k = 0; k <= db; ++k) {
      auto& slot = a[static_cast<std::size_t>(i + k)];
      slot = f.sub(slot, f.mul(t, b[static_cast<std::size_t>(k)]));
    }
  }
  if (static_cast<int>(a.size()) > db) a.resize(static_cast<std::size_t>(db));
  trim(a);
  return a;
}

FpPoly quotient(const PrimeField& f, FpPoly a, const FpPoly& b) {
  const int db = deg(b);
  const int dq = deg(a) - db;
  if (dq < 0) return {};
  FpPoly q(static_cast<std::size_t>(dq + 1));
  const Fp lead_inv = f.inv(b.back());
  for (int i = dq; i >= 0; --i) {
    Fp t = f.mul(a[static_cast<std::size_t>(i + db)], lead_inv);
    q[static_cast<std::size_t>(i)] = t;
    for (int k = 0; k <= db; ++k) {
      auto& slot = a[static_cast<std::size_t>(i + k)];
      slot = f.sub(slot, f.mul(t, b[static_cast<std::size_t>(k)]));
    }
  }
  trim(q);
  return q;
}

FpPoly gcd(const PrimeField& f, FpPoly a, FpPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Resultant via the Euclidean recurrence
//   Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, a mod b).
Fp resultant(const PrimeField& f, FpPoly a, FpPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return Fp{0};
  Fp acc{1};
  for (;;) {
    const int da = deg(a);
    const int db = deg(b);
    if (db == 0) return f.mul(acc, f.pow(b[0], static_cast<u128>(da)));
    if (da == 0) return f.mul(acc, f.pow(a[0], static_cast<u128>(db)));
    FpPoly r = rem(f, a, b);
    if (r.empty()) return Fp{0};
    const int dr = deg(r);
    if ((da & 1) && (db & 1)) acc = f.neg(acc);
    acc = f.mul(acc, f.pow(b.back(), static_cast<u128>(da - dr)));
    a = std::move(b);
    b = std::move(r);
  }
}

// Polynomial of degree <= n through (k, ys[k]) for k = 0..n.
FpPoly interpolate(const PrimeField& f, const std::vector<Fp>& ys) {
  const std::size_t n = ys.size() - 1;
  // master = prod_{i=0..n} (s - i)
  FpPoly master{Fp{1}};
  for (std::size_t i = 0; i <= n; ++i) {
    FpPoly next(master.size() + 1, Fp{0});
    const Fp c = f.neg(f.from_uint(i));
    for (std::size_t k = 0; k < master.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], master[k]);
      next[k] = f.add(next[k], f.mul(master[k], c));
    }
    master = std::move(next);
  }
  std::vector<Fp> fact(n + 1);
  fact[0] = Fp{1};
  for (std::size_t i = 1; i <= n; ++i) fact[i] = f.mul(fact[i - 1], f.from_uint(i));

  FpPoly out(n + 1, Fp{0});
  FpPoly basis(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (ys[k].v == 0) continue;
    // master / (s - k) by synthetic division.
    Fp carry{0};
    const Fp root = f.from_uint(k);
    for (std::size_t i = n + 1; i >= 1; --i) {
      carry = f.add(master[i], f.mul(carry, root));
      basis[i - 1] = carry;
    }
    // prod_{i != k} (k - i) = k! (n - k)! (-1)^(n - k).
    Fp denom = f.mul(fact[k], fact[n - k]);
    if ((n - k) & 1) denom = f.neg(denom);
    const Fp scale = f.div(ys[k], denom);
    for (std::size_t i = 0; i <= n; ++i) {
      out[i] = f.add(out[i], f.mul(basis[i], scale));
    }
  }
  trim(out);
  return out;
}

}  // namespace

std::vector<Fp2> supersingular_oracle(std::uint64_t p) {
  if (p > kOracleMaxPrime) {
    throw OracleTooLarge("oracle limited to p <= " +
                         std::to_string(kOracleMaxPrime));
  }
  const Fp2Field f2(p);
  const PrimeField& f = f2.base();
  const std::uint64_t m = (p - 1) / 2;

  FpPoly hasse(m + 1);
  Fp binom{1};
  for (std::uint64_t i = 0; i <= m; ++i) {
    hasse[i] = f.sqr(binom);
    binom = f.div(f.mul(binom, f.from_uint(m - i)), f.from_uint(i + 1));
  }
  // t^2 (t - 1)^2 and 256 (t^2 - t + 1)^3.
  const FpPoly lam_den = {Fp{0}, Fp{0}, Fp{1}, f.from_int(-2), Fp{1}};
  FpPoly lam_num;
  for (std::int64_t c : {1, -3, 6, -7, 6, -3, 1}) {
    lam_num.push_back(f.from_int(256 * c));
  }

  std::vector<Fp> values(m + 1);
  for (std::uint64_t k = 0; k <= m; ++k) {
    const Fp s = f.from_uint(k);
    FpPoly g(7);
    for (std::size_t i = 0; i < 7; ++i) {
      Fp a = i < lam_den.size() ? f.mul(s, lam_den[i]) : Fp{0};
      g[i] = f.sub(a, lam_num[i]);
    }
    values[k] = resultant(f, hasse, g);
  }
  FpPoly r = interpolate(f, values);

  FpPoly dr;
  for (std::size_t i = 1; i < r.size(); ++i) {
    dr.push_back(f.mul(r[i], f.from_uint(i)));
  }
  trim(dr);
  FpPoly radical = quotient(f, r, gcd(f, r, dr));

  std::vector<Fp2> coeffs;
  for (Fp c : radical) coeffs.push_back(f2.from_fp(c));
  std::vector<Fp2> roots = distinct_roots(f2, UniPoly(std::move(coeffs)));

  const Fp2 zero = f2.zero();
  const Fp2 j1728 = f2.from_int(1728);
  std::erase_if(roots, [&](const Fp2& x) { return x == zero || x == j1728; });
  if (p % 3 == 2) roots.push_back(zero);
  if (p % 4 == 3) roots.push_back(j1728);
  std::sort(roots.begin(), roots.end(),
            [&](const Fp2& a, const Fp2& b) { return f2.less(a, b); });
  return roots;
}

}  // namespace isogenium
