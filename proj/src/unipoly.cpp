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

#include "isogenium/unipoly.hpp"

#include <algorithm>
#include <random>

#include "isogenium/errors.hpp"

namespace isogenium {
namespace poly {

Fp2 eval(const Fp2Field& f, const UniPoly& a, const Fp2& x) {
  Fp2 acc = f.zero();
  const auto& c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = f.add(f.mul(acc, x), *it);
  }
  return acc;
}

UniPoly add(const Fp2Field& f, const UniPoly& a, const UniPoly& b) {
  std::vector<Fp2> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Fp2 x = i < a.coeffs().size() ? a.coeffs()[i] : f.zero();
    Fp2 y = i < b.coeffs().size() ? b.coeffs()[i] : f.zero();
    c[i] = f.add(x, y);
  }
  return UniPoly(std::move(c));
}

UniPoly sub(const Fp2Field& f, const UniPoly& a, const UniPoly& b) {
  std::vector<Fp2> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Fp2 x = i < a.coeffs().size() ? a.coeffs()[i] : f.zero();
    Fp2 y = i < b.coeffs().size() ? b.coeffs()[i] : f.zero();
    c[i] = f.sub(x, y);
  }
  return UniPoly(std::move(c));
}

UniPoly mul(const Fp2Field& f, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Fp2> c(x.size() + y.size() - 1, f.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(x[i], y[j]));
    }
  }
  return UniPoly(std::move(c));
}

UniPoly scale(const Fp2Field& f, const UniPoly& a, const Fp2& s) {
  std::vector<Fp2> c = a.coeffs();
  for (auto& x : c) x = f.mul(x, s);
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const Fp2Field& f, const UniPoly& a,
                                   const UniPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Fp2> r = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  const Fp2 lead_inv = f.inv(b.lead());
  std::vector<Fp2> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree() - db; i >= 0; --i) {
    Fp2 t = f.mul(r[static_cast<std::size_t>(i + db)], lead_inv);
    q[static_cast<std::size_t>(i)] = t;
    if (t == f.zero()) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i + j)];
      slot = f.sub(slot, f.mul(t, d[static_cast<std::size_t>(j)]));
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly rem(const Fp2Field& f, const UniPoly& a, const UniPoly& b) {
  return divmod(f, a, b).second;
}

UniPoly monic(const Fp2Field& f, const UniPoly& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.lead()));
}

UniPoly gcd(const Fp2Field& f, UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

UniPoly derivative(const Fp2Field& f, const UniPoly& a) {
  if (a.degree() < 1) return UniPoly();
  std::vector<Fp2> c(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    c[i - 1] = f.mul_base(a.coeffs()[i], f.base().from_uint(i));
  }
  return UniPoly(std::move(c));
}

UniPoly powmod(const Fp2Field& f, const UniPoly& base, u128 e,
               const UniPoly& m) {
  UniPoly result = rem(f, UniPoly::constant(f.one()), m);
  UniPoly b = rem(f, base, m);
  while (e != 0) {
    if (e & 1) result = rem(f, mul(f, result, b), m);
    e >>= 1;
    if (e != 0) b = rem(f, mul(f, b, b), m);
  }
  return result;
}

UniPoly deflate(const Fp2Field& f, const UniPoly& a, const Fp2& r) {
  // Synthetic division by (Y - r).
  if (a.degree() < 1) return UniPoly();
  const auto& c = a.coeffs();
  std::vector<Fp2> q(c.size() - 1);
  Fp2 carry = f.zero();
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    carry = f.add(c[i], f.mul(carry, r));
    q[i - 1] = carry;
  }
  return UniPoly(std::move(q));
}

UniPoly from_roots(const Fp2Field& f, const std::vector<Fp2>& roots) {
  UniPoly acc = UniPoly::constant(f.one());
  for (const auto& r : roots) acc = mul(f, acc, UniPoly::linear_root(f, r));
  return acc;
}

}  // namespace poly

namespace {

void sort_by_key(const Fp2Field& f, std::vector<Fp2>& v) {
  std::sort(v.begin(), v.end(),
            [&](const Fp2& a, const Fp2& b) { return f.less(a, b); });
}

// Roots of a polynomial of degree at most 2.
void small_roots(const Fp2Field& f, const UniPoly& a, std::vector<Fp2>& out) {
  if (a.degree() == 1) {
    out.push_back(f.neg(f.div(a.coeff(0), a.coeff(1))));
    return;
  }
  if (a.degree() != 2) return;
  const Fp2& c0 = a.coeff(0);
  const Fp2& c1 = a.coeff(1);
  const Fp2& c2 = a.coeff(2);
  Fp2 disc = f.sub(f.sqr(c1), f.mul(f.from_int(4), f.mul(c2, c0)));
  auto s = f.sqrt(disc);
  if (!s) return;
  Fp2 denom_inv = f.inv(f.add(c2, c2));
  Fp2 r1 = f.mul(f.sub(*s, c1), denom_inv);
  Fp2 r2 = f.mul(f.sub(f.neg(*s), c1), denom_inv);
  out.push_back(r1);
  if (!(r1 == r2)) out.push_back(r2);
}

// `g` is monic, squarefree and splits into linear factors over F_{p^2}.
void split(const Fp2Field& f, const UniPoly& g, std::mt19937_64& rng,
           std::vector<Fp2>& out) {
  if (g.degree() <= 2) {
    small_roots(f, g, out);
    return;
  }
  const std::uint64_t p = f.characteristic();
  const u128 half_order = (static_cast<u128>(p) * p - 1) / 2;
  for (;;) {
    Fp2 delta = f.make(rng() % p, rng() % p);
    UniPoly shifted({delta, f.one()});
    UniPoly t = poly::powmod(f, shifted, half_order, g);
    UniPoly d =
        poly::gcd(f, poly::sub(f, t, UniPoly::constant(f.one())), g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split(f, d, rng, out);
      split(f, poly::divmod(f, g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fp2> distinct_roots(const Fp2Field& f, const UniPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("root search on the zero polynomial");
  std::vector<Fp2> out;
  UniPoly g = poly::monic(f, a);
  if (g.degree() <= 2) {
    small_roots(f, g, out);
  } else {
    const std::uint64_t p = f.characteristic();
    const UniPoly y({f.zero(), f.one()});
    UniPoly frob = poly::powmod(f, y, static_cast<u128>(p) * p, g);
    UniPoly split_part = poly::gcd(f, poly::sub(f, frob, y), g);
    // Fixed seed: the output is sorted, so only speed depends on it.
    std::mt19937_64 rng(0x5EED0F15u + static_cast<std::uint64_t>(g.degree()));
    split(f, split_part, rng, out);
  }
  sort_by_key(f, out);
  return out;
}

std::vector<Root> find_roots(const Fp2Field& f, const UniPoly& a) {
  std::vector<Root> result;
  for (const Fp2& r : distinct_roots(f, a)) {
    int m = 0;
    UniPoly cur = a;
    while (cur.degree() >= 1 && poly::eval(f, cur, r) == f.zero()) {
      cur = poly::deflate(f, cur, r);
      ++m;
    }
    result.push_back(Root{r, m});
  }
  return result;
}

std::vector<Root> find_roots_with_known(const Fp2Field& f, const UniPoly& a,
                                        const Fp2& known) {
  if (a.is_zero()) throw ZeroPolynomial("root search on the zero polynomial");
  UniPoly rest = poly::deflate(f, a, known);
  std::vector<Root> roots;
  if (rest.degree() >= 1) roots = find_roots(f, rest);
  auto it = std::find_if(roots.begin(), roots.end(),
                         [&](const Root& r) { return r.value == known; });
  if (it != roots.end()) {
    ++it->multiplicity;
  } else {
    roots.push_back(Root{known, 1});
    std::sort(roots.begin(), roots.end(), [&](const Root& x, const Root& y) {
      return f.less(x.value, y.value);
    });
  }
  return roots;
}

}  // namespace isogenium
