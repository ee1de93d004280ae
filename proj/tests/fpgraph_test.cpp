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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <json.hpp>

#include "gtest/gtest.h"
#include "isogenium/errors.hpp"
#include "isogenium/fpgraph.hpp"
#include "isogenium/modpoly.hpp"
#include "isogenium/spine.hpp"
#include "isogenium/ssgraph.hpp"

namespace isogenium {
namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// Brute-force isomorphism: search u in F_p^* with a2 = u^4 a1, b2 = u^6 b1.
bool brute_isomorphic(const PrimeField& f, const CurveModel& e1,
                      const CurveModel& e2) {
  for (std::uint64_t u = 1; u < f.modulus(); ++u) {
    const Fp x{u};
    const Fp u2 = f.sqr(x), u4 = f.sqr(u2), u6 = f.mul(u4, u2);
    if (f.mul(u4, e1.a) == e2.a && f.mul(u6, e1.b) == e2.b) return true;
  }
  return false;
}

std::uint64_t point_count(const PrimeField& f, const CurveModel& e) {
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < f.modulus(); ++x) {
    const Fp fx{x};
    const Fp rhs = f.add(f.mul(f.add(f.sqr(fx), e.a), fx), e.b);
    n += 1 + f.legendre(rhs);
  }
  return n;
}

std::size_t cubic_roots_by_scan(const PrimeField& f, const CurveModel& e) {
  std::size_t n = 0;
  for (std::uint64_t x = 0; x < f.modulus(); ++x) {
    const Fp fx{x};
    if (f.add(f.mul(f.add(f.sqr(fx), e.a), fx), e.b).v == 0) ++n;
  }
  return n;
}

std::vector<Fp> rational_js(const IsogenyMultiGraph& g) {
  std::vector<Fp> out;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (g.is_rational(i)) out.push_back(g.vertex(i).a0);
  }
  return out;
}

TEST(CurveModels, CanonicalPairHasRightJAndIsNotIsomorphic) {
  for (std::uint64_t p : primes_between(5, 300)) {
    const PrimeField f(p);
    const auto g = build_graph(p, 2);
    for (Fp j : rational_js(g)) {
      const auto [m0, m1] = canonical_models(f, j);
      EXPECT_EQ(j_invariant(f, m0), j) << p;
      EXPECT_EQ(j_invariant(f, m1), j) << p;
      EXPECT_FALSE(is_fp_isomorphic(f, m0, m1)) << p << " j=" << j.v;
      EXPECT_FALSE(brute_isomorphic(f, m0, m1)) << p << " j=" << j.v;
    }
  }
}

TEST(CurveModels, Known1728AndZeroModels) {
  const PrimeField f(83);
  const auto [a, b] = canonical_models(f, f.from_int(1728));
  EXPECT_EQ(a, (CurveModel{f.from_int(-1), Fp{0}}));
  EXPECT_EQ(b, (CurveModel{f.from_int(4), Fp{0}}));
  const auto [z0, z1] = canonical_models(f, Fp{0});
  const Fp n{smallest_nonresidue(83)};
  EXPECT_EQ(z0, (CurveModel{Fp{0}, Fp{1}}));
  EXPECT_EQ(z1, (CurveModel{Fp{0}, f.mul(n, f.sqr(n))}));
  EXPECT_FALSE(brute_isomorphic(f, z0, z1));
  EXPECT_THROW(canonical_models(PrimeField(13), PrimeField(13).from_int(1728)),
               NotSupersingular);
  EXPECT_THROW(canonical_models(PrimeField(13), Fp{0}), NotSupersingular);
}

TEST(CurveModels, IsomorphismAgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {23ull, 59ull, 83ull, 101ull, 131ull}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      CurveModel e{Fp{rng() % p}, Fp{rng() % p}};
      if (f.add(f.mul(f.from_int(4), f.mul(e.a, f.sqr(e.a))),
                f.mul(f.from_int(27), f.sqr(e.b)))
              .v == 0) {
        continue;
      }
      const Fp u{1 + rng() % (p - 1)};
      const Fp u2 = f.sqr(u);
      const Fp s = trial % 2 ? u2 : f.mul(u2, Fp{smallest_nonresidue(p)});
      CurveModel t{f.mul(f.sqr(s), e.a), f.mul(f.mul(f.sqr(s), s), e.b)};
      EXPECT_EQ(is_fp_isomorphic(f, e, t), brute_isomorphic(f, e, t))
          << p << " " << e.a.v << " " << e.b.v;
      EXPECT_TRUE(is_fp_isomorphic(f, e, e));
    }
  }
  const PrimeField f(83);
  EXPECT_THROW(is_fp_isomorphic(f, CurveModel{f.from_int(-1), Fp{0}},
                                CurveModel{Fp{0}, Fp{1}}),
               DifferentJInvariants);
}

TEST(Velu, CodomainIsIsogenousAndOnModularCurve) {
  for (int ell : {2, 3}) {
    for (std::uint64_t p : primes_between(5, 200)) {
      const PrimeField f(p);
      const Fp2Field f2(p);
      const ReducedModularPolynomial phi(f2, ell);
      std::mt19937_64 rng(p * 10 + ell);
      for (int trial = 0; trial < 20; ++trial) {
        CurveModel e{Fp{rng() % p}, Fp{rng() % p}};
        if (f.add(f.mul(f.from_int(4), f.mul(e.a, f.sqr(e.a))),
                  f.mul(f.from_int(27), f.sqr(e.b)))
                .v == 0) {
          continue;
        }
        for (Fp x0 : rational_kernels(f, e, ell)) {
          const CurveModel c = velu_codomain(f, e, x0, ell);
          EXPECT_EQ(phi.evaluate(f2.from_fp(j_invariant(f, e)),
                                 f2.from_fp(j_invariant(f, c))),
                    f2.zero());
          // Isogenous curves over F_p have the same number of points.
          EXPECT_EQ(point_count(f, e), point_count(f, c)) << p;
        }
      }
    }
  }
}

TEST(Velu, KnownKernels) {
  const PrimeField f(83);
  const CurveModel e{f.from_int(-1), Fp{0}};
  auto ks = rational_kernels(f, e, 2);
  EXPECT_EQ(ks, (std::vector<Fp>{Fp{0}, Fp{1}, f.from_int(-1)}));
  const CurveModel twist{f.from_int(4), Fp{0}};
  EXPECT_EQ(rational_kernels(f, twist, 2), std::vector<Fp>{Fp{0}});
  EXPECT_TRUE(is_fp_isomorphic(f, velu_codomain(f, e, Fp{0}, 2), twist));
  const auto [z0, z1] = canonical_models(f, Fp{0});
  const auto zk = rational_kernels(f, z0, 2);
  ASSERT_EQ(zk.size(), 1u);
  EXPECT_EQ(j_invariant(f, velu_codomain(f, z0, zk.front(), 2)),
            f.from_int(54000));
  EXPECT_THROW(velu_codomain(f, e, Fp{5}, 2), KernelNotOnCurve);
  EXPECT_THROW(velu_codomain(f, e, Fp{5}, 3), KernelNotOnCurve);
}

TEST(Levels, SurfaceIffFullTwoTorsion) {
  for (std::uint64_t p : primes_between(5, 400)) {
    const PrimeField f(p);
    for (Fp j : rational_js(build_graph(p, 2))) {
      const auto [m0, m1] = canonical_models(f, j);
      for (const CurveModel& m : {m0, m1}) {
        const Level lv = curve_level(f, m);
        if (p % 4 == 1) {
          EXPECT_EQ(lv, Level::kFlat);
        } else {
          EXPECT_EQ(lv == Level::kSurface, cubic_roots_by_scan(f, m) == 3)
              << p << " " << j.v;
        }
      }
    }
  }
}

TEST(FpGraph, OnlyJ1728ChangesLevelAcrossTwins) {
  for (std::uint64_t p : primes_between(7, 3000)) {
    if (p % 4 != 3) continue;
    const FpGraph g = build_fp_graph(build_graph(p, 2));
    const PrimeField f(p);
    for (std::uint32_t v = 0; v < g.vertices.size(); v += 2) {
      const bool differ = g.vertices[v].level != g.vertices[v + 1].level;
      EXPECT_EQ(differ, g.vertices[v].j == f.from_int(1728))
          << p << " j=" << g.vertices[v].j.v;
    }
    for (std::int64_t j : {0, -3375}) {
      if (f.from_int(j) == f.from_int(1728)) continue;
      if (auto k = g.index_of(f.from_int(j), 0)) {
        EXPECT_EQ(g.vertices[*k].level, Level::kFloor) << p << " j=" << j;
        EXPECT_EQ(g.vertices[*k + 1].level, Level::kFloor) << p << " j=" << j;
      }
    }
  }
}

std::map<std::uint32_t, std::vector<std::uint32_t>> groups_of(const FpGraph& g) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> out;
  const auto comp = g.components();
  for (std::uint32_t v = 0; v < comp.size(); ++v) out[comp[v]].push_back(v);
  return out;
}

std::map<std::uint32_t, std::size_t> edge_counts(const FpGraph& g) {
  std::map<std::uint32_t, std::size_t> out;
  const auto comp = g.components();
  for (const auto& [u, v] : g.edges) ++out[comp[u]];
  return out;
}

TEST(FpGraph, FlatComponentsAreSingleEdges) {
  for (std::uint64_t p : primes_between(11, 3000)) {
    if (p % 4 != 1) continue;
    const FpGraph g = build_fp_graph(build_graph(p, 2));
    const auto edges = edge_counts(g);
    for (const auto& [id, members] : groups_of(g)) {
      EXPECT_EQ(members.size(), 2u) << p;
      EXPECT_EQ(edges.at(id), 1u) << p;
    }
  }
}

TEST(FpGraph, ThreeModEightGivesClaws) {
  for (std::uint64_t p : primes_between(11, 3000)) {
    if (p % 8 != 3) continue;
    const FpGraph g = build_fp_graph(build_graph(p, 2));
    const auto adj = g.adjacency();
    const auto edges = edge_counts(g);
    for (const auto& [id, members] : groups_of(g)) {
      ASSERT_EQ(members.size(), 4u) << p;
      EXPECT_EQ(edges.at(id), 3u) << p;
      std::size_t surface = 0;
      for (std::uint32_t v : members) {
        if (g.vertices[v].level == Level::kSurface) {
          ++surface;
          EXPECT_EQ(adj[v].size(), 3u);
        } else {
          EXPECT_EQ(adj[v].size(), 1u);
        }
      }
      EXPECT_EQ(surface, 1u) << p;
    }
  }
}

TEST(FpGraph, SevenModEightVolcanoes) {
  for (std::uint64_t p : primes_between(23, 4000)) {
    if (p % 8 != 7) continue;
    const FpGraph g = build_fp_graph(build_graph(p, 2));
    const auto adj = g.adjacency();
    const auto groups = groups_of(g);
    std::set<std::size_t> cycle_lengths;
    for (const auto& [id, members] : groups) {
      std::size_t surface = 0, floor = 0;
      for (std::uint32_t v : members) {
        if (g.vertices[v].level == Level::kSurface) {
          ++surface;
        } else {
          ++floor;
          EXPECT_EQ(adj[v].size(), 1u) << p;
        }
      }
      EXPECT_EQ(surface, floor) << p;
      cycle_lengths.insert(surface);
    }
    ASSERT_EQ(cycle_lengths.size(), 1u) << p;
    const std::size_t n = *cycle_lengths.begin();
    EXPECT_EQ(n * groups.size(),
              class_number(-static_cast<std::int64_t>(p)))
        << p;
    EXPECT_EQ(n, two_class_order(p)) << p;
  }
}

TEST(FpGraph, Prime431Volcanoes) {
  const FpGraph g = build_fp_graph(build_graph(431, 2));
  const auto groups = groups_of(g);
  ASSERT_EQ(groups.size(), 3u);
  for (const auto& [id, members] : groups) {
    std::size_t surface = 0;
    for (std::uint32_t v : members) {
      surface += g.vertices[v].level == Level::kSurface;
    }
    EXPECT_EQ(surface, 7u);
    EXPECT_EQ(members.size(), 14u);
  }
}

TEST(FpGraph, DegreeThreeComponentsAreCycles) {
  for (std::uint64_t p : primes_between(5, 3000)) {
    const FpGraph g = build_fp_graph(build_graph(p, 3));
    const auto edges = edge_counts(g);
    for (const auto& [id, members] : groups_of(g)) {
      const std::size_t e = edges.count(id) ? edges.at(id) : 0;
      EXPECT_TRUE(e == members.size() || (members.size() == 1 && e == 0))
          << p << " size " << members.size() << " edges " << e;
    }
    std::vector<std::size_t> degree(g.vertices.size(), 0);
    for (const auto& [u, v] : g.edges) {
      ++degree[u];
      ++degree[v];
    }
    for (std::size_t d : degree) EXPECT_TRUE(d == 0 || d == 2) << p;
  }
}

TEST(FpGraph, EdgesProjectToFullGraph) {
  for (int ell : {2, 3}) {
    for (std::uint64_t p : primes_between(5, 1500)) {
      const auto full = build_graph(p, ell);
      const FpGraph g = build_fp_graph(full);
      ASSERT_EQ(g.vertices.size(), 2 * rational_js(full).size());
      const Fp2Field& f2 = full.field();
      for (const auto& [u, v] : g.edges) {
        const auto a = full.index_of(f2.from_fp(g.vertices[u].j));
        const auto b = full.index_of(f2.from_fp(g.vertices[v].j));
        ASSERT_TRUE(a && b);
        EXPECT_GT(full.multiplicity(*a, *b), 0u) << p;
      }
      for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
        EXPECT_EQ(g.twin(v), v ^ 1u);
        EXPECT_EQ(g.vertices[v].twist_tag, static_cast<int>(v & 1u));
        EXPECT_EQ(j_invariant(PrimeField(p), g.vertices[v].model),
                  g.vertices[v].j);
        EXPECT_EQ(g.index_of(g.vertices[v].j, g.vertices[v].twist_tag), v);
      }
    }
  }
}

TEST(ClassNumber, KnownValuesAndErrors) {
  EXPECT_EQ(class_number(-431), 21u);
  EXPECT_EQ(class_number(-3), 1u);
  EXPECT_EQ(class_number(-4), 1u);
  EXPECT_EQ(class_number(-23), 3u);
  EXPECT_EQ(class_number(-4 * 19993), 60u);
  EXPECT_EQ(class_number(-19991), 199u);
  EXPECT_THROW(class_number(-5), InvalidDiscriminant);
  EXPECT_THROW(class_number(0), InvalidDiscriminant);
  EXPECT_THROW(class_number(8), InvalidDiscriminant);
}

TEST(FpGraph, JsonSchema) {
  const FpGraph g = build_fp_graph(build_graph(83, 2));
  const auto doc = nlohmann::json::parse(fp_graph_to_json(g));
  EXPECT_EQ(doc["p"], 83);
  EXPECT_EQ(doc["ell"], 2);
  ASSERT_EQ(doc["vertices"].size(), g.vertices.size());
  EXPECT_EQ(doc["vertices"][0]["twist_tag"], 0);
  EXPECT_TRUE(doc["vertices"][0]["level"].is_string());
  EXPECT_EQ(doc["edges"].size(), g.edges.size());
  EXPECT_EQ(fp_graph_to_json(g), fp_graph_to_json(build_fp_graph(build_graph(83, 2))));
}

}  // namespace
}  // namespace isogenium
