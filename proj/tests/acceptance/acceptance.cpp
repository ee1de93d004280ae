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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. Pass criterion numbers as arguments
// to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "isogenium/bitbfs.hpp"
#include "isogenium/errors.hpp"
#include "isogenium/fpgraph.hpp"
#include "isogenium/metrics.hpp"
#include "isogenium/modpoly.hpp"
#include "isogenium/spine.hpp"
#include "isogenium/ssgraph.hpp"
#include "isogenium/unipoly.hpp"
#include "isogenium_cli/cli.hpp"

namespace isogenium {
namespace {

// Ranges and tolerances.
constexpr std::uint64_t kCountLimit = 5000;
constexpr std::uint64_t kOracleLimit = 2000;
constexpr std::uint64_t kSpineLimit = 5000;
constexpr std::uint64_t kTheoremLimit2 = 5000;
constexpr std::uint64_t kTheoremLimit3 = 2000;
constexpr std::uint64_t kZeroLimit = 5000;
constexpr std::uint64_t kMeansFrom = 10007;
constexpr std::uint64_t kMeansTo = 20011;
constexpr double kMeansTolerance = 0.01;
constexpr std::uint64_t kDiameterFrom = 50000;
constexpr std::uint64_t kDiameterTo = 100000;
constexpr std::size_t kDiameterPrimes = 10;
constexpr std::uint32_t kDiameterLow = 14;
constexpr std::uint32_t kDiameterHigh = 16;
constexpr std::size_t kOppositeSamples = 1000;
constexpr std::uint64_t kOppositeSeed = 0;
constexpr double kOppositeTolerance = 40;
constexpr double kSpineDistanceTolerance = 0.7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::uint64_t spine_formula(std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  if (p % 4 == 1) return class_number(-4 * sp) / 2;
  if (p % 8 == 7) return class_number(-sp);
  return 2 * class_number(-sp);
}

unsigned workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

Outcome vertex_counts() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t p : primes_between(5, kCountLimit)) {
    for (int ell : {2, 3}) {
      const auto g = build_graph(p, ell);
      ++checked;
      if (g.size() != expected_vertex_count(p)) {
        o.pass = false;
        o.detail += " p=" + std::to_string(p) + "/ell=" + std::to_string(ell);
      }
    }
  }
  o.detail = std::to_string(checked) + " graphs" + o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t p : primes_between(5, kOracleLimit)) {
    const auto oracle = supersingular_oracle(p);
    for (int ell : {2, 3}) {
      const auto g = build_graph(p, ell);
      std::vector<Fp2> built = g.vertices();
      const Fp2Field& f = g.field();
      std::sort(built.begin(), built.end(),
                [&](const Fp2& a, const Fp2& b) { return f.less(a, b); });
      ++checked;
      if (built != oracle) {
        o.pass = false;
        o.detail += " p=" + std::to_string(p) + "/ell=" + std::to_string(ell);
      }
    }
  }
  o.detail = std::to_string(checked) + " graphs" + o.detail;
  return o;
}

Outcome spine_sizes() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t p : primes_between(5, kSpineLimit)) {
    const auto s = extract_spine(build_graph(p, 2));
    ++checked;
    if (s.size() != spine_formula(p)) {
      o.pass = false;
      o.detail += " p=" + std::to_string(p);
    }
  }
  const auto a = extract_spine(build_graph(19991, 2)).size();
  const auto b = extract_spine(build_graph(19993, 2)).size();
  o.pass = o.pass && a == 199 && b == 30;
  o.detail = std::to_string(checked) + " primes; |S(19991)|=" +
             std::to_string(a) + " |S(19993)|=" + std::to_string(b) + o.detail;
  return o;
}

Outcome structure_theorems() {
  Outcome o;
  std::size_t checked = 0;
  auto run = [&](std::uint64_t p, int ell) {
    const auto g = build_graph(p, ell);
    ++checked;
    try {
      const auto r = project_and_classify(build_fp_graph(g), extract_spine(g),
                                          ClassifyMode::kStrict);
      const auto c = sfa_theorem_check(r);
      if (!c.ok) {
        o.pass = false;
        o.detail += " p=" + std::to_string(p) + "/ell=" + std::to_string(ell) +
                    ":" + c.violations.front();
      }
    } catch (const ClassificationIncomplete& e) {
      o.pass = false;
      o.detail += std::string(" ") + e.what();
    }
  };
  for (std::uint64_t p : primes_between(5, kTheoremLimit2)) run(p, 2);
  for (std::uint64_t p : primes_between(5, kTheoremLimit3)) {
    if (p % 12 == 11) run(p, 3);
  }
  o.detail = std::to_string(checked) + " (p, ell) cases, zero unexplained" + o.detail;
  return o;
}

TransitionReport classify(std::uint64_t p, int ell) {
  const auto g = build_graph(p, ell);
  return project_and_classify(build_fp_graph(g), extract_spine(g),
                              ClassifyMode::kStrict);
}

std::vector<std::vector<std::uint64_t>> js_of(const TransitionReport& r,
                                              EventKind kind) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& e : r.events) {
    if (e.kind == kind) out.push_back(e.js);
  }
  return out;
}

Outcome golden_transitions() {
  Outcome o;
  using JList = std::vector<std::vector<std::uint64_t>>;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      o.pass = false;
      o.detail += " " + what;
    }
  };
  const auto r431 = classify(431, 2);
  expect(r431.count(EventKind::kFold) == 1 && r431.count(EventKind::kStack) == 1 &&
             js_of(r431, EventKind::kAttachEdge) == JList{{150, 189}},
         "431");
  const auto r239 = classify(239, 2);
  expect(js_of(r239, EventKind::kAttachEdge) == JList{{68, 107}}, "239");
  const auto r83 = classify(83, 3);
  expect(js_of(r83, EventKind::kAttachAlongJ) == JList{{68}}, "83");
  const auto r71 = classify(71, 3);
  bool loop48 = false;
  for (const auto& e : r71.events) {
    loop48 = loop48 || (e.kind == EventKind::kNewLoop &&
                        e.js == std::vector<std::uint64_t>{48} && e.multiplicity == 2);
  }
  expect(js_of(r71, EventKind::kAttachEdge) == JList{{17, 41}, {40, 66}} && loop48,
         "71");
  if (o.pass) {
    o.detail = "431: fold + stack of two + attach(150,189); 239: attach(68,107); "
               "83: along 68; 71: attach {17,41},{40,66}, double loop at 48";
  }
  return o;
}

Outcome exceptional_attachment() {
  Outcome o;
  const std::uint64_t p = 53639;
  const auto roots = attachment_roots(p);
  const bool roots_ok = roots && roots->first.v == 30505 && roots->second.v == 46665;
  const auto g = build_graph(p, 2);
  const auto gfp = build_fp_graph(g);
  const auto r = project_and_classify(gfp, extract_spine(g));
  const bool no_attach = r.count(EventKind::kAttachEdge) == 0;
  // Distance between the two root vertices in the rational graph, over the
  // twist choices that share a component.
  const CsrGraph csr = csr_from_lists(gfp.adjacency());
  const PrimeField f(p);
  std::int32_t best = kUnreachable;
  for (int ta = 0; ta < 2; ++ta) {
    const std::uint32_t src[] = {*gfp.index_of(f.from_int(30505), ta)};
    const auto d = bfs_from(csr, src);
    for (int tb = 0; tb < 2; ++tb) {
      const auto v = d[*gfp.index_of(f.from_int(46665), tb)];
      if (v != kUnreachable && (best == kUnreachable || v < best)) best = v;
    }
  }
  o.pass = roots_ok && no_attach && best == 48;
  o.detail = std::string("roots ") + (roots_ok ? "(30505, 46665)" : "wrong") +
             ", attach_edge events " +
             std::to_string(r.count(EventKind::kAttachEdge)) +
             ", internal_edge events " +
             std::to_string(r.count(EventKind::kInternalEdge)) +
             ", rational-graph distance " + std::to_string(best) +
             " (expected 48)";
  return o;
}

Outcome zero_proportions() {
  Outcome o;
  std::set<std::pair<std::uint64_t, int>> zero;
  for (std::uint64_t p : primes_between(5, kZeroLimit)) {
    for (int ell : {2, 3}) {
      const auto pr = isogenous_conjugate_proportion(build_graph(p, ell));
      if (pr.defined() && pr.count == 0) zero.insert({p, ell});
    }
  }
  const std::set<std::pair<std::uint64_t, int>> want = {{101, 2}, {131, 2}};
  o.pass = zero == want;
  o.detail = "zero at";
  for (const auto& [p, ell] : zero) {
    o.detail += " (" + std::to_string(p) + "," + std::to_string(ell) + ")";
  }
  return o;
}

Outcome mod12_means() {
  Outcome o;
  const std::map<int, std::map<int, double>> reference = {
      {2, {{1, 0.043551}, {5, 0.021969}, {7, 0.043375}, {11, 0.022244}}},
      {3, {{1, 0.058526}, {5, 0.059034}, {7, 0.035620}, {11, 0.036107}}},
  };
  for (int ell : {2, 3}) {
    cli::ExperimentConfig config;
    config.primes.from = kMeansFrom;
    config.primes.to = kMeansTo;
    config.ell = ell;
    config.experiments = {cli::Experiment::kConjugate};
    config.workers = workers();
    const auto result = cli::sweep(config);
    std::map<int, double> mean;
    for (const auto& row : congruence_aggregate(result.records, 12)) {
      if (row.metric == "conjugate_adjacent_proportion") mean[row.residue] = row.mean;
    }
    bool ordered;
    if (ell == 2) {
      ordered = std::min(mean[1], mean[7]) > std::max(mean[5], mean[11]);
    } else {
      ordered = std::min(mean[1], mean[5]) > std::max(mean[7], mean[11]);
    }
    o.detail += "ell=" + std::to_string(ell) + (ordered ? " ordered" : " NOT ordered");
    for (const auto& [res, ref] : reference.at(ell)) {
      const bool close = std::abs(mean[res] - ref) <= kMeansTolerance;
      o.pass = o.pass && close;
      o.detail += " " + std::to_string(res) + ":" + fmt(mean[res]) + "/" +
                  fmt(ref) + (close ? "" : "!");
    }
    o.pass = o.pass && ordered;
    o.detail += "; ";
  }
  o.detail += "(measured/reference, ! = outside +-" + fmt(kMeansTolerance, 2) + ")";
  return o;
}

Outcome diameters() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t p : primes_between(5, kCountLimit)) {
    for (int ell : {2, 3}) {
      const auto g = build_graph(p, ell);
      ++checked;
      if (diameter(g).value < diameter_lower_bound(p, ell)) {
        o.pass = false;
        o.detail += " bound p=" + std::to_string(p) + "/ell=" + std::to_string(ell);
      }
    }
  }
  const auto pool = primes_between(kDiameterFrom + 1, kDiameterTo - 1);
  SampleRng rng(0);
  std::set<std::uint64_t> picked;
  while (picked.size() < kDiameterPrimes) picked.insert(pool[rng.below(pool.size())]);
  std::string list;
  for (std::uint64_t p : picked) {
    const auto g = build_graph(p, 2);
    const auto d = diameter(g);
    ++checked;
    const bool ok = d.value >= kDiameterLow && d.value <= kDiameterHigh &&
                    d.value >= diameter_lower_bound(p, 2);
    o.pass = o.pass && ok;
    list += " " + std::to_string(p) + ":" + std::to_string(d.value) + (ok ? "" : "!");
  }
  o.detail = std::to_string(checked) + " graphs above the bound; sampled" + list +
             o.detail;
  return o;
}

Outcome opposite_pairs() {
  Outcome o;
  const std::map<std::uint64_t, double> reference = {{19991, 266}, {19993, 112}};
  for (const auto& [p, ref] : reference) {
    const auto g = build_graph(p, 2);
    const auto s = extract_spine(g);
    const auto arb = opposite_pair_proportion(
        g, s, sample_arbitrary_pairs(g, kOppositeSamples, kOppositeSeed));
    const auto conj = opposite_pair_proportion(
        g, s, sample_conjugate_pairs(g, kOppositeSamples, kOppositeSeed));
    const bool close = std::abs(static_cast<double>(arb.count) - ref) <= kOppositeTolerance;
    const double ratio = conj.value() / arb.value();
    o.pass = o.pass && close && ratio > 1.0;
    o.detail += std::to_string(p) + ": arbitrary " + std::to_string(arb.count) + "/" +
                fmt(ref, 0) + (close ? "" : "!") + ", conjugate " +
                std::to_string(conj.count) + ", ratio " + fmt(ratio, 3) + "; ";
  }
  return o;
}

Outcome spine_distance_means() {
  Outcome o;
  const std::map<std::uint64_t, double> reference = {{19991, 3.06}, {19993, 5.80}};
  for (const auto& [p, ref] : reference) {
    const auto g = build_graph(p, 2);
    const auto s = extract_spine(g);
    const auto d = distance_to_spine(g, s.members);
    const bool close = std::abs(d.mean() - ref) <= kSpineDistanceTolerance;
    o.pass = o.pass && close;
    o.detail += std::to_string(p) + ": mean " + fmt(d.mean(), 3) + " vs " +
                fmt(ref, 2) + (close ? "" : "!") + " (log2(N/M) = " +
                fmt(*d.find_metadata("expected_mean"), 3) + "); ";
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  auto fail = [&](const std::string& what) {
    o.pass = false;
    o.detail += " " + what;
  };
  std::mt19937_64 rng(2026);
  // Field axioms over F_p and F_{p^2}.
  for (std::uint64_t p : {5ull, 431ull, 1000003ull, 1125899906842597ull}) {
    const PrimeField f(p);
    const Fp2Field f2(p);
    for (int i = 0; i < 2000; ++i) {
      const Fp a{rng() % p}, b{rng() % p}, c{rng() % p};
      if (!(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))) ||
          !(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))) ||
          (a.v != 0 && !(f.mul(a, f.inv(a)) == Fp{1}))) {
        fail("F_p axioms at p=" + std::to_string(p));
        break;
      }
      const Fp2 x = f2.make(a.v, b.v), y = f2.make(c.v, a.v), z = f2.make(b.v, c.v);
      if (!(f2.mul(x, f2.add(y, z)) == f2.add(f2.mul(x, y), f2.mul(x, z))) ||
          !(f2.mul(f2.mul(x, y), z) == f2.mul(x, f2.mul(y, z))) ||
          (!f2.is_zero(x) && !(f2.mul(x, f2.inv(x)) == f2.one()))) {
        fail("F_p2 axioms at p=" + std::to_string(p));
        break;
      }
    }
  }
  // Root multiplicities: (Y - r)^m divides Phi(j, Y) exactly, multiplicities
  // sum to ell + 1 and equal the edge multiplicities.
  std::size_t vertices = 0;
  for (std::uint64_t p : primes_between(5, 400)) {
    for (int ell : {2, 3}) {
      const auto g = build_graph(p, ell);
      const Fp2Field& f = g.field();
      for (std::uint32_t v = 0; v < g.size(); ++v) {
        ++vertices;
        const UniPoly phi = phi_specialize(f, ell, g.vertex(v));
        int total = 0;
        for (const Root& r : find_roots(f, phi)) {
          total += r.multiplicity;
          UniPoly power = UniPoly::constant(f.one());
          for (int k = 0; k < r.multiplicity; ++k) {
            power = poly::mul(f, power, UniPoly::linear_root(f, r.value));
          }
          const bool divides = poly::rem(f, phi, power).is_zero();
          const bool exact = !poly::rem(
                                  f, phi,
                                  poly::mul(f, power, UniPoly::linear_root(f, r.value)))
                                  .is_zero();
          const auto t = g.index_of(r.value);
          if (!divides || !exact || !t ||
              g.multiplicity(v, *t) != static_cast<std::uint32_t>(r.multiplicity)) {
            fail("root multiplicity at p=" + std::to_string(p));
          }
        }
        if (total != ell + 1) fail("root count at p=" + std::to_string(p));
      }
      if (!mirror_check(g)) fail("mirror at p=" + std::to_string(p));
    }
  }
  // Mirror symmetry on larger graphs.
  for (std::uint64_t p : primes_between(400, 2000)) {
    for (int ell : {2, 3}) {
      if (!mirror_check(build_graph(p, ell))) fail("mirror at p=" + std::to_string(p));
    }
  }
  // BFS metric axioms on random triples.
  for (std::uint64_t p : {1009ull, 4001ull, 19993ull}) {
    const auto g = build_graph(p, 2);
    std::vector<std::uint32_t> picks;
    std::vector<std::vector<std::int32_t>> rows;
    for (int i = 0; i < 30; ++i) {
      picks.push_back(static_cast<std::uint32_t>(rng() % g.size()));
      rows.push_back(bfs_distances(g, picks.back()));
    }
    for (std::size_t a = 0; a < picks.size(); ++a) {
      if (rows[a][picks[a]] != 0) fail("dist(v, v) != 0");
      for (std::size_t b = 0; b < picks.size(); ++b) {
        if (rows[a][picks[b]] != rows[b][picks[a]]) fail("asymmetric distance");
        for (std::size_t c = 0; c < picks.size(); ++c) {
          if (rows[a][picks[c]] > rows[a][picks[b]] + rows[b][picks[c]]) {
            fail("triangle inequality");
          }
        }
      }
    }
  }
  // Scalar and vector BFS kernels agree.
  if (kernel_isa_available(KernelIsa::kAvx2)) {
    const CsrGraph g = undirected_view(build_graph(19991, 2));
    std::vector<std::uint32_t> src(kBatchLanes);
    for (std::size_t i = 0; i < src.size(); ++i) src[i] = (i * 131) % g.size();
    const auto a = batch_bfs(g, src, {}, {}, KernelIsa::kScalar);
    const auto b = batch_bfs(g, src, {}, {}, KernelIsa::kAvx2);
    if (a.eccentricity != b.eccentricity || a.histogram != b.histogram) {
      fail("scalar and AVX2 kernels differ");
    }
  }
  // Sweep output does not depend on the worker count.
  cli::ExperimentConfig config;
  config.primes.from = 3000;
  config.primes.to = 6000;
  config.primes.stride = 4;
  config.experiments = {cli::Experiment::kDiameter, cli::Experiment::kSpine,
                        cli::Experiment::kConjugate, cli::Experiment::kOpposite,
                        cli::Experiment::kSpineDistance};
  config.samples = 100;
  config.seed = 3;
  std::string first;
  for (unsigned w : {1u, 8u}) {
    config.workers = w;
    std::ostringstream s;
    write_stats_csv(s, cli::sweep(config).records);
    if (first.empty()) {
      first = s.str();
    } else if (s.str() != first) {
      fail("sweep output depends on worker count");
    }
  }
  o.detail = "field axioms, " + std::to_string(vertices) +
             " root factorizations, mirror symmetry, BFS metric axioms, "
             "kernel equivalence, worker-count determinism" +
             o.detail;
  return o;
}

}  // namespace
}  // namespace isogenium

int main(int argc, char** argv) {
  using namespace isogenium;
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"vertex-count formula", vertex_counts},
      {"oracle equivalence", oracle_equivalence},
      {"spine-size formula", spine_sizes},
      {"structure theorems", structure_theorems},
      {"golden transitions", golden_transitions},
      {"exceptional attachment", exceptional_attachment},
      {"zero-proportion primes", zero_proportions},
      {"mod-12 proportion means", mod12_means},
      {"diameter bound and range", diameters},
      {"opposite-pair counts", opposite_pairs},
      {"distance-to-spine means", spine_distance_means},
      {"property suites", property_suites},
  };
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
  std::size_t passed = 0, ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    ++ran;
    passed += o.pass;
    std::printf("%s [%02zu] %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", passed, ran);
  return passed == ran ? 0 : 1;
}
