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

#include "isogenium/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "isogenium/errors.hpp"
#include "isogenium/modpoly.hpp"

namespace isogenium {
namespace {

std::vector<std::uint32_t> off_spine_vertices(const IsogenyMultiGraph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (!g.is_rational(i)) out.push_back(i);
  }
  return out;
}

DistanceDistribution make_distribution(const IsogenyMultiGraph& g,
                                       std::string kind, std::uint64_t seed,
                                       bool exhaustive) {
  DistanceDistribution d;
  d.kind = std::move(kind);
  d.p = g.p();
  d.ell = g.ell();
  d.seed = seed;
  d.exhaustive = exhaustive;
  return d;
}

}  // namespace

std::vector<std::int32_t> bfs_distances(const IsogenyMultiGraph& g,
                                        std::uint32_t source) {
  const CsrGraph csr = undirected_view(g);
  const std::uint32_t src[] = {source};
  auto dist = bfs_from(csr, src);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw Disconnected("graph is not connected");
  }
  return dist;
}

DiameterResult diameter(const CsrGraph& g, KernelIsa isa,
                        std::size_t sampled_sources, std::uint64_t seed) {
  const std::size_t n = g.size();
  DiameterResult out;
  if (n == 0) return out;
  std::vector<std::uint32_t> sources;
  if (n <= kExactDiameterLimit) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), 0u);
  } else {
    out.exact = false;
    SampleRng rng(seed);
    for (std::size_t i = 0; i < sampled_sources; ++i) {
      sources.push_back(static_cast<std::uint32_t>(rng.below(n)));
    }
  }
  for (std::size_t start = 0; start < sources.size(); start += kBatchLanes) {
    const std::size_t len = std::min(kBatchLanes, sources.size() - start);
    auto r = batch_bfs(g, std::span(sources).subspan(start, len), {}, {}, isa);
    if (!r.complete) throw Disconnected("graph is not connected");
    for (std::uint32_t e : r.eccentricity) out.value = std::max(out.value, e);
  }
  return out;
}

DiameterResult diameter(const IsogenyMultiGraph& g, KernelIsa isa) {
  return diameter(undirected_view(g), isa);
}

double diameter_lower_bound(std::uint64_t p, int ell) {
  check_degree(ell);
  const double n = static_cast<double>(p / 12);
  if (ell == 2) return std::log2(n) - std::log2(3.0) + 1.0;
  // Moore bound: a ball of radius r holds at most
  // 1 + (ell + 1)(ell^r - 1) / (ell - 1) vertices.
  const double l = static_cast<double>(ell);
  return std::log((n - 1.0) * (l - 1.0) / (l + 1.0) + 1.0) / std::log(l);
}

std::vector<VertexPair> conjugate_pairs(const IsogenyMultiGraph& g) {
  std::vector<VertexPair> out;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (i < g.conjugate(i)) out.emplace_back(i, g.conjugate(i));
  }
  return out;
}

std::vector<VertexPair> sample_conjugate_pairs(const IsogenyMultiGraph& g,
                                               std::size_t count,
                                               std::uint64_t seed) {
  const auto pool = off_spine_vertices(g);
  if (pool.empty()) throw NoConjugatePairs("every vertex is defined over F_p");
  SampleRng rng(seed);
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t v = pool[rng.below(pool.size())];
    out.emplace_back(v, g.conjugate(v));
  }
  return out;
}

std::vector<VertexPair> sample_arbitrary_pairs(const IsogenyMultiGraph& g,
                                               std::size_t count,
                                               std::uint64_t seed) {
  const auto pool = off_spine_vertices(g);
  if (pool.size() < 2) throw NoConjugatePairs("fewer than two vertices off F_p");
  SampleRng rng(seed);
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t a = rng.below(pool.size());
    std::uint64_t b = rng.below(pool.size() - 1);
    if (b >= a) ++b;
    out.emplace_back(pool[a], pool[b]);
  }
  return out;
}

std::vector<std::uint32_t> pair_distances(const CsrGraph& g,
                                          std::span<const VertexPair> pairs,
                                          KernelIsa isa) {
  std::vector<std::uint32_t> out;
  out.reserve(pairs.size());
  std::vector<std::uint32_t> src, probe;
  for (std::size_t start = 0; start < pairs.size(); start += kBatchLanes) {
    const std::size_t len = std::min(kBatchLanes, pairs.size() - start);
    src.clear();
    probe.clear();
    for (std::size_t i = start; i < start + len; ++i) {
      src.push_back(pairs[i].first);
      probe.push_back(pairs[i].second);
    }
    auto r = batch_bfs(g, src, probe, {}, isa);
    for (std::int32_t d : r.probe_distance) {
      if (d == kUnreachable) throw Disconnected("pair is not connected");
      out.push_back(static_cast<std::uint32_t>(d));
    }
  }
  return out;
}

ConjugateStats conjugate_stats(const IsogenyMultiGraph& g,
                               std::size_t sample_size, std::uint64_t seed) {
  const auto pool = off_spine_vertices(g);
  if (pool.size() < 2) {
    throw NoConjugatePairs("fewer than two vertices off F_p");
  }
  const CsrGraph csr = undirected_view(g);
  const bool exhaustive = g.size() < kExhaustiveVertexLimit;
  ConjugateStats out{make_distribution(g, "conjugate", seed, exhaustive),
                     make_distribution(g, "arbitrary", seed, exhaustive)};
  if (exhaustive) {
    const auto pairs = conjugate_pairs(g);
    out.conjugate.samples = pair_distances(csr, pairs);
    // Histogram over ordered pairs of off-spine vertices, then drop the
    // diagonal and fold (a, b) with (b, a).
    std::vector<std::uint8_t> mask(g.size(), 0);
    for (std::uint32_t v : pool) mask[v] = 1;
    std::vector<std::uint64_t> hist;
    for (std::size_t start = 0; start < pool.size(); start += kBatchLanes) {
      const std::size_t len = std::min(kBatchLanes, pool.size() - start);
      auto r = batch_bfs(csr, std::span(pool).subspan(start, len), {}, mask);
      if (hist.size() < r.histogram.size()) hist.resize(r.histogram.size(), 0);
      for (std::size_t d = 0; d < r.histogram.size(); ++d) hist[d] += r.histogram[d];
    }
    hist[0] -= pool.size();
    for (std::size_t d = 0; d < hist.size(); ++d) {
      out.arbitrary.samples.insert(out.arbitrary.samples.end(), hist[d] / 2,
                                   static_cast<std::uint32_t>(d));
    }
  } else {
    const auto cp = sample_conjugate_pairs(g, sample_size, seed);
    out.conjugate.samples = pair_distances(csr, cp);
    const auto ap = sample_arbitrary_pairs(g, sample_size, seed ^ 0xA5A5A5A5ULL);
    out.arbitrary.samples = pair_distances(csr, ap);
  }
  return out;
}

double Proportion::value() const {
  if (total == 0) throw NoConjugatePairs("empty population");
  return static_cast<double>(count) / static_cast<double>(total);
}

Proportion isogenous_conjugate_proportion(const IsogenyMultiGraph& g) {
  Proportion out;
  for (const auto& [a, b] : conjugate_pairs(g)) {
    ++out.total;
    if (g.multiplicity(a, b) > 0) ++out.count;
  }
  return out;
}

Proportion opposite_pair_proportion(const IsogenyMultiGraph& g,
                                    const SpineGraph& s,
                                    std::span<const VertexPair> pairs) {
  if (s.size() == 0) throw std::invalid_argument("empty spine");
  const CsrGraph csr = undirected_view(g);
  Proportion out;
  for (const auto& [a, b] : pairs) {
    const std::uint32_t sa[] = {a};
    const std::uint32_t sb[] = {b};
    const auto da = bfs_from(csr, sa);
    const auto db = bfs_from(csr, sb);
    const std::int32_t d = da[b];
    bool opposite = false;
    for (std::uint32_t x : s.members) {
      if (da[x] + db[x] == d) {
        opposite = true;
        break;
      }
    }
    ++out.total;
    if (opposite) ++out.count;
  }
  return out;
}

DistanceDistribution distance_to_spine(const IsogenyMultiGraph& g,
                                       std::span<const std::uint32_t> targets,
                                       const std::string& kind) {
  if (targets.empty()) throw std::invalid_argument("empty target set");
  const CsrGraph csr = undirected_view(g);
  auto dist = bfs_from(csr, targets);
  DistanceDistribution out = make_distribution(g, kind, 0, true);
  for (std::int32_t d : dist) {
    if (d == kUnreachable) throw Disconnected("graph is not connected");
    out.samples.push_back(static_cast<std::uint32_t>(d));
  }
  std::vector<std::uint32_t> distinct(targets.begin(), targets.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  out.metadata = {{"expected_mean",
                   std::log2(static_cast<double>(g.size()) /
                             static_cast<double>(distinct.size()))}};
  return out;
}

DistanceDistribution random_subgraph_distances(const IsogenyMultiGraph& g,
                                               std::size_t m,
                                               std::size_t repetitions,
                                               std::uint64_t seed) {
  if (m == 0 || m > g.size()) throw std::invalid_argument("bad subgraph size");
  DistanceDistribution out = make_distribution(g, "random_subgraph", seed, false);
  SampleRng rng(seed);
  std::vector<std::uint32_t> perm(g.size());
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    std::iota(perm.begin(), perm.end(), 0u);
    // Partial Fisher-Yates: the first m entries are a uniform subset.
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t k = i + rng.below(perm.size() - i);
      std::swap(perm[i], perm[k]);
    }
    auto d = distance_to_spine(g, std::span(perm).first(m), "random_subgraph");
    out.samples.insert(out.samples.end(), d.samples.begin(), d.samples.end());
  }
  out.metadata = {{"expected_mean",
                   std::log2(static_cast<double>(g.size()) /
                             static_cast<double>(m))},
                  {"repetitions", static_cast<double>(repetitions)}};
  return out;
}

void StatsRecord::set(const std::string& name, double v) {
  for (std::size_t i = 0; i < kStatsColumns.size(); ++i) {
    if (name == kStatsColumns[i]) {
      values[i] = v;
      return;
    }
  }
  throw std::out_of_range("unknown stats column " + name);
}

std::optional<double> StatsRecord::get(const std::string& name) const {
  for (std::size_t i = 0; i < kStatsColumns.size(); ++i) {
    if (name == kStatsColumns[i]) return values[i];
  }
  throw std::out_of_range("unknown stats column " + name);
}

std::vector<AggregateRow> congruence_aggregate(
    const std::vector<StatsRecord>& records, int modulus) {
  if (modulus != 8 && modulus != 12) {
    throw std::invalid_argument("modulus must be 8 or 12");
  }
  if (records.empty()) throw std::invalid_argument("no records to aggregate");
  std::map<int, std::vector<const StatsRecord*>> classes;
  for (const auto& r : records) {
    classes[static_cast<int>(r.p % static_cast<std::uint64_t>(modulus))]
        .push_back(&r);
  }
  std::vector<AggregateRow> rows;
  for (const auto& [residue, members] : classes) {
    for (std::size_t c = 0; c < kStatsColumns.size(); ++c) {
      std::vector<double> xs;
      for (const auto* r : members) {
        if (r->values[c]) xs.push_back(*r->values[c]);
      }
      if (xs.empty()) continue;
      AggregateRow row;
      row.modulus = modulus;
      row.residue = residue;
      row.metric = kStatsColumns[c];
      row.n = xs.size();
      double sum = 0.0;
      for (double x : xs) sum += x;
      row.mean = sum / static_cast<double>(xs.size());
      double sq = 0.0;
      for (double x : xs) sq += (x - row.mean) * (x - row.mean);
      row.stddev = xs.size() < 2
                       ? 0.0
                       : std::sqrt(sq / static_cast<double>(xs.size() - 1));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_distances_csv(std::ostream& out,
                         const std::vector<const DistanceDistribution*>& dists) {
  out << "p,ell,kind,sample,value\n";
  for (const auto* d : dists) {
    for (std::size_t i = 0; i < d->samples.size(); ++i) {
      out << d->p << ',' << d->ell << ',' << d->kind << ',' << i << ','
          << d->samples[i] << '\n';
    }
  }
}

void write_stats_csv(std::ostream& out, const std::vector<StatsRecord>& records) {
  out << "p,ell,p_mod_8,p_mod_12";
  for (const char* c : kStatsColumns) out << ',' << c;
  out << '\n';
  for (const auto& r : records) {
    out << r.p << ',' << r.ell << ',' << r.p % 8 << ',' << r.p % 12;
    for (const auto& v : r.values) {
      out << ',';
      if (v) out << format_double(*v);
    }
    out << '\n';
  }
}

void write_aggregates_csv(std::ostream& out,
                          const std::vector<AggregateRow>& rows) {
  out << "modulus,residue,metric,mean,stddev,n\n";
  for (const auto& r : rows) {
    out << r.modulus << ',' << r.residue << ',' << r.metric << ','
        << format_double(r.mean) << ',' << format_double(r.stddev) << ','
        << r.n << '\n';
  }
}

}  // namespace isogenium
