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

#ifndef ISOGENIUM_METRICS_HPP_
#define ISOGENIUM_METRICS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isogenium/bitbfs.hpp"
#include "isogenium/distribution.hpp"
#include "isogenium/spine.hpp"
#include "isogenium/ssgraph.hpp"

namespace isogenium {

// Single-source distances on the simple undirected view. Throws Disconnected
// if some vertex is unreachable.
std::vector<std::int32_t> bfs_distances(const IsogenyMultiGraph& g,
                                        std::uint32_t source);

inline constexpr std::size_t kExactDiameterLimit = 50000;

struct DiameterResult {
  std::uint32_t value = 0;
  // False when the value is a sampled lower bound.
  bool exact = true;
};

// Exact up to kExactDiameterLimit vertices, otherwise the largest
// eccentricity over `sampled_sources` seeded random sources. Throws
// Disconnected.
DiameterResult diameter(const CsrGraph& g, KernelIsa isa = best_kernel_isa(),
                        std::size_t sampled_sources = 2048,
                        std::uint64_t seed = 0);
DiameterResult diameter(const IsogenyMultiGraph& g,
                        KernelIsa isa = best_kernel_isa());

// log2(floor(p / 12)) - log2(3) + 1.
// Counting bound from the ball sizes of an (ell + 1)-regular graph on about
// p / 12 vertices.
double diameter_lower_bound(std::uint64_t p, int ell = 2);

using VertexPair = std::pair<std::uint32_t, std::uint32_t>;

// Every conjugate pair {j, j^p} with j not in F_p, once, smaller index first.
std::vector<VertexPair> conjugate_pairs(const IsogenyMultiGraph& g);
// `count` draws of a uniform non-rational j, paired with j^p.
std::vector<VertexPair> sample_conjugate_pairs(const IsogenyMultiGraph& g,
                                               std::size_t count,
                                               std::uint64_t seed);
// `count` draws of two distinct uniform non-rational vertices.
std::vector<VertexPair> sample_arbitrary_pairs(const IsogenyMultiGraph& g,
                                               std::size_t count,
                                               std::uint64_t seed);

// Distance of each pair, batched through the bit-parallel kernel.
std::vector<std::uint32_t> pair_distances(const CsrGraph& g,
                                          std::span<const VertexPair> pairs,
                                          KernelIsa isa = best_kernel_isa());

inline constexpr std::size_t kExhaustiveVertexLimit = 5000;

struct ConjugateStats {
  DistanceDistribution conjugate;
  DistanceDistribution arbitrary;
};

// Exhaustive below kExhaustiveVertexLimit vertices (each unordered pair
// once), otherwise `sample_size` seeded samples of each kind. Throws
// NoConjugatePairs when fewer than two vertices lie outside F_p.
ConjugateStats conjugate_stats(const IsogenyMultiGraph& g,
                               std::size_t sample_size = 1000,
                               std::uint64_t seed = 0);

struct Proportion {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  bool defined() const { return total != 0; }
  // Throws NoConjugatePairs when undefined.
  double value() const;
};

// Conjugate pairs joined by an edge, over all conjugate pairs.
Proportion isogenous_conjugate_proportion(const IsogenyMultiGraph& g);

// Pairs with a geodesic through some spine vertex, over all pairs.
Proportion opposite_pair_proportion(const IsogenyMultiGraph& g,
                                    const SpineGraph& s,
                                    std::span<const VertexPair> pairs);

// Distance from every vertex to the nearest target. The reference mean
// log2(N / M) is attached as metadata "expected_mean".
DistanceDistribution distance_to_spine(const IsogenyMultiGraph& g,
                                       std::span<const std::uint32_t> targets,
                                       const std::string& kind = "spine");

// Pooled distances to `repetitions` uniform vertex subsets of size `m`
// drawn without replacement.
DistanceDistribution random_subgraph_distances(const IsogenyMultiGraph& g,
                                               std::size_t m,
                                               std::size_t repetitions = 10,
                                               std::uint64_t seed = 0);

// Scalar columns of stats.csv, in order.
inline constexpr std::array<const char*, 10> kStatsColumns = {
    "diameter",
    "diameter_exact",
    "diameter_lower_bound",
    "spine_size",
    "spine_components",
    "conjugate_adjacent_proportion",
    "opposite_conjugate_proportion",
    "opposite_arbitrary_proportion",
    "spine_distance_mean",
    "normalized_spine_distance",
};

struct StatsRecord {
  std::uint64_t p = 0;
  int ell = 0;
  std::array<std::optional<double>, kStatsColumns.size()> values{};

  // Throws std::out_of_range for unknown names.
  void set(const std::string& name, double v);
  std::optional<double> get(const std::string& name) const;
};

struct AggregateRow {
  int modulus = 0;
  int residue = 0;
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t n = 0;
};

// Per residue class of p mod `modulus` (8 or 12) and per metric: mean,
// population stddev and count over records that have the metric. Rows are
// ordered by residue, then column order.
std::vector<AggregateRow> congruence_aggregate(
    const std::vector<StatsRecord>& records, int modulus);

void write_distances_csv(std::ostream& out,
                         const std::vector<const DistanceDistribution*>& dists);
void write_stats_csv(std::ostream& out, const std::vector<StatsRecord>& records);
void write_aggregates_csv(std::ostream& out,
                          const std::vector<AggregateRow>& rows);
// Shortest round-trip decimal form used in every CSV.
std::string format_double(double v);

}  // namespace isogenium

#endif  // ISOGENIUM_METRICS_HPP_
