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

#ifndef ISOGENIUM_BITBFS_HPP_
#define ISOGENIUM_BITBFS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isogenium/ssgraph.hpp"

namespace isogenium {

// Simple undirected graph in compressed sparse row form: no loops, no
// repeated neighbours, neighbour lists ascending.
struct CsrGraph {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> targets;

  std::size_t size() const { return offsets.size() - 1; }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

// Forgets direction, multiplicity and loops.
CsrGraph undirected_view(const IsogenyMultiGraph& g);
CsrGraph csr_from_lists(const std::vector<std::vector<std::uint32_t>>& adj);

inline constexpr std::int32_t kUnreachable = -1;

// Multi-source BFS; distance to the nearest source, kUnreachable otherwise.
std::vector<std::int32_t> bfs_from(const CsrGraph& g,
                                   std::span<const std::uint32_t> sources);

// Bit-parallel BFS from up to kBatchLanes sources at once. Each vertex holds
// one bit per source; a level is next[v] = OR_{u ~ v} frontier[u] & ~seen[v].
inline constexpr std::size_t kBatchLanes = 256;

enum class KernelIsa { kScalar, kAvx2 };
KernelIsa best_kernel_isa();
bool kernel_isa_available(KernelIsa isa);
const char* kernel_isa_name(KernelIsa isa);

struct BatchBfsResult {
  // Per source: largest finite distance.
  std::vector<std::uint32_t> eccentricity;
  // Per source: distance to its probe vertex, kUnreachable if none.
  std::vector<std::int32_t> probe_distance;
  // histogram[d]: number of (source, counted vertex) pairs at distance d.
  std::vector<std::uint64_t> histogram;
  // Every source reached every vertex.
  bool complete = true;
};

// `probes` is empty or has one entry per source. `count_mask` is empty (count
// every vertex) or has one byte per vertex.
BatchBfsResult batch_bfs(const CsrGraph& g,
                         std::span<const std::uint32_t> sources,
                         std::span<const std::uint32_t> probes = {},
                         std::span<const std::uint8_t> count_mask = {},
                         KernelIsa isa = best_kernel_isa());

namespace kernels {

struct alignas(32) Lanes {
  std::uint64_t w[4];
};

// One BFS level over every vertex. Writes next, folds it into seen, ORs every
// new word into *active and adds the popcount of new bits at vertices with a
// nonzero mask byte (all vertices if mask is null) to *reached.
void expand_level_scalar(const CsrGraph& g, const Lanes* frontier, Lanes* seen,
                         Lanes* next, const std::uint8_t* mask, Lanes* active,
                         std::uint64_t* reached);
void expand_level_avx2(const CsrGraph& g, const Lanes* frontier, Lanes* seen,
                       Lanes* next, const std::uint8_t* mask, Lanes* active,
                       std::uint64_t* reached);

}  // namespace kernels
}  // namespace isogenium

#endif  // ISOGENIUM_BITBFS_HPP_
