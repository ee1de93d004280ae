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

#include "isogenium/bitbfs.hpp"

#include <algorithm>
#include <stdexcept>

namespace isogenium {

using kernels::Lanes;

CsrGraph csr_from_lists(const std::vector<std::vector<std::uint32_t>>& adj) {
  CsrGraph g;
  g.offsets.reserve(adj.size() + 1);
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    std::vector<std::uint32_t> nbrs = adj[v];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    for (std::uint32_t u : nbrs) {
      if (u != v) g.targets.push_back(u);
    }
    g.offsets.push_back(static_cast<std::uint32_t>(g.targets.size()));
  }
  return g;
}

CsrGraph undirected_view(const IsogenyMultiGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.size());
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    for (const Edge& e : g.edges(u)) {
      adj[u].push_back(e.target);
      adj[e.target].push_back(u);
    }
  }
  return csr_from_lists(adj);
}

std::vector<std::int32_t> bfs_from(const CsrGraph& g,
                                   std::span<const std::uint32_t> sources) {
  std::vector<std::int32_t> dist(g.size(), kUnreachable);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.size());
  for (std::uint32_t s : sources) {
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::uint32_t v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool kernel_isa_available(KernelIsa isa) {
  if (isa == KernelIsa::kScalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

KernelIsa best_kernel_isa() {
  static const KernelIsa best = kernel_isa_available(KernelIsa::kAvx2)
                                    ? KernelIsa::kAvx2
                                    : KernelIsa::kScalar;
  return best;
}

const char* kernel_isa_name(KernelIsa isa) {
  return isa == KernelIsa::kAvx2 ? "avx2" : "scalar";
}

BatchBfsResult batch_bfs(const CsrGraph& g,
                         std::span<const std::uint32_t> sources,
                         std::span<const std::uint32_t> probes,
                         std::span<const std::uint8_t> count_mask,
                         KernelIsa isa) {
  const std::size_t lanes = sources.size();
  if (lanes > kBatchLanes) throw std::invalid_argument("too many sources");
  if (!probes.empty() && probes.size() != lanes) {
    throw std::invalid_argument("one probe per source required");
  }
  if (!count_mask.empty() && count_mask.size() != g.size()) {
    throw std::invalid_argument("count mask size mismatch");
  }
  if (!kernel_isa_available(isa)) isa = KernelIsa::kScalar;
  auto expand = isa == KernelIsa::kAvx2 ? kernels::expand_level_avx2
                                        : kernels::expand_level_scalar;
  const std::uint8_t* mask = count_mask.empty() ? nullptr : count_mask.data();

  const std::size_t n = g.size();
  std::vector<Lanes> frontier(n, Lanes{}), seen(n, Lanes{}), next(n, Lanes{});
  BatchBfsResult out;
  out.eccentricity.assign(lanes, 0);
  out.probe_distance.assign(lanes, kUnreachable);
  out.histogram.push_back(0);
  for (std::size_t i = 0; i < lanes; ++i) {
    const std::uint32_t s = sources[i];
    frontier[s].w[i / 64] |= std::uint64_t{1} << (i % 64);
    seen[s].w[i / 64] |= std::uint64_t{1} << (i % 64);
    if (mask == nullptr || mask[s] != 0) ++out.histogram[0];
    if (!probes.empty() && probes[i] == s) out.probe_distance[i] = 0;
  }

  for (std::uint32_t level = 1;; ++level) {
    Lanes active{};
    std::uint64_t reached = 0;
    expand(g, frontier.data(), seen.data(), next.data(), mask, &active,
           &reached);
    if ((active.w[0] | active.w[1] | active.w[2] | active.w[3]) == 0) break;
    out.histogram.push_back(reached);
    for (std::size_t i = 0; i < lanes; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (i % 64);
      if (active.w[i / 64] & bit) out.eccentricity[i] = level;
      if (!probes.empty() && out.probe_distance[i] == kUnreachable &&
          (next[probes[i]].w[i / 64] & bit)) {
        out.probe_distance[i] = static_cast<std::int32_t>(level);
      }
    }
    std::swap(frontier, next);
  }

  Lanes all{};
  for (std::size_t i = 0; i < lanes; ++i) {
    all.w[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  for (std::size_t v = 0; v < n && out.complete; ++v) {
    for (int k = 0; k < 4; ++k) {
      if ((seen[v].w[k] & all.w[k]) != all.w[k]) out.complete = false;
    }
  }
  return out;
}

}  // namespace isogenium
