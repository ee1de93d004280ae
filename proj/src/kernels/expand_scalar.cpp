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

#include <bit>

#include "isogenium/bitbfs.hpp"

namespace isogenium::kernels {

void expand_level_scalar(const CsrGraph& g, const Lanes* frontier, Lanes* seen,
                         Lanes* next, const std::uint8_t* mask, Lanes* active,
                         std::uint64_t* reached) {
  const std::size_t n = g.size();
  const std::uint32_t* off = g.offsets.data();
  const std::uint32_t* tgt = g.targets.data();
  std::uint64_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t acc[4] = {0, 0, 0, 0};
    for (std::uint32_t e = off[v]; e < off[v + 1]; ++e) {
      const Lanes& f = frontier[tgt[e]];
      for (int k = 0; k < 4; ++k) acc[k] |= f.w[k];
    }
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t fresh = acc[k] & ~seen[v].w[k];
      next[v].w[k] = fresh;
      seen[v].w[k] |= fresh;
      active->w[k] |= fresh;
      if (mask == nullptr || mask[v] != 0) count += std::popcount(fresh);
    }
  }
  *reached += count;
}

}  // namespace isogenium::kernels
