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

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ISOGENIUM_HAVE_AVX2_KERNEL 1
#endif

namespace isogenium::kernels {

#ifdef ISOGENIUM_HAVE_AVX2_KERNEL

// Only this function is compiled for AVX2, so no AVX2 code can leak into
// shared inline functions. The caller checks CPU support first.
__attribute__((target("avx2,popcnt"))) void expand_level_avx2(
    const CsrGraph& g, const Lanes* frontier, Lanes* seen, Lanes* next,
    const std::uint8_t* mask, Lanes* active, std::uint64_t* reached) {
  const std::size_t n = g.size();
  const std::uint32_t* off = g.offsets.data();
  const std::uint32_t* tgt = g.targets.data();
  __m256i any = _mm256_load_si256(reinterpret_cast<const __m256i*>(active));
  std::uint64_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    __m256i acc = _mm256_setzero_si256();
    for (std::uint32_t e = off[v]; e < off[v + 1]; ++e) {
      acc = _mm256_or_si256(
          acc, _mm256_load_si256(
                   reinterpret_cast<const __m256i*>(&frontier[tgt[e]])));
    }
    __m256i* s = reinterpret_cast<__m256i*>(&seen[v]);
    const __m256i old = _mm256_load_si256(s);
    const __m256i fresh = _mm256_andnot_si256(old, acc);
    _mm256_store_si256(reinterpret_cast<__m256i*>(&next[v]), fresh);
    _mm256_store_si256(s, _mm256_or_si256(old, fresh));
    any = _mm256_or_si256(any, fresh);
    if ((mask == nullptr || mask[v] != 0) && !_mm256_testz_si256(fresh, fresh)) {
      count += static_cast<std::uint64_t>(
          _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(fresh, 0))) +
          _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(fresh, 1))) +
          _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(fresh, 2))) +
          _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(fresh, 3))));
    }
  }
  _mm256_store_si256(reinterpret_cast<__m256i*>(active), any);
  *reached += count;
}

#else

void expand_level_avx2(const CsrGraph& g, const Lanes* frontier, Lanes* seen,
                       Lanes* next, const std::uint8_t* mask, Lanes* active,
                       std::uint64_t* reached) {
  expand_level_scalar(g, frontier, seen, next, mask, active, reached);
}

#endif

}  // namespace isogenium::kernels
