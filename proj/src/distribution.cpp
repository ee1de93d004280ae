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

#include "isogenium/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isogenium {

double DistanceDistribution::mean() const {
  if (samples.empty()) return 0.0;
  std::uint64_t sum = 0;
  for (std::uint32_t s : samples) sum += s;
  return static_cast<double>(sum) / static_cast<double>(samples.size());
}

double DistanceDistribution::stddev() const {
  if (samples.size() < 2) return 0.0;
  const double m = mean();
  double acc = 0.0;
  for (std::uint32_t s : samples) {
    const double d = static_cast<double>(s) - m;
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(samples.size() - 1));
}

std::uint32_t DistanceDistribution::min() const {
  return samples.empty() ? 0 : *std::min_element(samples.begin(), samples.end());
}

std::uint32_t DistanceDistribution::max() const {
  return samples.empty() ? 0 : *std::max_element(samples.begin(), samples.end());
}

std::vector<std::uint64_t> DistanceDistribution::histogram() const {
  std::vector<std::uint64_t> h(samples.empty() ? 0 : max() + 1, 0);
  for (std::uint32_t s : samples) ++h[s];
  return h;
}

std::optional<double> DistanceDistribution::find_metadata(
    const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::uint64_t SampleRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

}  // namespace isogenium
