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

#ifndef ISOGENIUM_DISTRIBUTION_HPP_
#define ISOGENIUM_DISTRIBUTION_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace isogenium {

// A list of graph distances from one experiment plus its provenance.
struct DistanceDistribution {
  std::string kind;
  std::uint64_t p = 0;
  int ell = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::vector<std::uint32_t> samples;
  // Extra named scalars, for example a reference mean.
  std::vector<std::pair<std::string, double>> metadata;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double mean() const;
  // Sample standard deviation (n - 1 denominator); 0 below two samples.
  double stddev() const;
  std::uint32_t min() const;
  std::uint32_t max() const;
  // histogram()[d] = number of samples equal to d.
  std::vector<std::uint64_t> histogram() const;
  std::optional<double> find_metadata(const std::string& key) const;
};

// Seeded 64-bit generator used by every sampled experiment. Bounded draws use
// rejection so results do not depend on the standard library's distributions.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace isogenium

#endif  // ISOGENIUM_DISTRIBUTION_HPP_
