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

#ifndef ISOGENIUM_CLI_CLI_HPP_
#define ISOGENIUM_CLI_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "isogenium/metrics.hpp"

namespace isogenium::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitConfig = 2;

enum class Experiment { kDiameter, kSpine, kConjugate, kOpposite, kSpineDistance };

struct PrimeSpec {
  std::optional<std::uint64_t> single;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  // Keep every stride-th prime of the range.
  std::uint64_t stride = 1;
  std::vector<std::uint64_t> list;

  // Throws ConfigError on an empty or inconsistent spec.
  std::vector<std::uint64_t> resolve() const;
};

struct ExperimentConfig {
  std::string command;
  PrimeSpec primes;
  int ell = 2;
  std::vector<Experiment> experiments = {Experiment::kDiameter,
                                         Experiment::kSpine,
                                         Experiment::kConjugate};
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 1;
  std::string format = "json";
  // 0 aggregates by both 8 and 12.
  int modulus = 0;
};

Experiment parse_experiment(const std::string& name);
const char* experiment_name(Experiment e);

// One prime's scalar metrics. Invariant failures are appended to failures.
StatsRecord measure_prime(std::uint64_t p, const ExperimentConfig& config,
                          std::vector<std::string>& failures);

struct SweepResult {
  // Sorted by p.
  std::vector<StatsRecord> records;
  std::vector<std::string> failures;
};

// Runs measure_prime over the resolved primes on config.workers threads.
SweepResult sweep(const ExperimentConfig& config);

// Full command-line entry point. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace isogenium::cli

#endif  // ISOGENIUM_CLI_CLI_HPP_
