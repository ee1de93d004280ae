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

#include "isogenium_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "isogenium/errors.hpp"
#include "isogenium/fpgraph.hpp"
#include "isogenium/spine.hpp"
#include "isogenium/ssgraph.hpp"

namespace isogenium::cli {
namespace {

using Json = nlohmann::ordered_json;

std::uint64_t spine_size_formula(std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  if (p % 4 == 1) return class_number(-4 * sp) / 2;
  if (p % 8 == 7) return class_number(-sp);
  return 2 * class_number(-sp);
}

Json summary(const DistanceDistribution& d) {
  Json j;
  j["kind"] = d.kind;
  j["n"] = d.size();
  j["exhaustive"] = d.exhaustive;
  j["mean"] = d.mean();
  j["stddev"] = d.stddev();
  j["min"] = d.min();
  j["max"] = d.max();
  for (const auto& [k, v] : d.metadata) j[k] = v;
  return j;
}

Json proportion_json(const Proportion& pr) {
  Json j;
  j["count"] = pr.count;
  j["total"] = pr.total;
  if (pr.defined()) {
    j["proportion"] = pr.value();
  } else {
    j["proportion"] = nullptr;
  }
  return j;
}

std::string file_stem(const std::string& command, std::uint64_t p, int ell) {
  return command + "_" + std::to_string(p) + "_" + std::to_string(ell);
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << content;
  if (!f) throw ConfigError("failed writing " + path.string());
}

std::vector<std::string> check_spine(std::uint64_t p, int ell,
                                     const IsogenyMultiGraph& g,
                                     const SpineGraph& s,
                                     TransitionReport* report_out) {
  std::vector<std::string> failures;
  const std::string tag =
      "p = " + std::to_string(p) + ", ell = " + std::to_string(ell) + ": ";
  if (s.size() != spine_size_formula(p)) {
    failures.push_back(tag + "spine size " + std::to_string(s.size()) +
                       " differs from the class number formula");
  }
  try {
    auto report = project_and_classify(build_fp_graph(g), s,
                                       default_classify_mode(p, ell));
    const auto check = sfa_theorem_check(report);
    for (const auto& v : check.violations) failures.push_back(tag + v);
    if (report_out) *report_out = std::move(report);
  } catch (const ClassificationIncomplete& e) {
    failures.push_back(tag + e.what());
  }
  return failures;
}

struct Output {
  std::ostream& out;
  std::string dir;

  // Writes to the directory when one is set, else to the stream.
  void emit(const std::string& name, const std::string& content,
            bool to_stream) {
    if (!dir.empty()) {
      write_file(dir, name, content);
    } else if (to_stream) {
      out << content;
    }
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string distances_csv(const std::vector<const DistanceDistribution*>& ds) {
  std::ostringstream s;
  write_distances_csv(s, ds);
  return s.str();
}

std::string stats_csv(const std::vector<StatsRecord>& records) {
  std::ostringstream s;
  write_stats_csv(s, records);
  return s.str();
}

std::uint64_t single_prime(const ExperimentConfig& c) {
  const auto primes = c.primes.resolve();
  if (primes.size() != 1) throw ConfigError("this command takes one prime (--p)");
  return primes.front();
}

int cmd_build(const ExperimentConfig& c, Output& o) {
  const std::uint64_t p = single_prime(c);
  o.emit(file_stem("graph", p, c.ell) + ".json",
         graph_to_json(build_graph(p, c.ell)), true);
  return kExitOk;
}

int cmd_fpgraph(const ExperimentConfig& c, Output& o) {
  const std::uint64_t p = single_prime(c);
  o.emit(file_stem("fpgraph", p, c.ell) + ".json",
         fp_graph_to_json(build_fp_graph(build_graph(p, c.ell))), true);
  return kExitOk;
}

int cmd_spine(const ExperimentConfig& c, Output& o, std::ostream& err) {
  const std::uint64_t p = single_prime(c);
  const auto g = build_graph(p, c.ell);
  const auto s = extract_spine(g);
  TransitionReport report;
  const auto failures = check_spine(p, c.ell, g, s, &report);
  if (report.p == 0) {
    // Strict classification gave up; show what the lenient pass found.
    report = project_and_classify(build_fp_graph(g), s, ClassifyMode::kLenient);
  }
  o.emit(file_stem("spine", p, c.ell) + ".json", report_to_json(report), true);
  for (const auto& f : failures) err << "invariant: " << f << "\n";
  return failures.empty() ? kExitOk : kExitInvariant;
}

int cmd_conjugate(const ExperimentConfig& c, Output& o) {
  const std::uint64_t p = single_prime(c);
  const auto g = build_graph(p, c.ell);
  Json j;
  j["p"] = p;
  j["ell"] = c.ell;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["isogenous_conjugates"] = proportion_json(isogenous_conjugate_proportion(g));
  std::optional<ConjugateStats> stats;
  try {
    stats = conjugate_stats(g, c.samples, c.seed);
    j["conjugate"] = summary(stats->conjugate);
    j["arbitrary"] = summary(stats->arbitrary);
  } catch (const NoConjugatePairs&) {
    j["conjugate"] = nullptr;
    j["arbitrary"] = nullptr;
  }
  std::string csv;
  if (stats) {
    csv = distances_csv({&stats->conjugate, &stats->arbitrary});
  } else {
    csv = distances_csv({});
  }
  const std::string stem = file_stem("conjugate", p, c.ell);
  o.emit(stem + ".json", dump(j), c.format == "json");
  o.emit(stem + "_distances.csv", csv, c.format == "csv");
  return kExitOk;
}

int cmd_opposite(const ExperimentConfig& c, Output& o) {
  const std::uint64_t p = single_prime(c);
  const auto g = build_graph(p, c.ell);
  const auto s = extract_spine(g);
  const auto cp = sample_conjugate_pairs(g, c.samples, c.seed);
  const auto ap = sample_arbitrary_pairs(g, c.samples, c.seed);
  const auto oc = opposite_pair_proportion(g, s, cp);
  const auto oa = opposite_pair_proportion(g, s, ap);
  Json j;
  j["p"] = p;
  j["ell"] = c.ell;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["spine_size"] = s.size();
  j["spine_components"] = s.component_count;
  j["conjugate"] = proportion_json(oc);
  j["arbitrary"] = proportion_json(oa);
  if (oa.count != 0) {
    j["ratio"] = oc.value() / oa.value();
  } else {
    j["ratio"] = nullptr;
  }
  o.emit(file_stem("opposite", p, c.ell) + ".json", dump(j), true);
  return kExitOk;
}

int cmd_spinedist(const ExperimentConfig& c, Output& o) {
  const std::uint64_t p = single_prime(c);
  const auto g = build_graph(p, c.ell);
  const auto s = extract_spine(g);
  auto d = distance_to_spine(g, s.members);
  d.seed = c.seed;
  const auto r = random_subgraph_distances(g, s.size(), 10, c.seed);
  Json j;
  j["p"] = p;
  j["ell"] = c.ell;
  j["seed"] = c.seed;
  j["vertices"] = g.size();
  j["spine_size"] = s.size();
  j["spine"] = summary(d);
  j["random_subgraph"] = summary(r);
  const double expected = *d.find_metadata("expected_mean");
  if (expected > 0) {
    j["normalized_spine_distance"] = d.mean() / expected;
  } else {
    j["normalized_spine_distance"] = nullptr;
  }
  const std::string stem = file_stem("spinedist", p, c.ell);
  o.emit(stem + ".json", dump(j), c.format == "json");
  o.emit(stem + "_distances.csv", distances_csv({&d, &r}), c.format == "csv");
  return kExitOk;
}

int cmd_diameter(const ExperimentConfig& c, Output& o, std::ostream& err) {
  const std::uint64_t p = single_prime(c);
  const auto d = diameter(build_graph(p, c.ell));
  const double bound = diameter_lower_bound(p, c.ell);
  Json j;
  j["p"] = p;
  j["ell"] = c.ell;
  j["diameter"] = d.value;
  j["exact"] = d.exact;
  j["lower_bound"] = bound;
  o.emit(file_stem("diameter", p, c.ell) + ".json", dump(j), true);
  if (d.value < bound) {
    err << "invariant: diameter below the counting bound\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_sweep(const ExperimentConfig& c, Output& o, std::ostream& err) {
  const auto result = sweep(c);
  std::ostringstream agg;
  std::vector<AggregateRow> rows;
  for (int m : {8, 12}) {
    if (c.modulus != 0 && c.modulus != m) continue;
    const auto part = congruence_aggregate(result.records, m);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  write_aggregates_csv(agg, rows);
  if (o.dir.empty()) o.dir = ".";
  o.emit("stats.csv", stats_csv(result.records), false);
  o.emit("aggregates.csv", agg.str(), false);
  for (const auto& f : result.failures) err << "invariant: " << f << "\n";
  return result.failures.empty() ? kExitOk : kExitInvariant;
}

}  // namespace

std::vector<std::uint64_t> PrimeSpec::resolve() const {
  auto check = [](std::uint64_t p) {
    if (p < 5 || !is_prime(p)) {
      throw ConfigError(std::to_string(p) + " is not a prime >= 5");
    }
  };
  const int given = (single ? 1 : 0) + (to != 0 ? 1 : 0) + (list.empty() ? 0 : 1);
  if (given != 1) {
    throw ConfigError("give exactly one of --p, --from/--to, --primes");
  }
  if (single) {
    check(*single);
    return {*single};
  }
  if (!list.empty()) {
    for (std::uint64_t p : list) check(p);
    std::vector<std::uint64_t> out = list;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (from > to) throw ConfigError("--from exceeds --to");
  if (stride == 0) throw ConfigError("--stride must be positive");
  std::vector<std::uint64_t> out;
  std::uint64_t k = 0;
  for (std::uint64_t p = std::max<std::uint64_t>(from, 5); p <= to; ++p) {
    if (!is_prime(p)) continue;
    if (k++ % stride == 0) out.push_back(p);
  }
  if (out.empty()) throw ConfigError("no primes >= 5 in the range");
  return out;
}

Experiment parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::kDiameter, Experiment::kSpine,
                       Experiment::kConjugate, Experiment::kOpposite,
                       Experiment::kSpineDistance}) {
    if (name == experiment_name(e)) return e;
  }
  throw ConfigError("unknown experiment " + name);
}

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::kDiameter:
      return "diameter";
    case Experiment::kSpine:
      return "spine";
    case Experiment::kConjugate:
      return "conjugate";
    case Experiment::kOpposite:
      return "opposite";
    case Experiment::kSpineDistance:
      return "spinedist";
  }
  return "";
}

StatsRecord measure_prime(std::uint64_t p, const ExperimentConfig& config,
                          std::vector<std::string>& failures) {
  const int ell = config.ell;
  const auto g = build_graph(p, ell);
  std::optional<SpineGraph> spine;
  auto s = [&]() -> const SpineGraph& {
    if (!spine) spine = extract_spine(g);
    return *spine;
  };
  StatsRecord r;
  r.p = p;
  r.ell = ell;
  auto wants = [&](Experiment e) {
    return std::find(config.experiments.begin(), config.experiments.end(), e) !=
           config.experiments.end();
  };
  if (wants(Experiment::kDiameter)) {
    const auto d = diameter(g);
    const double bound = diameter_lower_bound(p, ell);
    r.set("diameter", d.value);
    r.set("diameter_exact", d.exact ? 1.0 : 0.0);
    r.set("diameter_lower_bound", bound);
    if (d.value < bound) {
      failures.push_back("p = " + std::to_string(p) +
                         ": diameter below the counting bound");
    }
  }
  if (wants(Experiment::kSpine)) {
    r.set("spine_size", static_cast<double>(s().size()));
    r.set("spine_components", s().component_count);
    const auto f = check_spine(p, ell, g, s(), nullptr);
    failures.insert(failures.end(), f.begin(), f.end());
  }
  if (wants(Experiment::kConjugate)) {
    const auto pr = isogenous_conjugate_proportion(g);
    if (pr.defined()) r.set("conjugate_adjacent_proportion", pr.value());
  }
  if (wants(Experiment::kOpposite) && g.size() - s().size() >= 2) {
    const auto cp = sample_conjugate_pairs(g, config.samples, config.seed);
    const auto ap = sample_arbitrary_pairs(g, config.samples, config.seed);
    r.set("opposite_conjugate_proportion",
          opposite_pair_proportion(g, s(), cp).value());
    r.set("opposite_arbitrary_proportion",
          opposite_pair_proportion(g, s(), ap).value());
  }
  if (wants(Experiment::kSpineDistance)) {
    const auto d = distance_to_spine(g, s().members);
    r.set("spine_distance_mean", d.mean());
    const double expected = *d.find_metadata("expected_mean");
    if (expected > 0) r.set("normalized_spine_distance", d.mean() / expected);
  }
  return r;
}

SweepResult sweep(const ExperimentConfig& config) {
  const auto primes = config.primes.resolve();
  std::vector<StatsRecord> records(primes.size());
  std::vector<std::vector<std::string>> failures(primes.size());
  std::vector<std::exception_ptr> errors(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        records[i] = measure_prime(primes[i], config, failures[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.workers,
                                      static_cast<unsigned>(primes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SweepResult out;
  out.records = std::move(records);
  for (auto& f : failures) {
    out.failures.insert(out.failures.end(), f.begin(), f.end());
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Supersingular isogeny graph experiments"};
  app.require_subcommand(1);
  ExperimentConfig config;
  std::uint64_t p = 0;
  std::string experiments;

  auto add_common = [&](CLI::App* sub, bool range) {
    sub->add_option("--p", p, "Prime");
    if (range) {
      sub->add_option("--from", config.primes.from, "First value of the range");
      sub->add_option("--to", config.primes.to, "Last value of the range");
      sub->add_option("--stride", config.primes.stride,
                      "Keep every n-th prime of the range");
      sub->add_option("--primes", config.primes.list, "Explicit primes")
          ->delimiter(',');
      sub->add_option("--workers", config.workers, "Worker threads")
          ->check(CLI::Range(1u, 1024u));
      sub->add_option("--mod", config.modulus, "Aggregate modulus")
          ->check(CLI::IsMember({8, 12}));
      sub->add_option("--experiments", experiments,
                      "Comma-separated: diameter,spine,conjugate,opposite,"
                      "spinedist");
    }
    sub->add_option("--ell", config.ell, "Isogeny degree")
        ->check(CLI::IsMember({2, 3}));
    sub->add_option("--samples", config.samples, "Sample size")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--out", config.out, "Output directory");
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"build", "Full isogeny graph as JSON"},
      {"fpgraph", "Graph of F_p-rational isogenies as JSON"},
      {"spine", "Transition report for the F_p subgraph"},
      {"conjugate", "Conjugate pair proportions and distances"},
      {"opposite", "Opposite pair proportions"},
      {"spinedist", "Distances to the F_p subgraph"},
      {"diameter", "Graph diameter and counting bound"},
      {"sweep", "Metrics over a range of primes"},
  };
  for (const auto& [name, help] : commands) {
    add_common(app.add_subcommand(name, help), std::string(name) == "sweep");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    if (p != 0) config.primes.single = p;
    if (!experiments.empty()) {
      config.experiments.clear();
      std::stringstream ss(experiments);
      std::string item;
      while (std::getline(ss, item, ',')) {
        config.experiments.push_back(parse_experiment(item));
      }
    }
    if (const char* env = std::getenv("ISOGENIUM_OUT"); env && *env) {
      config.out = env;
    }
    Output o{out, config.out};
    const std::string& cmd = config.command;
    if (cmd == "build") return cmd_build(config, o);
    if (cmd == "fpgraph") return cmd_fpgraph(config, o);
    if (cmd == "spine") return cmd_spine(config, o, err);
    if (cmd == "conjugate") return cmd_conjugate(config, o);
    if (cmd == "opposite") return cmd_opposite(config, o);
    if (cmd == "spinedist") return cmd_spinedist(config, o);
    if (cmd == "diameter") return cmd_diameter(config, o, err);
    return cmd_sweep(config, o, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidPrime& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidDegree& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NoConjugatePairs& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "invariant: " << e.what() << "\n";
    return kExitInvariant;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("isogenium");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace isogenium::cli
