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

#ifndef ISOGENIUM_SPINE_HPP_
#define ISOGENIUM_SPINE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isogenium/distribution.hpp"
#include "isogenium/fpgraph.hpp"
#include "isogenium/ssgraph.hpp"

namespace isogenium {

// Subgraph of the full graph induced on j-invariants in F_p.
struct SpineGraph {
  std::uint64_t p = 0;
  int ell = 0;
  // Indices into the full graph, ascending (so the j values ascend too).
  std::vector<std::uint32_t> members;
  std::vector<Fp> js;
  // Local adjacency with multiplicities copied from the full graph.
  std::vector<std::vector<Edge>> adjacency;
  // Local component id per vertex, numbered in order of first appearance.
  std::vector<std::uint32_t> component;
  std::uint32_t component_count = 0;

  std::size_t size() const { return members.size(); }
};

SpineGraph extract_spine(const IsogenyMultiGraph& g);

enum class EventKind {
  kFold,
  kStack,
  kAttachEdge,
  kAttachAlongJ,
  // Double edge inside one of several spine components; connects nothing.
  kInternalEdge,
  // Spine loop with no rational counterpart; forced by Phi(X, X).
  kNewLoop,
  kUnexplained,
};
const char* event_kind_name(EventKind kind);

struct VertexRef {
  std::uint64_t j = 0;
  int twist_tag = 0;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

struct ComponentEvent {
  EventKind kind = EventKind::kUnexplained;
  // Fold / unexplained: the component. Stack: the two components.
  std::vector<VertexRef> first;
  std::vector<VertexRef> second;
  // Attach / loop events: the j-invariants involved, ascending.
  std::vector<std::uint64_t> js;
  // Spine multiplicity of an attaching edge or new loop.
  std::uint32_t multiplicity = 0;
  std::string reason;
};

struct TransitionReport {
  std::uint64_t p = 0;
  int ell = 0;
  std::vector<ComponentEvent> events;

  std::size_t count(EventKind kind) const;
};

enum class ClassifyMode {
  // Throw ClassificationIncomplete on any unexplained event.
  kStrict,
  // Record unexplained events and return.
  kLenient,
};

// Strict where a structure theorem applies (ell = 2, or ell = 3 with
// p = 11 mod 12); lenient otherwise.
ClassifyMode default_classify_mode(std::uint64_t p, int ell);

// Compares the rational graph with the spine: components are folds or
// stacked pairs, spine edges missing from the projection are attachments.
// Events are ordered folds, stacks (by smallest j), attach events (by j),
// new loops, then unexplained events.
TransitionReport project_and_classify(const FpGraph& gfp, const SpineGraph& s,
                                      ClassifyMode mode = ClassifyMode::kStrict);

struct TheoremCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks the event constraints of the structure theorem for (p, ell). For
// ell = 3 with p != 11 mod 12 there is no theorem and only unexplained events
// are rejected.
TheoremCheck sfa_theorem_check(const TransitionReport& report);

// Heuristic count of spine components from class numbers (ell = 2). For
// p = 7 mod 8 the cycle length is the order of a prime above 2 in the class
// group of discriminant -p.
double component_count_estimate(std::uint64_t p);

// Order of the class of the form (2, 1, (1 + p) / 8) in the form class group
// of discriminant -p, for p = 7 mod 8.
std::uint64_t two_class_order(std::uint64_t p);

struct ComponentDistances {
  // One sample per unordered pair of spine components.
  DistanceDistribution between;
  // Distances between uniformly random vertex pairs.
  DistanceDistribution random_pairs;
  std::uint32_t diameter = 0;
  double normalized_mean() const;
  double normalized_random_mean() const;
};

// Throws SingleComponent when the spine is connected.
ComponentDistances spine_component_distances(const IsogenyMultiGraph& g,
                                             const SpineGraph& s,
                                             std::size_t baseline_samples = 100,
                                             std::uint64_t seed = 0);

std::string report_to_json(const TransitionReport& report);

}  // namespace isogenium

#endif  // ISOGENIUM_SPINE_HPP_
