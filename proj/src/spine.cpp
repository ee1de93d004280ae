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

#include "isogenium/spine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "isogenium/bitbfs.hpp"
#include "isogenium/errors.hpp"
#include "isogenium/metrics.hpp"
#include "isogenium/modpoly.hpp"

namespace isogenium {
namespace {

using JPair = std::pair<std::uint64_t, std::uint64_t>;

JPair ordered(std::uint64_t a, std::uint64_t b) {
  return a <= b ? JPair{a, b} : JPair{b, a};
}

std::vector<VertexRef> refs(const FpGraph& g,
                            const std::vector<std::uint32_t>& vs) {
  std::vector<VertexRef> out;
  for (std::uint32_t v : vs) {
    out.push_back(VertexRef{g.vertices[v].j.v, g.vertices[v].twist_tag});
  }
  return out;
}

bool contains(const std::vector<VertexRef>& vs, std::uint64_t j, int tag) {
  return std::find(vs.begin(), vs.end(), VertexRef{j, tag}) != vs.end();
}

std::uint64_t reduce(std::int64_t x, std::uint64_t p) {
  return PrimeField(p).from_int(x).v;
}

// Binary quadratic form (a, b, c) with b^2 - 4ac = D < 0.
struct Form {
  std::int64_t a, b, c;
  friend bool operator==(const Form&, const Form&) = default;
};

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

Form reduce_form(Form f, std::int64_t d) {
  auto normalize = [&](Form& g) {
    if (-g.a < g.b && g.b <= g.a) return;
    const std::int64_t r = floor_div(g.a - g.b, 2 * g.a);
    g.b += 2 * r * g.a;
    g.c = (g.b * g.b - d) / (4 * g.a);
  };
  normalize(f);
  while (f.a > f.c) {
    f = Form{f.c, -f.b, f.a};
    normalize(f);
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

// Extended gcd: returns (g, x, y) with x a + y b = g >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> xgcd(std::int64_t a,
                                                          std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = floor_div(a, b);
    std::tie(a, b) = std::make_tuple(b, a - q * b);
    std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

// Gauss composition (Cohen, Algorithm 5.4.7) followed by reduction.
Form compose(Form f1, Form f2, std::int64_t d) {
  if (f1.a > f2.a) std::swap(f1, f2);
  const std::int64_t s = (f1.b + f2.b) / 2;
  const std::int64_t n = f2.b - s;
  std::int64_t y1, dd;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    dd = f1.a;
  } else {
    auto [g, u, v] = xgcd(f2.a, f1.a);
    (void)v;
    dd = g;
    y1 = u;
  }
  std::int64_t x2, y2, d1;
  if (s % dd == 0) {
    y2 = -1;
    x2 = 0;
    d1 = dd;
  } else {
    auto [g, u, v] = xgcd(s, dd);
    d1 = g;
    x2 = u;
    y2 = -v;
  }
  const std::int64_t v1 = f1.a / d1;
  const std::int64_t v2 = f2.a / d1;
  i128 r = (static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * f2.c) % v1;
  if (r < 0) r += v1;
  const std::int64_t b3 = f2.b + 2 * v2 * static_cast<std::int64_t>(r);
  const std::int64_t a3 = v1 * v2;
  const std::int64_t c3 = (b3 * b3 - d) / (4 * a3);
  return reduce_form(Form{a3, b3, c3}, d);
}

}  // namespace

SpineGraph extract_spine(const IsogenyMultiGraph& g) {
  SpineGraph s;
  s.p = g.p();
  s.ell = g.ell();
  std::vector<std::int64_t> local(g.size(), -1);
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (g.is_rational(i)) {
      local[i] = static_cast<std::int64_t>(s.members.size());
      s.members.push_back(i);
      s.js.push_back(g.vertex(i).a0);
    }
  }
  s.adjacency.resize(s.members.size());
  std::vector<std::uint32_t> parent(s.members.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t k = 0; k < s.members.size(); ++k) {
    for (const Edge& e : g.edges(s.members[k])) {
      if (local[e.target] < 0) continue;
      const auto t = static_cast<std::uint32_t>(local[e.target]);
      s.adjacency[k].push_back(Edge{t, e.multiplicity});
      std::uint32_t a = find(k), b = find(t);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::uint32_t, std::uint32_t> ids;
  s.component.resize(s.members.size());
  for (std::uint32_t k = 0; k < s.members.size(); ++k) {
    auto [it, fresh] = ids.emplace(find(k), static_cast<std::uint32_t>(ids.size()));
    s.component[k] = it->second;
  }
  s.component_count = static_cast<std::uint32_t>(ids.size());
  return s;
}

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kFold:
      return "fold";
    case EventKind::kStack:
      return "stack";
    case EventKind::kAttachEdge:
      return "attach_edge";
    case EventKind::kAttachAlongJ:
      return "attach_along_j";
    case EventKind::kInternalEdge:
      return "internal_edge";
    case EventKind::kNewLoop:
      return "new_loop";
    case EventKind::kUnexplained:
      return "unexplained";
  }
  return "unexplained";
}

std::size_t TransitionReport::count(EventKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(),
                    [&](const ComponentEvent& e) { return e.kind == kind; }));
}

ClassifyMode default_classify_mode(std::uint64_t p, int ell) {
  if (ell == 3 && p % 12 != 11) return ClassifyMode::kLenient;
  return ClassifyMode::kStrict;
}

TransitionReport project_and_classify(const FpGraph& gfp, const SpineGraph& s,
                                      ClassifyMode mode) {
  if (gfp.p != s.p || gfp.ell != s.ell) {
    throw std::invalid_argument("rational graph and spine disagree on (p, ell)");
  }
  {
    std::vector<std::uint64_t> a, b;
    for (std::size_t v = 0; v < gfp.vertices.size(); v += 2) {
      a.push_back(gfp.vertices[v].j.v);
    }
    for (Fp j : s.js) b.push_back(j.v);
    if (a != b) throw InvariantViolation("rational graph and spine j-sets differ");
  }
  const std::size_t n = gfp.vertices.size();
  auto jof = [&](std::uint32_t v) { return gfp.vertices[v].j.v; };
  const auto comp = gfp.components();
  const auto adj = gfp.adjacency();

  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t v = 0; v < n; ++v) groups[comp[v]].push_back(v);

  std::vector<std::vector<std::uint64_t>> nbr_js(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t u : adj[v]) nbr_js[v].push_back(jof(u));
    std::sort(nbr_js[v].begin(), nbr_js[v].end());
  }
  std::vector<std::vector<JPair>> comp_edges(n);
  std::set<JPair> projected;
  for (const auto& [u, v] : gfp.edges) {
    comp_edges[comp[u]].push_back(ordered(jof(u), jof(v)));
    projected.insert(ordered(jof(u), jof(v)));
  }
  for (auto& e : comp_edges) std::sort(e.begin(), e.end());

  std::set<std::uint64_t> along;
  for (std::uint32_t v = 0; v < n; v += 2) {
    const std::uint32_t w = v + 1;
    if (comp[v] != comp[w] && nbr_js[v] != nbr_js[w]) along.insert(jof(v));
  }

  TransitionReport report;
  report.p = gfp.p;
  report.ell = gfp.ell;
  std::vector<ComponentEvent> folds, stacks, attaches, loops, unexplained;

  std::set<std::uint32_t> assigned;
  for (const auto& [root, members] : groups) {
    if (assigned.count(root)) continue;
    std::vector<std::uint32_t> plain;
    bool has_along = false;
    for (std::uint32_t v : members) {
      if (along.count(jof(v))) {
        has_along = true;
      } else {
        plain.push_back(v);
      }
    }
    // A component made only of attach-along-j vertices folds vacuously;
    // this happens when 1728 and 54000 coincide mod p.
    const bool folds_here =
        std::all_of(plain.begin(), plain.end(), [&](std::uint32_t v) {
          return comp[gfp.twin(v)] == root;
        });
    if (folds_here) {
      assigned.insert(root);
      ComponentEvent e;
      e.kind = EventKind::kFold;
      e.first = refs(gfp, members);
      folds.push_back(std::move(e));
      continue;
    }
    std::string reason;
    {
      const std::uint32_t other = comp[gfp.twin(plain.front())];
      const auto& partner = groups[other];
      auto twins_in = [&](const std::vector<std::uint32_t>& vs,
                          std::uint32_t target) {
        return std::all_of(vs.begin(), vs.end(), [&](std::uint32_t v) {
          return comp[gfp.twin(v)] == target;
        });
      };
      bool partner_along = std::any_of(
          partner.begin(), partner.end(),
          [&](std::uint32_t v) { return along.count(jof(v)) != 0; });
      if (assigned.count(other)) {
        reason = "twin component already classified";
      } else if (has_along || partner_along) {
        reason = "stacking candidate contains an attach-along-j vertex";
      } else if (!twins_in(members, other) || !twins_in(partner, root)) {
        reason = "twins are spread over several components";
      } else if (comp_edges[root] != comp_edges[other]) {
        reason = "twin components are not isomorphic after relabelling";
      } else {
        assigned.insert(root);
        assigned.insert(other);
        ComponentEvent e;
        e.kind = EventKind::kStack;
        e.first = refs(gfp, members);
        e.second = refs(gfp, partner);
        stacks.push_back(std::move(e));
        continue;
      }
    }
    assigned.insert(root);
    ComponentEvent e;
    e.kind = EventKind::kUnexplained;
    e.first = refs(gfp, members);
    e.reason = reason;
    unexplained.push_back(std::move(e));
  }

  std::map<JPair, std::uint32_t> spine_pairs;
  for (std::uint32_t k = 0; k < s.size(); ++k) {
    for (const Edge& e : s.adjacency[k]) {
      const JPair key = ordered(s.js[k].v, s.js[e.target].v);
      auto& m = spine_pairs[key];
      m = std::max(m, e.multiplicity);
    }
  }
  for (const JPair& pr : projected) {
    if (!spine_pairs.count(pr)) {
      throw InvariantViolation("rational edge " + std::to_string(pr.first) +
                               "-" + std::to_string(pr.second) +
                               " is missing from the spine");
    }
  }
  // Spine components before any new edge is added.
  std::map<std::uint64_t, std::uint64_t> jroot;
  for (Fp j : s.js) jroot[j.v] = j.v;
  auto jfind = [&](std::uint64_t x) {
    while (jroot[x] != x) x = jroot[x] = jroot[jroot[x]];
    return x;
  };
  for (const JPair& pr : projected) {
    const std::uint64_t a = jfind(pr.first), b = jfind(pr.second);
    if (a != b) jroot[std::max(a, b)] = std::min(a, b);
  }
  std::set<std::uint64_t> roots;
  for (Fp j : s.js) roots.insert(jfind(j.v));
  const bool several = roots.size() > 1;
  for (const auto& [pr, mult] : spine_pairs) {
    if (projected.count(pr)) continue;
    ComponentEvent e;
    e.multiplicity = mult;
    if (pr.first == pr.second) {
      e.kind = EventKind::kNewLoop;
      e.js = {pr.first};
      loops.push_back(std::move(e));
    } else {
      // With a single component every new edge attaches it to itself.
      e.kind = several && jfind(pr.first) == jfind(pr.second)
                   ? EventKind::kInternalEdge
                   : EventKind::kAttachEdge;
      e.js = {pr.first, pr.second};
      if (mult < 2) {
        ComponentEvent bad = e;
        bad.kind = EventKind::kUnexplained;
        bad.reason = "new edge is not a double edge";
        unexplained.push_back(std::move(bad));
      }
      attaches.push_back(std::move(e));
    }
  }
  for (std::uint64_t j : along) {
    ComponentEvent e;
    e.kind = EventKind::kAttachAlongJ;
    e.js = {j};
    attaches.push_back(std::move(e));
  }

  auto by_first_j = [](const ComponentEvent& a, const ComponentEvent& b) {
    return a.first.front().j < b.first.front().j;
  };
  std::stable_sort(stacks.begin(), stacks.end(), by_first_j);
  std::stable_sort(attaches.begin(), attaches.end(),
                   [](const ComponentEvent& a, const ComponentEvent& b) {
                     return std::tie(a.js, a.kind) < std::tie(b.js, b.kind);
                   });
  for (auto* list : {&folds, &stacks, &attaches, &loops, &unexplained}) {
    for (auto& e : *list) report.events.push_back(std::move(e));
  }
  if (mode == ClassifyMode::kStrict && !unexplained.empty()) {
    throw ClassificationIncomplete(
        "p = " + std::to_string(gfp.p) + ", ell = " + std::to_string(gfp.ell) +
        ": " + std::to_string(unexplained.size()) +
        " unexplained event(s), first: " + unexplained.front().reason);
  }
  return report;
}

TheoremCheck sfa_theorem_check(const TransitionReport& report) {
  TheoremCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.violations.push_back(std::move(why));
  };
  const std::uint64_t p = report.p;
  const int ell = report.ell;

  if (report.count(EventKind::kUnexplained) != 0) fail("unexplained events");

  std::vector<const ComponentEvent*> folds, edges, internal, along, loops;
  for (const auto& e : report.events) {
    if (e.kind == EventKind::kFold) folds.push_back(&e);
    if (e.kind == EventKind::kAttachEdge) edges.push_back(&e);
    if (e.kind == EventKind::kInternalEdge) internal.push_back(&e);
    if (e.kind == EventKind::kAttachAlongJ) along.push_back(&e);
    if (e.kind == EventKind::kNewLoop) loops.push_back(&e);
  }

  std::vector<const ComponentEvent*> new_edges = edges;
  new_edges.insert(new_edges.end(), internal.begin(), internal.end());
  const auto locus = double_edge_locus(ell, p);
  for (const auto* e : new_edges) {
    if (e->multiplicity < 2) fail("new edge with multiplicity 1");
    for (std::uint64_t j : e->js) {
      const Fp2 x{Fp{j}, Fp{0}};
      if (std::find(locus.begin(), locus.end(), x) == locus.end()) {
        fail("new edge endpoint " + std::to_string(j) +
             " is off the double-edge locus");
      }
    }
  }

  auto loops_allowed = [&](std::initializer_list<std::int64_t> allowed) {
    for (const auto* e : loops) {
      bool ok = false;
      for (std::int64_t a : allowed) ok = ok || e->js.front() == reduce(a, p);
      if (!ok) fail("new loop at " + std::to_string(e->js.front()));
    }
  };
  auto fold_has_both = [&](const ComponentEvent* f, std::uint64_t j) {
    return contains(f->first, j, 0) && contains(f->first, j, 1);
  };
  const std::uint64_t j1728 = reduce(1728, p);

  if (ell == 2) {
    if (!along.empty()) fail("attachment along a j-invariant for ell = 2");
    if (new_edges.size() > 1) fail("more than one new edge");
    if (folds.size() > 1) fail("more than one fold");
    if (p % 4 == 3) {
      if (folds.size() != 1 || !fold_has_both(folds.front(), j1728)) {
        fail("p = 3 mod 4 but no fold through 1728");
      } else if (p % 8 == 7 && !fold_has_both(folds.front(), reduce(8000, p))) {
        fail("p = 7 mod 8 fold does not reach 8000");
      }
    } else if (p % 8 == 5) {
      const std::uint64_t j8000 = reduce(8000, p);
      if (folds.size() != 1 ||
          folds.front()->first !=
              std::vector<VertexRef>{{j8000, 0}, {j8000, 1}}) {
        fail("p = 5 mod 8 but the fold is not the 8000 edge");
      }
    } else if (!folds.empty()) {
      fail("p = 1 mod 8 has a fold");
    }
    if (!new_edges.empty()) {
      auto roots = attachment_roots(p);
      if (!roots ||
          new_edges.front()->js !=
              std::vector<std::uint64_t>{roots->first.v, roots->second.v}) {
        fail("new edge is not at the roots of the discriminant -15 "
             "class polynomial");
      }
    }
    loops_allowed({-3375});
    return out;
  }

  if (p % 12 != 11) return out;

  if (folds.size() != 2) fail("expected exactly two folds");
  if (along.size() != 1 || along.front()->js.front() != j1728) {
    fail("expected a single attachment along 1728");
  }
  if (edges.size() > 4) fail("more than four attaching edges");
  const std::size_t m = along.size(), n = new_edges.size();
  if (m + 2 * n > static_cast<std::size_t>(2 * ell * (2 * ell - 1))) {
    fail("too many new isogenies");
  }
  if (folds.size() == 2) {
    for (const auto* f : folds) {
      if (!contains(f->first, j1728, 0) && !contains(f->first, j1728, 1)) {
        fail("fold without a 1728 vertex");
      }
    }
    const std::uint64_t j0 = 0, j54000 = reduce(54000, p);
    if (j0 != j1728 && j54000 != j1728 && j0 != j54000) {
      const bool a = fold_has_both(folds[0], j0) && fold_has_both(folds[1], j54000);
      const bool b = fold_has_both(folds[1], j0) && fold_has_both(folds[0], j54000);
      if (!a && !b) fail("folds do not separate 0 and 54000");
    }
  }
  loops_allowed({8000, -32768});
  return out;
}

std::uint64_t two_class_order(std::uint64_t p) {
  if (p % 8 != 7) throw std::invalid_argument("needs p = 7 mod 8");
  const auto d = -static_cast<std::int64_t>(p);
  const Form identity = reduce_form(Form{1, 1, (1 - d) / 4}, d);
  const Form f = reduce_form(Form{2, 1, (1 - d) / 8}, d);
  Form g = f;
  std::uint64_t order = 1;
  while (!(g == identity)) {
    g = compose(g, f, d);
    ++order;
  }
  return order;
}

double component_count_estimate(std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  if (p % 4 == 1) return static_cast<double>(class_number(-4 * sp)) / 4.0;
  const auto h = static_cast<double>(class_number(-sp));
  if (p % 8 == 3) return h / 2.0;
  return h / (2.0 * static_cast<double>(two_class_order(p)));
}

double ComponentDistances::normalized_mean() const {
  return diameter == 0 ? 0.0 : between.mean() / diameter;
}

double ComponentDistances::normalized_random_mean() const {
  return diameter == 0 ? 0.0 : random_pairs.mean() / diameter;
}

ComponentDistances spine_component_distances(const IsogenyMultiGraph& g,
                                             const SpineGraph& s,
                                             std::size_t baseline_samples,
                                             std::uint64_t seed) {
  if (s.component_count < 2) {
    throw SingleComponent("spine is connected; no component pairs");
  }
  const CsrGraph csr = undirected_view(g);
  ComponentDistances out;
  out.diameter = diameter(g).value;
  out.between.kind = "spine_components";
  out.between.p = out.random_pairs.p = g.p();
  out.between.ell = out.random_pairs.ell = g.ell();
  out.between.seed = out.random_pairs.seed = seed;
  out.between.exhaustive = true;
  out.random_pairs.kind = "random_pairs";

  std::vector<std::vector<std::uint32_t>> parts(s.component_count);
  for (std::uint32_t k = 0; k < s.size(); ++k) {
    parts[s.component[k]].push_back(s.members[k]);
  }
  for (std::uint32_t c = 0; c + 1 < parts.size(); ++c) {
    const auto dist = bfs_from(csr, parts[c]);
    for (std::uint32_t d = c + 1; d < parts.size(); ++d) {
      std::int32_t best = INT32_MAX;
      for (std::uint32_t v : parts[d]) best = std::min(best, dist[v]);
      out.between.samples.push_back(static_cast<std::uint32_t>(best));
    }
  }

  SampleRng rng(seed);
  const std::uint64_t n = g.size();
  for (std::size_t i = 0; i < baseline_samples && n > 1; ++i) {
    const auto a = static_cast<std::uint32_t>(rng.below(n));
    auto b = static_cast<std::uint32_t>(rng.below(n - 1));
    if (b >= a) ++b;
    const std::uint32_t src[] = {a};
    out.random_pairs.samples.push_back(
        static_cast<std::uint32_t>(bfs_from(csr, src)[b]));
  }
  out.between.metadata = {{"diameter", out.diameter},
                          {"normalized_mean", out.normalized_mean()}};
  out.random_pairs.metadata = {{"diameter", out.diameter},
                               {"normalized_mean", out.normalized_random_mean()}};
  return out;
}

std::string report_to_json(const TransitionReport& report) {
  auto vertex_list = [](const std::vector<VertexRef>& vs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& v : vs) a.push_back({v.j, v.twist_tag});
    return a;
  };
  nlohmann::ordered_json out;
  out["p"] = report.p;
  out["ell"] = report.ell;
  auto& events = out["events"] = nlohmann::ordered_json::array();
  for (const auto& e : report.events) {
    nlohmann::ordered_json x;
    x["kind"] = event_kind_name(e.kind);
    switch (e.kind) {
      case EventKind::kFold:
        x["vertices"] = vertex_list(e.first);
        break;
      case EventKind::kStack:
        x["first"] = vertex_list(e.first);
        x["second"] = vertex_list(e.second);
        break;
      case EventKind::kAttachEdge:
      case EventKind::kInternalEdge:
        x["j"] = e.js;
        x["multiplicity"] = e.multiplicity;
        break;
      case EventKind::kAttachAlongJ:
        x["j"] = e.js.front();
        break;
      case EventKind::kNewLoop:
        x["j"] = e.js.front();
        x["multiplicity"] = e.multiplicity;
        break;
      case EventKind::kUnexplained:
        if (!e.first.empty()) x["vertices"] = vertex_list(e.first);
        if (!e.js.empty()) x["j"] = e.js;
        x["reason"] = e.reason;
        break;
    }
    events.push_back(std::move(x));
  }
  return out.dump() + "\n";
}

}  // namespace isogenium
