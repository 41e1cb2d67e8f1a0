// Copyright 2026 The netform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netform/best_response.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <thread>

#include "netform/errors.hpp"
#include "scaled_schedule.hpp"

namespace netform {
namespace {

using detail::ScaledSchedule;

constexpr NodeMask bit(int i) { return NodeMask{1} << i; }

// Binomial coefficients up to 63 choose k; every value fits in 64 bits.
class Binomials {
 public:
  Binomials() {
    for (int p = 0; p < kRows; ++p) {
      table_[p][0] = 1;
      for (int k = 1; k <= p; ++k) table_[p][k] = table_[p - 1][k - 1] + (k < p ? table_[p - 1][k] : 0);
    }
  }
  std::uint64_t operator()(int p, int k) const {
    if (k < 0 || k > p) return 0;
    return table_[p][k];
  }

  static constexpr int kRows = 64;

 private:
  std::uint64_t table_[kRows][kRows] = {};
};

const Binomials& binomials() {
  static const Binomials table;
  return table;
}

// k-subset of {0..p-1} with colex rank r, as a bitmask.
std::uint64_t unrank_colex(int p, int k, std::uint64_t r) {
  std::uint64_t mask = 0;
  int top = p - 1;
  for (int i = k; i >= 1; --i) {
    while (binomials()(top, i) > r) --top;
    mask |= std::uint64_t{1} << top;
    r -= binomials()(top, i);
    --top;
  }
  return mask;
}

// Next mask with the same popcount in increasing numeric (colex) order.
std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t c = x & (~x + 1);
  std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Masks index edges in lexicographic order, so comparing edge lists reduces
// to the lowest differing bit: the mask holding it is smaller unless the other
// mask has nothing above it (and is then a proper prefix).
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  int p = std::countr_zero(a ^ b);
  if ((a >> p) & 1U) return (b >> p) != 0;
  return (a >> p) == 0;
}

struct SearchSpace {
  int n = 0;
  std::vector<Edge> pairs;
  int min_edges = 0;
  int max_edges = 0;
  bool keep_connected = false;
  std::vector<NodeMask> components;  // reference components with >= 2 nodes
  std::uint64_t candidates = 0;
  int active_nodes = 0;
};

SearchSpace describe_space(const Graph& reference, const BenefitSchedule& s, const SolverConfig& config) {
  SearchSpace space;
  space.n = reference.node_count();
  NodeMask active = reference.all_nodes() & ~reference.isolated_nodes();
  space.active_nodes = std::popcount(active);
  if (space.active_nodes > config.max_n) {
    throw ResourceError("candidate cap exceeded: " + std::to_string(space.active_nodes) +
                        " non-isolated reference nodes > max_n " + std::to_string(config.max_n));
  }
  for (NodeMask a = active; a != 0; a &= a - 1) {
    int u = std::countr_zero(a);
    for (NodeMask b = active & ~((bit(u) << 1) - 1); b != 0; b &= b - 1) {
      space.pairs.push_back({u, std::countr_zero(b)});
    }
  }
  const int p = static_cast<int>(space.pairs.size());
  if (p >= Binomials::kRows) {
    throw ResourceError("candidate cap exceeded: " + std::to_string(p) + " node pairs");
  }
  space.max_edges = std::min(p, static_cast<int>(reference.edge_count()));
  // Keeping reference-connected pairs connected is necessary for every
  // optimum only when b(1) > c.
  space.keep_connected = s.b1() > s.cost();
  for (NodeMask c : component_masks(reference)) {
    if (std::popcount(c) >= 2) space.components.push_back(c);
  }
  if (space.keep_connected) {
    for (NodeMask c : space.components) space.min_edges += std::popcount(c) - 1;
  }

  std::uint64_t total = 0;
  for (int j = space.min_edges; j <= space.max_edges; ++j) {
    std::uint64_t add = binomials()(p, j);
    total = (std::numeric_limits<std::uint64_t>::max() - total < add)
                ? std::numeric_limits<std::uint64_t>::max()
                : total + add;
  }
  space.candidates = total;
  return space;
}

struct WorkerBest {
  std::int64_t value = std::numeric_limits<std::int64_t>::min();
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> ties;
  bool any = false;
};

void offer(WorkerBest& best, std::int64_t value, std::uint64_t mask, bool want_all) {
  if (!best.any || value > best.value) {
    best.any = true;
    best.value = value;
    best.mask = mask;
    best.ties.clear();
    if (want_all) best.ties.push_back(mask);
  } else if (value == best.value) {
    if (mask_lex_less(mask, best.mask)) best.mask = mask;
    if (want_all) best.ties.push_back(mask);
  }
}

// Scores the candidates with global ranks [begin, end).
WorkerBest scan(const SearchSpace& space, const ScaledSchedule& scaled,
                const std::vector<NodeMask>& ref_later, std::uint64_t begin, std::uint64_t end,
                bool want_all) {
  WorkerBest best;
  const int p = static_cast<int>(space.pairs.size());
  std::vector<NodeMask> adj(static_cast<std::size_t>(space.n));

  int size = space.min_edges;
  std::uint64_t offset = 0;
  while (size <= space.max_edges && offset + binomials()(p, size) <= begin) {
    offset += binomials()(p, size);
    ++size;
  }
  if (size > space.max_edges) return best;
  std::uint64_t in_size = begin - offset;
  std::uint64_t mask = unrank_colex(p, size, in_size);

  for (std::uint64_t rank = begin; rank < end; ++rank) {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const Edge& e = space.pairs[static_cast<std::size_t>(std::countr_zero(m))];
      adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
      adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }

    bool admissible = true;
    if (space.keep_connected) {
      for (NodeMask c : space.components) {
        NodeMask seen = bit(std::countr_zero(c));
        NodeMask frontier = seen;
        while (frontier != 0 && (c & ~seen) != 0) {
          NodeMask next = 0;
          for (NodeMask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
          next &= ~seen;
          seen |= next;
          frontier = next;
        }
        if ((c & ~seen) != 0) {
          admissible = false;
          break;
        }
      }
    }
    if (admissible) {
      offer(best, scaled.utility(adj, ref_later, size), mask, want_all);
    }

    // Advance to the next candidate in rank order.
    ++in_size;
    if (in_size == binomials()(p, size)) {
      ++size;
      in_size = 0;
      mask = size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    } else {
      mask = next_combination(mask);
    }
  }
  return best;
}

Graph graph_from_mask(const SearchSpace& space, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    edges.push_back(space.pairs[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return Graph(space.n, edges);
}

BrResult make_closed_form(const Graph& reference, const BenefitSchedule& s, Graph g, std::string_view rule) {
  Rational u = conditional_utility(g, reference, s);
  return BrResult{std::move(g), std::move(u), Certificate{CertificateKind::kClosedForm, std::string(rule), {}},
                  std::nullopt};
}

// Star at the hub over every petal worth connecting: a petal of s nodes adds
// s(b(1)-c) + s(s-1)/2 b(2). Ties leave the petal out.
BrResult flower_best_response(const Graph& reference, const BenefitSchedule& s, int hub) {
  NodeMask rest = reference.all_nodes() & ~bit(hub);
  NodeMask leaves = 0;
  for (NodeMask left = rest; left != 0;) {
    int x = std::countr_zero(left);
    NodeMask petal = (reference.neighbors(x) & rest) | bit(x);
    left &= ~petal;
    long long size = std::popcount(petal);
    Rational gain = size * (s.b1() - s.cost()) + Rational(size * (size - 1), 2) * s.b2();
    if (gain > 0) leaves |= petal;
  }
  return make_closed_form(reference, s, Graph::star(reference.node_count(), hub, leaves), rules::kFlowerHub);
}

struct ComponentSolution {
  Graph graph;
  bool closed_form = false;
  std::string rule;
};

enum class ComponentShape { kSingleton, kComplete, kFlower, kOther };

ComponentShape shape_of(const Graph& sub) {
  if (sub.node_count() == 1) return ComponentShape::kSingleton;
  if (sub.is_complete()) return ComponentShape::kComplete;
  if (flower_hub(sub)) return ComponentShape::kFlower;
  return ComponentShape::kOther;
}

// Certified answer for one complete or flower component when c > b(1).
std::optional<BrResult> certified_component(const Graph& sub, const BenefitSchedule& s) {
  switch (shape_of(sub)) {
    case ComponentShape::kSingleton:
      return make_closed_form(sub, s, Graph(sub.node_count()), rules::kEmptyReference);
    case ComponentShape::kComplete:
      return closed_form_best_response(sub, s);
    case ComponentShape::kFlower:
      return flower_best_response(sub, s, *flower_hub(sub));
    case ComponentShape::kOther:
      return std::nullopt;
  }
  return std::nullopt;
}

BrResult solve_inner(const Graph& reference, const BenefitSchedule& s, InnerSolver inner,
                     const SolverConfig& config) {
  if (inner == InnerSolver::kClosedForm) {
    if (auto closed = closed_form_best_response(reference, s)) return *closed;
  }
  SolverConfig single = config;
  single.want_all = false;
  return exhaustive_best_response(reference, s, single);
}

std::string describe(const Certificate& c) {
  if (c.kind == CertificateKind::kClosedForm) return c.rule;
  return std::string(to_string(c.kind));
}

}  // namespace

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kExhaustive:
      return "EXHAUSTIVE";
    case CertificateKind::kClosedForm:
      return "CLOSED_FORM";
    case CertificateKind::kHeuristic:
      return "HEURISTIC";
  }
  return "?";
}

std::string_view to_string(InnerSolver inner) {
  return inner == InnerSolver::kExhaustive ? "exhaustive" : "closed-form";
}

std::uint64_t exhaustive_candidate_count(const Graph& reference, const BenefitSchedule& s,
                                         const SolverConfig& config) {
  return describe_space(reference, s, config).candidates;
}

BrResult exhaustive_best_response(const Graph& reference, const BenefitSchedule& s, const SolverConfig& config) {
  s.require_covers(reference.node_count());
  SearchSpace space = describe_space(reference, s, config);
  if (space.candidates > config.max_candidates) {
    throw ResourceError("candidate cap exceeded: " + std::to_string(space.candidates) + " candidates > " +
                        std::to_string(config.max_candidates));
  }
  ScaledSchedule scaled(s, reference.node_count());
  std::vector<NodeMask> ref_later = detail::later_neighbors(reference);

  const std::uint64_t total = space.candidates;
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(config.workers, 1)), 1, std::max<std::uint64_t>(total, 1));
  std::vector<WorkerBest> partial(static_cast<std::size_t>(workers));
  auto chunk = [&](std::uint64_t w) {
    std::uint64_t begin = total / workers * w + std::min(w, total % workers);
    std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
    partial[static_cast<std::size_t>(w)] = scan(space, scaled, ref_later, begin, end, config.want_all);
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
  }

  WorkerBest merged;
  for (const WorkerBest& part : partial) {
    if (!part.any) continue;
    if (!merged.any || part.value > merged.value) {
      merged = part;
    } else if (part.value == merged.value) {
      if (mask_lex_less(part.mask, merged.mask)) merged.mask = part.mask;
      merged.ties.insert(merged.ties.end(), part.ties.begin(), part.ties.end());
    }
  }
  if (!merged.any) {
    // Unreachable: the empty graph or the reference itself is always admissible.
    throw Error("exhaustive search scored no candidate");
  }

  BrResult result{graph_from_mask(space, merged.mask), scaled.to_rational(merged.value),
                  Certificate{CertificateKind::kExhaustive, "", {}}, std::nullopt};
  result.certificate.notes.push_back("candidates=" + std::to_string(space.candidates));
  if (space.keep_connected) result.certificate.notes.push_back("connectivity-pruned");
  if (config.want_all) {
    std::ranges::sort(merged.ties, mask_lex_less);
    std::vector<Graph> optima;
    optima.reserve(merged.ties.size());
    for (std::uint64_t m : merged.ties) optima.push_back(graph_from_mask(space, m));
    result.all_optima = std::move(optima);
  }
  return result;
}

BrnInstance::BrnInstance(Graph reference_in, BenefitSchedule schedule_in, Rational threshold_in)
    : reference(std::move(reference_in)), schedule(std::move(schedule_in)), threshold(std::move(threshold_in)) {
  if (threshold <= 0) throw DomainError("BRN threshold r must be positive");
  schedule.require_covers(reference.node_count());
}

bool brn_decision(const BrnInstance& instance, const SolverConfig& config) {
  SolverConfig single = config;
  single.want_all = false;
  return exhaustive_best_response(instance.reference, instance.schedule, single).utility >= instance.threshold;
}

std::optional<BrResult> closed_form_best_response(const Graph& reference, const BenefitSchedule& s) {
  const int n = reference.node_count();
  s.require_covers(n);
  const Rational b1 = s.b1();
  const Rational b2 = s.b2();
  const Rational& c = s.cost();
  const CostClass cls = classify_cost(s);

  if (reference.empty_of_edges()) return make_closed_form(reference, s, Graph(n), rules::kEmptyReference);
  if (cls == CostClass::kLow) return make_closed_form(reference, s, reference, rules::kLowCostSelf);
  if (n <= kAlphaMaxNodes && c > b1 + alpha_density(reference) * b2) {
    return make_closed_form(reference, s, Graph(n), rules::kDensityEmpty);
  }
  if (reference.is_forest()) {
    if (c > b1) return make_closed_form(reference, s, Graph(n), rules::kForestEmpty);
    if (c == b1) return make_closed_form(reference, s, Graph(n), rules::kForestTieEmpty);
    return make_closed_form(reference, s, reference, rules::kForestSelf);
  }
  if (cls == CostClass::kMedium) {
    try {
      if (auto forest = find_2spanner_forest(reference)) {
        return make_closed_form(reference, s, *forest, rules::kSpannerForest);
      }
    } catch (const ResourceError&) {
      // Undecided; fall through to the remaining rules.
    }
    if (auto center = star_center(reference)) {
      return make_closed_form(reference, s, Graph::star(n, *center), rules::kStarHub);
    }
  }
  if (reference.is_complete()) {
    // Only the high-cost regime reaches here.
    const Rational threshold = b1 + Rational(n - 2, 2) * b2;
    if (c < threshold) return make_closed_form(reference, s, Graph::star(n, 0), rules::kCompleteStar);
    if (c == threshold) return make_closed_form(reference, s, Graph(n), rules::kCompleteTieEmpty);
    return make_closed_form(reference, s, Graph(n), rules::kDensityEmpty);
  }
  return std::nullopt;
}

std::optional<BrResult> certified_best_response(const Graph& reference, const BenefitSchedule& s) {
  if (auto closed = closed_form_best_response(reference, s)) return closed;
  if (!(s.cost() > s.b1())) return std::nullopt;

  const int n = reference.node_count();
  std::vector<Graph> parts{Graph(n)};
  std::string trail;
  for (NodeMask comp : component_masks(reference)) {
    InducedSubgraph sub = induced_subgraph(reference, comp);
    auto solved = certified_component(sub.graph, s);
    if (!solved) return std::nullopt;
    if (std::popcount(comp) >= 2) {
      if (!trail.empty()) trail += ",";
      trail += solved->certificate.rule;
    }
    parts.push_back(lift(solved->graph, sub.labels, n));
  }
  Graph g = union_of(parts);
  Rational u = conditional_utility(g, reference, s);
  return BrResult{std::move(g), std::move(u),
                  Certificate{CertificateKind::kClosedForm, "components[" + trail + "]", {}}, std::nullopt};
}

BrResult decompose_and_solve(const Graph& reference, const BenefitSchedule& s, InnerSolver inner,
                             const SolverConfig& config) {
  s.require_covers(reference.node_count());
  if (!(s.b1() < s.cost())) {
    throw DomainError("decompose_and_solve requires b(1) < c");
  }
  const int n = reference.node_count();
  std::vector<InducedSubgraph> subs;
  for (NodeMask comp : component_masks(reference)) {
    InducedSubgraph sub = induced_subgraph(reference, comp);
    if (shape_of(sub.graph) == ComponentShape::kOther) {
      throw DomainError("decompose_and_solve: component containing node " + std::to_string(sub.labels.front()) +
                        " is neither complete nor a flower of cliques");
    }
    subs.push_back(std::move(sub));
  }

  std::vector<Graph> parts{Graph(n)};
  bool all_closed = true;
  std::string trail;
  for (const InducedSubgraph& sub : subs) {
    if (sub.graph.node_count() == 1) continue;
    BrResult solved = [&] {
      if (inner == InnerSolver::kClosedForm) {
        if (auto c = certified_component(sub.graph, s)) return *c;
      }
      return solve_inner(sub.graph, s, InnerSolver::kExhaustive, config);
    }();
    all_closed = all_closed && solved.certificate.kind == CertificateKind::kClosedForm;
    if (!trail.empty()) trail += ",";
    trail += describe(solved.certificate);
    parts.push_back(lift(solved.graph, sub.labels, n));
  }
  Graph g = union_of(parts);
  Rational u = conditional_utility(g, reference, s);
  return BrResult{std::move(g), std::move(u),
                  Certificate{all_closed ? CertificateKind::kClosedForm : CertificateKind::kExhaustive,
                              "components[" + trail + "]",
                              {}},
                  std::nullopt};
}

BrResult peel_and_solve(const Graph& reference, const BenefitSchedule& s, InnerSolver inner,
                        const SolverConfig& config) {
  s.require_covers(reference.node_count());
  PeelingRecord record = two_core_peel(reference);
  BrResult core = solve_inner(record.core, s, inner, config);

  const bool attach = s.b1() > s.cost();
  Graph g = core.graph;
  if (attach) {
    for (auto it = record.removals.rbegin(); it != record.removals.rend(); ++it) {
      g = g.with_edge(it->first, it->second);
    }
  }
  Rational u = conditional_utility(g, reference, s);
  Certificate cert{core.certificate.kind, "peel(" + describe(core.certificate) + ")", core.certificate.notes};
  cert.notes.push_back("peeled=" + std::to_string(record.removals.size()));
  if (!record.removals.empty()) {
    if (s.b1() == s.cost()) {
      cert.notes.push_back("leaves-isolated-at-tie");
    } else {
      cert.notes.push_back(attach ? "leaves-attached" : "leaves-isolated");
    }
  }
  return BrResult{std::move(g), std::move(u), std::move(cert), std::nullopt};
}

GreedyOutcome greedy_local_search(const Graph& start, const Graph& reference, const BenefitSchedule& s) {
  if (start.node_count() != reference.node_count()) {
    throw DomainError("greedy_local_search: node counts differ");
  }
  const int n = reference.node_count();
  ScaledSchedule scaled(s, n);
  std::vector<NodeMask> ref_later = detail::later_neighbors(reference);
  std::vector<NodeMask> adj = detail::adjacency(start);
  std::int64_t edges = static_cast<std::int64_t>(start.edge_count());
  std::int64_t current = scaled.utility(adj, ref_later, edges);

  GreedyOutcome out;
  for (;;) {
    std::int64_t best = current;
    Edge best_edge{-1, -1};
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const bool present = (adj[static_cast<std::size_t>(u)] & bit(v)) != 0;
        adj[static_cast<std::size_t>(u)] ^= bit(v);
        adj[static_cast<std::size_t>(v)] ^= bit(u);
        std::int64_t value = scaled.utility(adj, ref_later, edges + (present ? -1 : 1));
        adj[static_cast<std::size_t>(u)] ^= bit(v);
        adj[static_cast<std::size_t>(v)] ^= bit(u);
        if (value > best) {
          best = value;
          best_edge = {u, v};
        }
      }
    }
    if (best_edge.u < 0) break;
    const bool added = (adj[static_cast<std::size_t>(best_edge.u)] & bit(best_edge.v)) == 0;
    adj[static_cast<std::size_t>(best_edge.u)] ^= bit(best_edge.v);
    adj[static_cast<std::size_t>(best_edge.v)] ^= bit(best_edge.u);
    edges += added ? 1 : -1;
    current = best;
    out.trace.push_back({best_edge, added, scaled.to_rational(current)});
  }

  std::vector<Edge> final_edges;
  for (int u = 0; u < n; ++u) {
    for (NodeMask m = adj[static_cast<std::size_t>(u)] & ~((bit(u) << 1) - 1); m != 0; m &= m - 1) {
      final_edges.push_back({u, std::countr_zero(m)});
    }
  }
  out.graph = Graph(n, final_edges);
  out.utility = scaled.to_rational(current);
  return out;
}

}  // namespace netform
