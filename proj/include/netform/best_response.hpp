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

#ifndef NETFORM_BEST_RESPONSE_HPP
#define NETFORM_BEST_RESPONSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netform/graph.hpp"
#include "netform/rational.hpp"
#include "netform/utility.hpp"

namespace netform {

struct SolverConfig {
  int max_n = 7;
  std::uint64_t max_candidates = std::uint64_t{1} << 24;
  int workers = 1;
  bool want_all = false;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

enum class CertificateKind { kExhaustive, kClosedForm, kHeuristic };

std::string_view to_string(CertificateKind kind);

// Closed-form rule identifiers recorded in certificates.
namespace rules {
inline constexpr std::string_view kEmptyReference = "empty-reference";
inline constexpr std::string_view kLowCostSelf = "low-cost-self";
inline constexpr std::string_view kDensityEmpty = "density-empty";
inline constexpr std::string_view kForestEmpty = "forest-empty";
inline constexpr std::string_view kForestSelf = "forest-self";
inline constexpr std::string_view kForestTieEmpty = "forest-tie-empty";
inline constexpr std::string_view kSpannerForest = "spanner-forest";
inline constexpr std::string_view kStarHub = "star-hub";
inline constexpr std::string_view kCompleteStar = "complete-star";
inline constexpr std::string_view kCompleteTieEmpty = "complete-tie-empty";
inline constexpr std::string_view kFlowerHub = "flower-hub";
}  // namespace rules

struct Certificate {
  CertificateKind kind = CertificateKind::kExhaustive;
  // Rule that fired for closed forms; for composite solvers a short trail
  // such as "peel(...)" or "components[...]".
  std::string rule;
  std::vector<std::string> notes;
};

struct BrResult {
  Graph graph;
  Rational utility;
  Certificate certificate;
  // Every optimum in canonical order, when requested from the exhaustive
  // solver.
  std::optional<std::vector<Graph>> all_optima;
};

// Number of graphs the exhaustive solver would score for this reference under
// the edge-count and isolated-node restrictions, saturating at UINT64_MAX.
std::uint64_t exhaustive_candidate_count(const Graph& reference, const BenefitSchedule& s,
                                         const SolverConfig& config);

// Utility-maximizing graph over all graphs on the reference's node set.
// Search is restricted to graphs with at most |E(reference)| edges that leave
// reference-isolated nodes isolated; when b(1) > c (or b(1) = c and only one
// optimum is wanted) candidates must also keep every reference component
// connected. Ties resolve to the lexicographically least edge list. Throws
// ResourceError when the active node count exceeds max_n or the candidate
// count exceeds max_candidates.
BrResult exhaustive_best_response(const Graph& reference, const BenefitSchedule& s,
                                  const SolverConfig& config = {});

struct BrnInstance {
  Graph reference;
  BenefitSchedule schedule;
  Rational threshold;

  BrnInstance(Graph reference, BenefitSchedule schedule, Rational threshold);
};

// Does some graph reach utility >= threshold? Exact.
bool brn_decision(const BrnInstance& instance, const SolverConfig& config = {});

// Best response certified by a structural rule, tried in order: empty
// reference, low cost, density threshold, forest, 2-spanner forest (medium
// cost), star subgraph (medium cost), complete reference. nullopt if no rule
// applies.
std::optional<BrResult> closed_form_best_response(const Graph& reference, const BenefitSchedule& s);

enum class InnerSolver {
  kExhaustive,
  // Closed forms first, exhaustive search when none applies.
  kClosedForm,
};

std::string_view to_string(InnerSolver inner);

// Solves each component of the reference on its own and unions the answers.
// Requires c > b(1) and every component complete or a flower of cliques
// sharing one hub; otherwise throws DomainError.
BrResult decompose_and_solve(const Graph& reference, const BenefitSchedule& s, InnerSolver inner,
                             const SolverConfig& config = {});

// Peels degree-one nodes, solves the 2-core, then re-attaches each leaf with
// its edge when b(1) > c and as an isolated node when b(1) <= c.
BrResult peel_and_solve(const Graph& reference, const BenefitSchedule& s, InnerSolver inner,
                        const SolverConfig& config = {});

// Optimum certified without search: a closed form, or for c > b(1) a
// per-component solution on complete and flower components. nullopt when the
// reference has some other shape.
std::optional<BrResult> certified_best_response(const Graph& reference, const BenefitSchedule& s);

struct GreedyMove {
  Edge edge;
  bool added = false;
  Rational utility;  // after the move
};

struct GreedyOutcome {
  Graph graph;
  Rational utility;
  std::vector<GreedyMove> trace;
};

// Single-edge add/remove hill climbing: each step applies the strictly best
// improving toggle (least edge on ties) until none improves.
GreedyOutcome greedy_local_search(const Graph& start, const Graph& reference, const BenefitSchedule& s);

}  // namespace netform

#endif  // NETFORM_BEST_RESPONSE_HPP
