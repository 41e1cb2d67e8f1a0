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

#include "netform/reduction.hpp"

#include <string>

#include "netform/errors.hpp"

namespace netform {

TtsInstance::TtsInstance(Graph graph_in, int t_in) : graph(std::move(graph_in)), t(t_in) {
  if (t < 1) throw DomainError("tree spanner stretch t must be positive");
  if (!graph.is_connected()) throw DomainError("tree spanner instance must be connected");
}

BrnInstance brn_instance_from_tts(const TtsInstance& instance) {
  if (instance.t != 4) {
    throw DomainError("reduction is defined for t = 4 only, got t = " + std::to_string(instance.t));
  }
  const int n = instance.graph.node_count();
  if (n < 6) {
    throw DomainError("reduction needs n >= 6; smaller instances always have a tree 4-spanner");
  }
  std::vector<Rational> values(static_cast<std::size_t>(n - 1), Rational(0));
  values[0] = 3;
  values[1] = 2;
  values[2] = 2;
  values[3] = 2;
  BenefitSchedule schedule(std::move(values), Rational(2));
  const long long edges = static_cast<long long>(instance.graph.edge_count());
  Rational r = (n - 1) * (schedule.b1() - schedule.cost()) + (edges - n + 1) * schedule.b2();
  return BrnInstance(instance.graph, std::move(schedule), std::move(r));
}

std::optional<Graph> find_tree_spanner(const TtsInstance& instance, std::uint64_t tree_cap) {
  std::optional<Graph> found;
  TreeEnumeration walk =
      for_each_spanning_tree(instance.graph, instance.graph.all_nodes(), tree_cap, [&](const Graph& tree) {
        if (!is_t_spanner(tree, instance.graph, instance.t)) return true;
        found = tree;
        return false;
      });
  if (!found && walk.cap_reached) {
    throw ResourceError("spanning-tree cap of " + std::to_string(tree_cap) + " reached before a decision");
  }
  return found;
}

bool tts_decision(const TtsInstance& instance, std::uint64_t tree_cap) {
  return find_tree_spanner(instance, tree_cap).has_value();
}

ReductionReport verify_reduction(const TtsInstance& instance, const SolverConfig& config, std::uint64_t tree_cap) {
  ReductionReport report;
  report.tts = tts_decision(instance, tree_cap);

  BrnInstance brn = brn_instance_from_tts(instance);
  SolverConfig single = config;
  single.want_all = false;
  BrResult best = exhaustive_best_response(brn.reference, brn.schedule, single);
  report.threshold = brn.threshold;
  report.optimum = best.utility;
  report.brn = best.utility >= brn.threshold;
  report.agree = report.tts == report.brn;
  if (report.brn) {
    const Graph& w = best.graph;
    report.witness_is_tree_spanner = w.is_subgraph_of(instance.graph) && w.is_connected() &&
                                     w.edge_count() + 1 == static_cast<std::size_t>(w.node_count()) &&
                                     is_t_spanner(w, instance.graph, 4);
    report.witness = w;
  }
  return report;
}

}  // namespace netform
