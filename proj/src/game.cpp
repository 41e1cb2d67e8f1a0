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

#include "netform/game.hpp"

#include <algorithm>
#include <string>

#include "netform/errors.hpp"

namespace netform {
namespace {

NodeMask nodes_between(int first, int last) {
  NodeMask m = 0;
  for (int v = first; v < last; ++v) m |= NodeMask{1} << v;
  return m;
}

void require_players_fit(const LayerProfile& profile, const std::vector<Player>& players) {
  if (profile.layers.size() != players.size()) {
    throw DomainError("profile has " + std::to_string(profile.layers.size()) + " layers for " +
                      std::to_string(players.size()) + " players");
  }
}

// Fills `layers` (indexed like `players`) for the high-cost players listed in
// `members`, placing the construction on nodes first_node..first_node+n-1 of a
// graph with total_n nodes.
void place_high_cost(const std::vector<Player>& players, const std::vector<int>& members, int n, int first_node,
                     int total_n, std::vector<Graph>& layers) {
  std::vector<Player> subset;
  subset.reserve(members.size());
  for (int idx : members) subset.push_back(players[static_cast<std::size_t>(idx)]);
  HighCostPartition part = high_cost_partition(subset, n, first_node);

  NodeMask lower_blocks = 0;
  for (std::size_t l = 0; l < part.node_blocks.size(); ++l) {
    if (l >= 1) {
      for (int local : part.player_blocks[l]) {
        // Centers are the node with the player's rank in the sorted order.
        auto rank = std::ranges::find(part.order, local) - part.order.begin();
        int center = first_node + static_cast<int>(rank);
        layers[static_cast<std::size_t>(members[static_cast<std::size_t>(local)])] =
            Graph::star(total_n, center, lower_blocks);
      }
    }
    for (int v : part.node_blocks[l]) lower_blocks |= NodeMask{1} << v;
  }
}

}  // namespace

Player::Player(int id_in, BenefitSchedule schedule_in, int n)
    : id(id_in), schedule(std::move(schedule_in)), cost_class(classify_cost(schedule)) {
  schedule.require_covers(n);
  if (cost_class == CostClass::kHigh) k = k_index(schedule, n);
}

LayerProfile::LayerProfile(int n_in, std::vector<Graph> layers_in) : n(n_in), layers(std::move(layers_in)) {
  for (const Graph& g : layers) {
    if (g.node_count() != n) {
      throw DomainError("layer with " + std::to_string(g.node_count()) + " nodes in a profile on " +
                        std::to_string(n));
    }
  }
}

LayerProfile LayerProfile::empty(int n, std::size_t players) {
  return LayerProfile(n, std::vector<Graph>(players, Graph(n)));
}

Graph reference_graph(const LayerProfile& profile, std::size_t player) {
  if (player >= profile.layers.size()) {
    throw DomainError("player index " + std::to_string(player) + " out of range");
  }
  std::vector<Graph> others{Graph(profile.n)};
  for (std::size_t j = 0; j < profile.layers.size(); ++j) {
    if (j != player) others.push_back(profile.layers[j]);
  }
  return complement(union_of(others));
}

Rational player_utility(const LayerProfile& profile, const std::vector<Player>& players, std::size_t player) {
  require_players_fit(profile, players);
  return conditional_utility(profile.layers.at(player), reference_graph(profile, player),
                             players[player].schedule);
}

CostClasses classify_players(const std::vector<Player>& players) {
  CostClasses out;
  for (std::size_t i = 0; i < players.size(); ++i) {
    switch (players[i].cost_class) {
      case CostClass::kLow:
        out.low.push_back(static_cast<int>(i));
        break;
      case CostClass::kMedium:
        out.medium.push_back(static_cast<int>(i));
        break;
      case CostClass::kHigh:
        out.high.push_back(static_cast<int>(i));
        break;
    }
  }
  return out;
}

HighCostPartition high_cost_partition(const std::vector<Player>& players, int n, int first_node) {
  HighCostPartition part;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const Player& p = players[i];
    if (p.cost_class != CostClass::kHigh) {
      throw DomainError("high_cost_partition: player " + std::to_string(p.id) + " is not high-cost");
    }
    if (p.k && *p.k <= n) {
      part.order.push_back(static_cast<int>(i));
    } else {
      part.always_empty.push_back(static_cast<int>(i));
    }
  }
  std::ranges::stable_sort(part.order, [&](int a, int b) {
    return *players[static_cast<std::size_t>(a)].k < *players[static_cast<std::size_t>(b)].k;
  });
  const int m = static_cast<int>(part.order.size());
  auto k_at = [&](int position) { return *players[static_cast<std::size_t>(part.order[static_cast<std::size_t>(position - 1)])].k; };

  // i_1 uses the full node count; each later index is bounded by the previous.
  int bound = n;
  int limit = m;
  for (;;) {
    int found = 0;
    for (int i = limit; i >= 1; --i) {
      if (k_at(i) <= bound - i + 1) {
        found = i;
        break;
      }
    }
    if (found == 0) break;
    part.indices.push_back(found);
    bound = found;
    limit = found - 1;
  }

  const int r = static_cast<int>(part.indices.size());
  part.player_blocks.assign(static_cast<std::size_t>(r + 1), {});
  part.node_blocks.assign(static_cast<std::size_t>(r + 1), {});
  const int top = r == 0 ? 0 : part.indices.front();
  for (int pos = top + 1; pos <= m; ++pos) part.player_blocks[0].push_back(part.order[static_cast<std::size_t>(pos - 1)]);
  part.player_blocks[0].insert(part.player_blocks[0].end(), part.always_empty.begin(), part.always_empty.end());
  for (int v = top + 1; v <= n; ++v) part.node_blocks[0].push_back(first_node + v - 1);
  for (int l = 1; l <= r; ++l) {
    const int hi = part.indices[static_cast<std::size_t>(l - 1)];
    const int lo = l < r ? part.indices[static_cast<std::size_t>(l)] : 0;
    for (int pos = lo + 1; pos <= hi; ++pos) {
      part.player_blocks[static_cast<std::size_t>(l)].push_back(part.order[static_cast<std::size_t>(pos - 1)]);
      part.node_blocks[static_cast<std::size_t>(l)].push_back(first_node + pos - 1);
    }
  }
  return part;
}

LayerProfile construct_high_cost_equilibrium(const std::vector<Player>& players, int n) {
  std::vector<Graph> layers(players.size(), Graph(n));
  std::vector<int> members(players.size());
  for (std::size_t i = 0; i < players.size(); ++i) members[i] = static_cast<int>(i);
  place_high_cost(players, members, n, 0, n, layers);
  return LayerProfile(n, std::move(layers));
}

LayerProfile construct_low_cost_equilibrium(const std::vector<Player>& players, int n) {
  CostClasses classes = classify_players(players);
  if (classes.low.empty()) throw DomainError("low-cost construction needs at least one low-cost player");
  std::vector<Graph> layers(players.size(), Graph(n));
  std::vector<Graph> used{Graph(n)};
  for (std::size_t q = 0; q < classes.medium.size(); ++q) {
    const int center = static_cast<int>(q);
    if (center >= n) break;
    Graph star = Graph::star(n, center, nodes_between(center + 1, n));
    layers[static_cast<std::size_t>(classes.medium[q])] = star;
    used.push_back(star);
  }
  std::vector<std::vector<Edge>> shares(classes.low.size());
  std::size_t next = 0;
  for (const Edge& e : complement(union_of(used)).edges()) {
    shares[next].push_back(e);
    next = (next + 1) % shares.size();
  }
  for (std::size_t q = 0; q < classes.low.size(); ++q) {
    layers[static_cast<std::size_t>(classes.low[q])] = Graph(n, shares[q]);
  }
  return LayerProfile(n, std::move(layers));
}

LayerProfile construct_mixed_equilibrium(const std::vector<Player>& players, int n) {
  CostClasses classes = classify_players(players);
  if (!classes.low.empty()) throw DomainError("mixed construction requires no low-cost players");
  const int mu = static_cast<int>(classes.medium.size());
  if (mu > n) {
    throw DomainError("mixed construction needs at most n medium-cost players (" + std::to_string(mu) + " > " +
                      std::to_string(n) + ")");
  }
  std::vector<Graph> layers(players.size(), Graph(n));
  for (int q = 0; q < mu; ++q) {
    layers[static_cast<std::size_t>(classes.medium[static_cast<std::size_t>(q)])] =
        Graph::star(n, q, nodes_between(q + 1, n));
  }
  place_high_cost(players, classes.high, n - mu, mu, n, layers);
  return LayerProfile(n, std::move(layers));
}

std::string_view to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kLowCost:
      return "low-cost";
    case EquilibriumKind::kHighCost:
      return "high-cost";
    case EquilibriumKind::kMixed:
      return "mixed";
  }
  return "?";
}

EquilibriumKind equilibrium_kind(const std::vector<Player>& players) {
  CostClasses classes = classify_players(players);
  if (!classes.low.empty()) return EquilibriumKind::kLowCost;
  if (classes.medium.empty()) return EquilibriumKind::kHighCost;
  return EquilibriumKind::kMixed;
}

LayerProfile construct_equilibrium(const std::vector<Player>& players, int n) {
  switch (equilibrium_kind(players)) {
    case EquilibriumKind::kLowCost:
      return construct_low_cost_equilibrium(players, n);
    case EquilibriumKind::kHighCost:
      return construct_high_cost_equilibrium(players, n);
    case EquilibriumKind::kMixed:
      return construct_mixed_equilibrium(players, n);
  }
  throw Error("unknown equilibrium kind");
}

std::string_view to_string(VerifyMode mode) {
  return mode == VerifyMode::kExhaustive ? "EXHAUSTIVE" : "STRUCTURAL";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kVerified:
      return "verified";
    case Verdict::kFailed:
      return "failed";
    case Verdict::kUnverifiable:
      return "unverifiable";
  }
  return "?";
}

NashReport verify_nash(const LayerProfile& profile, const std::vector<Player>& players, VerifyMode mode,
                       const SolverConfig& config) {
  require_players_fit(profile, players);
  SolverConfig single = config;
  single.want_all = false;

  NashReport report;
  bool any_failed = false;
  bool any_unverifiable = false;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const Graph reference = reference_graph(profile, i);
    const BenefitSchedule& s = players[i].schedule;
    PlayerVerdict v;
    v.method = mode;
    v.achieved = conditional_utility(profile.layers[i], reference, s);

    std::optional<BrResult> best;
    if (mode == VerifyMode::kExhaustive) {
      best = exhaustive_best_response(reference, s, single);
    } else {
      best = certified_best_response(reference, s);
    }

    if (!best) {
      v.verdict = Verdict::kUnverifiable;
      v.detail = "reference shape has no certified best response";
      any_unverifiable = true;
    } else {
      v.optimum = best->utility;
      v.certificate = best->certificate.kind == CertificateKind::kClosedForm
                          ? best->certificate.rule
                          : std::string(to_string(best->certificate.kind));
      if (v.achieved > best->utility) {
        throw Error("player " + std::to_string(i) + " exceeds the certified optimum; certificate is unsound");
      }
      if (v.achieved == best->utility) {
        v.verdict = Verdict::kVerified;
      } else {
        v.verdict = Verdict::kFailed;
        v.deviation = best->graph;
        any_failed = true;
      }
    }
    report.players.push_back(std::move(v));
  }
  report.overall = !any_failed && !any_unverifiable;
  report.conclusive = any_failed || !any_unverifiable;
  return report;
}

DynamicsResult best_response_dynamics(const LayerProfile& initial, const std::vector<Player>& players,
                                      int max_rounds, const SolverConfig& config) {
  require_players_fit(initial, players);
  if (max_rounds < 0) throw DomainError("max_rounds must be nonnegative");
  SolverConfig single = config;
  single.want_all = false;

  auto utilities_of = [&](const LayerProfile& p) {
    std::vector<Rational> u;
    for (std::size_t i = 0; i < players.size(); ++i) u.push_back(player_utility(p, players, i));
    return u;
  };

  DynamicsResult result;
  LayerProfile current = initial;
  result.trajectory.push_back(current);
  result.utilities.push_back(utilities_of(current));
  result.updated_player.push_back(-1);

  for (int round = 1; round <= max_rounds; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < players.size(); ++i) {
      Graph response = exhaustive_best_response(reference_graph(current, i), players[i].schedule, single).graph;
      if (response != current.layers[i]) {
        changed = true;
        current.layers[i] = std::move(response);
      }
      result.trajectory.push_back(current);
      result.utilities.push_back(utilities_of(current));
      result.updated_player.push_back(static_cast<int>(i));
    }
    result.rounds = round;
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace netform
