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

#ifndef NETFORM_GAME_HPP
#define NETFORM_GAME_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "netform/best_response.hpp"
#include "netform/graph.hpp"
#include "netform/utility.hpp"

namespace netform {

struct Player {
  int id = 0;
  BenefitSchedule schedule;
  CostClass cost_class = CostClass::kMedium;
  // Populated for high-cost players; nullopt also when no t <= n qualifies.
  std::optional<int> k;

  Player(int id, BenefitSchedule schedule, int n);
};

// One layer per player on a common node set.
struct LayerProfile {
  int n = 0;
  std::vector<Graph> layers;

  LayerProfile(int n, std::vector<Graph> layers);
  static LayerProfile empty(int n, std::size_t players);

  friend bool operator==(const LayerProfile&, const LayerProfile&) = default;
};

// Complement of the union of every layer except `player`.
Graph reference_graph(const LayerProfile& profile, std::size_t player);

Rational player_utility(const LayerProfile& profile, const std::vector<Player>& players, std::size_t player);

struct CostClasses {
  std::vector<int> low;
  std::vector<int> medium;
  std::vector<int> high;
};

CostClasses classify_players(const std::vector<Player>& players);

// Nested partition of high-cost players by their k-index. Positions are
// 1-based ranks in `order`; block 0 also holds `always_empty`.
struct HighCostPartition {
  // Indices into the player list of players with k <= n, ascending by k then id.
  std::vector<int> order;
  // i_1 > i_2 > ... > i_r.
  std::vector<int> indices;
  // player_blocks[l] = H_l and node_blocks[l] = V_l for l = 0..r.
  std::vector<std::vector<int>> player_blocks;
  std::vector<std::vector<int>> node_blocks;
  // Players whose k-index exceeds n; the empty network is always their answer.
  std::vector<int> always_empty;
};

// Partition over the nodes first_node..first_node+n-1. Every player must be
// high-cost.
HighCostPartition high_cost_partition(const std::vector<Player>& players, int n, int first_node = 0);

// Player P_j in H_l gets the star centered on v_j over V_0..V_{l-1}; H_0
// players stay empty.
LayerProfile construct_high_cost_equilibrium(const std::vector<Player>& players, int n);

// Requires at least one low-cost player. High-cost players are empty, the
// j-th medium player gets the star at v_j over v_{j+1}..v_n, and the low-cost
// players split the remaining edges round-robin in edge order.
LayerProfile construct_low_cost_equilibrium(const std::vector<Player>& players, int n);

// No low-cost players and at most n medium ones. Medium player j (in id
// order) gets the star at v_j over v_{j+1}..v_n; high-cost players play the
// high-cost construction on the remaining nodes.
LayerProfile construct_mixed_equilibrium(const std::vector<Player>& players, int n);

enum class EquilibriumKind { kLowCost, kHighCost, kMixed };
std::string_view to_string(EquilibriumKind kind);

// Picks the construction that matches the player classes.
EquilibriumKind equilibrium_kind(const std::vector<Player>& players);
LayerProfile construct_equilibrium(const std::vector<Player>& players, int n);

enum class VerifyMode { kExhaustive, kStructural };
std::string_view to_string(VerifyMode mode);

enum class Verdict { kVerified, kFailed, kUnverifiable };
std::string_view to_string(Verdict verdict);

struct PlayerVerdict {
  Verdict verdict = Verdict::kUnverifiable;
  VerifyMode method = VerifyMode::kExhaustive;
  Rational achieved;
  std::optional<Rational> optimum;
  // A strictly better layer when the verdict is kFailed.
  std::optional<Graph> deviation;
  std::string certificate;
  std::string detail;
};

struct NashReport {
  std::vector<PlayerVerdict> players;
  // True iff every player is verified.
  bool overall = false;
  // False when some player could not be checked and none failed.
  bool conclusive = true;
};

NashReport verify_nash(const LayerProfile& profile, const std::vector<Player>& players, VerifyMode mode,
                       const SolverConfig& config = {});

struct DynamicsResult {
  // Initial profile followed by the profile after every single-player update.
  std::vector<LayerProfile> trajectory;
  std::vector<std::vector<Rational>> utilities;
  // Player updated to reach trajectory[t]; -1 for the initial profile.
  std::vector<int> updated_player;
  int rounds = 0;
  bool converged = false;
};

// Sequential best-response dynamics in ascending player order. A round in
// which no layer changes ends the run as converged.
DynamicsResult best_response_dynamics(const LayerProfile& initial, const std::vector<Player>& players,
                                      int max_rounds, const SolverConfig& config = {});

}  // namespace netform

#endif  // NETFORM_GAME_HPP
