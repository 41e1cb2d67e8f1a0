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

#include "report.hpp"

#include <filesystem>
#include <fstream>

#include "netform/errors.hpp"
#include "netform/reduction.hpp"

namespace netform::detail {
namespace {

Json graphs_json(const std::vector<Graph>& graphs) {
  Json out = Json::array();
  for (const Graph& g : graphs) out.push_back(to_json(g));
  return out;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(format_rational(v));
  return out;
}

std::vector<Player> players_of(const Scenario& scenario) {
  std::vector<Player> players;
  for (std::size_t i = 0; i < scenario.schedules.size(); ++i) {
    players.emplace_back(static_cast<int>(i), scenario.schedules[i], scenario.n);
  }
  return players;
}

Json players_json(const std::vector<Player>& players) {
  Json out = Json::array();
  for (const Player& p : players) {
    out.push_back({{"id", p.id},
                   {"cost_class", std::string(to_string(p.cost_class))},
                   {"k", p.k ? Json(*p.k) : Json(nullptr)},
                   {"schedule", to_json(p.schedule)}});
  }
  return out;
}

// Partition of the high-cost players as placed by the matching constructor,
// with blocks expressed in player ids.
Json partition_json(const std::vector<Player>& players, int n) {
  CostClasses classes = classify_players(players);
  if (classes.high.empty() || !classes.low.empty()) return nullptr;
  std::vector<Player> high;
  for (int i : classes.high) high.push_back(players[static_cast<std::size_t>(i)]);
  const int mu = static_cast<int>(classes.medium.size());
  HighCostPartition part = high_cost_partition(high, n - mu, mu);
  auto ids = [&](const std::vector<int>& local) {
    Json out = Json::array();
    for (int i : local) out.push_back(high[static_cast<std::size_t>(i)].id);
    return out;
  };
  Json player_blocks = Json::array();
  for (const auto& block : part.player_blocks) player_blocks.push_back(ids(block));
  return {{"order", ids(part.order)},
          {"indices", part.indices},
          {"player_blocks", player_blocks},
          {"node_blocks", part.node_blocks},
          {"always_empty", ids(part.always_empty)}};
}

Json profile_utilities(const LayerProfile& profile, const std::vector<Player>& players) {
  std::vector<Rational> u;
  for (std::size_t i = 0; i < players.size(); ++i) u.push_back(player_utility(profile, players, i));
  return rationals_json(u);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("error writing " + path.string());
}

Json schedule_of(const std::vector<std::string>& values, const std::string& cost) {
  std::vector<Rational> b;
  for (const std::string& v : values) b.push_back(parse_rational(v));
  return to_json(BenefitSchedule(std::move(b), parse_rational(cost)));
}

std::vector<std::string> padded(std::vector<std::string> head, std::size_t length) {
  head.resize(length, "0");
  return head;
}

// Reference of the greedy-gap family: nodes 0 and 1 adjacent, every other
// node adjacent to both.
Graph two_hub_graph(int n) {
  std::vector<Edge> edges{{0, 1}};
  for (int v = 2; v < n; ++v) {
    edges.push_back({0, v});
    edges.push_back({1, v});
  }
  return Graph(n, edges);
}

}  // namespace

Json error_report(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

Json report_eval_utility(const Graph& g, const Graph* reference, const BenefitSchedule& s) {
  const Graph ref = reference ? *reference : Graph::complete(g.node_count());
  if (ref.node_count() != g.node_count()) throw DomainError("graph and reference differ in node count");
  s.require_covers(g.node_count());
  return {{"verb", "eval-utility"},
          {"graph", to_json(g)},
          {"reference", to_json(ref)},
          {"reference_is_complete", reference == nullptr},
          {"schedule", to_json(s)},
          {"cost_class", std::string(to_string(classify_cost(s)))},
          {"edge_count", g.edge_count()},
          {"utility", format_rational(conditional_utility(g, ref, s))}};
}

Json report_solve_br(const Graph& reference, const BenefitSchedule& s, const SolverConfig& config,
                     const std::string& method) {
  std::optional<BrResult> result;
  if (method == "exhaustive") {
    result = exhaustive_best_response(reference, s, config);
  } else if (method == "closed-form") {
    result = closed_form_best_response(reference, s);
    if (!result) throw DomainError("no closed-form rule applies to this reference");
  } else if (method == "certified") {
    result = certified_best_response(reference, s);
    if (!result) throw DomainError("reference shape has no certified best response");
  } else if (method == "peel") {
    result = peel_and_solve(reference, s, InnerSolver::kClosedForm, config);
  } else if (method == "decompose") {
    result = decompose_and_solve(reference, s, InnerSolver::kClosedForm, config);
  } else {
    throw DomainError("unknown method \"" + method + "\"");
  }
  Json report = {{"verb", "solve-br"},
                 {"method", method},
                 {"reference", to_json(reference)},
                 {"schedule", to_json(s)},
                 {"cost_class", std::string(to_string(classify_cost(s)))},
                 {"config", to_json(config)},
                 {"graph", to_json(result->graph)},
                 {"utility", format_rational(result->utility)},
                 {"certificate", std::string(to_string(result->certificate.kind))},
                 {"rule", result->certificate.rule},
                 {"notes", result->certificate.notes}};
  if (result->all_optima) {
    report["all_optima"] = graphs_json(*result->all_optima);
    report["optima_count"] = result->all_optima->size();
  }
  return report;
}

Json report_brn_decide(const Graph& reference, const BenefitSchedule& s, const SolverConfig& config,
                       const Rational& threshold) {
  BrnInstance inst(reference, s, threshold);
  Json report = {{"verb", "brn-decide"},
                 {"reference", to_json(reference)},
                 {"schedule", to_json(s)},
                 {"threshold", format_rational(threshold)},
                 {"config", to_json(config)}};
  const CostClass cls = classify_cost(s);
  if (cls == CostClass::kMedium && reference.is_connected() && reference.node_count() >= 2) {
    UtilityBounds bounds = br_utility_bounds(reference, s);
    report["bounds"] = {{"lower", format_rational(bounds.lower)}, {"upper", format_rational(bounds.upper)}};
    if (threshold > bounds.upper) {
      report["answer"] = false;
      report["certificate"] = "BOUND";
      report["witness"] = nullptr;
      return report;
    }
  }
  SolverConfig single = config;
  single.want_all = false;
  BrResult best = exhaustive_best_response(reference, s, single);
  const bool answer = best.utility >= threshold;
  report["answer"] = answer;
  report["certificate"] = std::string(to_string(best.certificate.kind));
  report["optimum"] = format_rational(best.utility);
  report["witness"] = answer ? to_json(best.graph) : Json(nullptr);
  return report;
}

Json report_reduce_tts(const Graph& g, const SolverConfig& config) {
  TtsInstance inst(g, 4);
  BrnInstance brn = brn_instance_from_tts(inst);
  ReductionReport r = verify_reduction(inst, config);
  return {{"verb", "reduce-tts"},
          {"graph", to_json(g)},
          {"t", 4},
          {"config", to_json(config)},
          {"brn_schedule", to_json(brn.schedule)},
          {"threshold", format_rational(r.threshold)},
          {"optimum", format_rational(r.optimum)},
          {"tts", r.tts},
          {"brn", r.brn},
          {"agree", r.agree},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"witness_is_tree_spanner", r.witness_is_tree_spanner},
          {"certificate", "EXHAUSTIVE"}};
}

Json report_construct_eq(const Scenario& scenario) {
  std::vector<Player> players = players_of(scenario);
  LayerProfile profile = construct_equilibrium(players, scenario.n);
  return {{"verb", "construct-eq"},
          {"n", scenario.n},
          {"kind", std::string(to_string(equilibrium_kind(players)))},
          {"players", players_json(players)},
          {"partition", partition_json(players, scenario.n)},
          {"layers", graphs_json(profile.layers)},
          {"utilities", profile_utilities(profile, players)},
          {"certificate", "CONSTRUCTION"}};
}

Json report_verify_nash(const Scenario& scenario, VerifyMode mode, const SolverConfig& config) {
  std::vector<Player> players = players_of(scenario);
  const bool given = scenario.initial_layers.has_value();
  LayerProfile profile = given ? LayerProfile(scenario.n, *scenario.initial_layers)
                               : construct_equilibrium(players, scenario.n);
  NashReport nash = verify_nash(profile, players, mode, config);
  Json verdicts = Json::array();
  for (std::size_t i = 0; i < nash.players.size(); ++i) {
    const PlayerVerdict& v = nash.players[i];
    verdicts.push_back({{"id", static_cast<int>(i)},
                        {"verdict", std::string(to_string(v.verdict))},
                        {"verified", v.verdict == Verdict::kVerified},
                        {"method", std::string(to_string(v.method))},
                        {"achieved", format_rational(v.achieved)},
                        {"optimum", v.optimum ? Json(format_rational(*v.optimum)) : Json(nullptr)},
                        {"deviation", v.deviation ? to_json(*v.deviation) : Json(nullptr)},
                        {"certificate", v.certificate},
                        {"detail", v.detail}});
  }
  return {{"verb", "verify-nash"},
          {"n", scenario.n},
          {"mode", std::string(to_string(mode))},
          {"config", to_json(config)},
          {"profile_source", given ? "scenario" : "constructed"},
          {"layers", graphs_json(profile.layers)},
          {"players", verdicts},
          {"overall", nash.overall},
          {"conclusive", nash.conclusive}};
}

Json report_run_dynamics(const Scenario& scenario, int max_rounds, const SolverConfig& config) {
  std::vector<Player> players = players_of(scenario);
  LayerProfile initial = scenario.initial_layers ? LayerProfile(scenario.n, *scenario.initial_layers)
                                                 : LayerProfile::empty(scenario.n, players.size());
  DynamicsResult run = best_response_dynamics(initial, players, max_rounds, config);
  Json steps = Json::array();
  for (std::size_t t = 0; t < run.trajectory.size(); ++t) {
    steps.push_back({{"player", run.updated_player[t] < 0 ? Json(nullptr) : Json(run.updated_player[t])},
                     {"layers", graphs_json(run.trajectory[t].layers)},
                     {"utilities", rationals_json(run.utilities[t])}});
  }
  return {{"verb", "run-dynamics"},
          {"n", scenario.n},
          {"max_rounds", max_rounds},
          {"config", to_json(config)},
          {"rounds", run.rounds},
          {"converged", run.converged},
          {"steps", steps},
          {"final_layers", graphs_json(run.trajectory.back().layers)},
          {"certificate", "EXHAUSTIVE"}};
}

Json report_greedy(const Graph& reference, const Graph* start, const BenefitSchedule& s) {
  const Graph from = start ? *start : reference;
  if (from.node_count() != reference.node_count()) throw DomainError("start and reference differ in node count");
  s.require_covers(reference.node_count());
  GreedyOutcome out = greedy_local_search(from, reference, s);
  Json trace = Json::array();
  for (const GreedyMove& m : out.trace) {
    trace.push_back({{"edge", {m.edge.u, m.edge.v}},
                     {"action", m.added ? "add" : "remove"},
                     {"utility", format_rational(m.utility)}});
  }
  return {{"verb", "greedy"},
          {"reference", to_json(reference)},
          {"start", to_json(from)},
          {"schedule", to_json(s)},
          {"graph", to_json(out.graph)},
          {"utility", format_rational(out.utility)},
          {"start_utility", format_rational(conditional_utility(from, reference, s))},
          {"trace", trace},
          {"certificate", "HEURISTIC"}};
}

Json emit_example_suite(const std::string& out_dir) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("output directory does not exist: " + out_dir);

  Json files = Json::object();
  Json manifest = Json::array();

  files["ring6.json"] = {{"graph", to_json(Graph::cycle(6))},
                         {"schedule", schedule_of({"1.01", "0.85", "0.8", "0.2", "0.1"}, "1")}};
  manifest.push_back({{"file", "ring6.json"},
                      {"command", "solve-br --graph ring6.json --schedule ring6.json"},
                      {"description", "best response to a 6-node ring; the optimum is not a subgraph"},
                      {"expected", {{"optimum_utility", "0.64"}, {"star_utility", "0.42"}}}});

  {
    const int n = 10;
    const Rational b1(n - 1, n - 2);
    const Rational b2(1, 2);
    const Rational c(1);
    std::vector<std::string> values = padded({format_rational(b1), "0.5"}, static_cast<std::size_t>(n - 1));
    files["greedy-gap-n10.json"] = {{"graph", to_json(two_hub_graph(n))}, {"schedule", schedule_of(values, "1")}};
    Rational greedy = 2 * (n - 2) * (b1 - c) + b2;
    Rational star = (n - 1) * (b1 - c) + (n - 2) * b2;
    manifest.push_back({{"file", "greedy-gap-n10.json"},
                        {"command", "greedy --graph greedy-gap-n10.json --schedule greedy-gap-n10.json"},
                        {"description", "edge-toggle hill climbing from the reference stalls far below the star"},
                        {"expected",
                         {{"greedy_utility", format_rational(greedy)},
                          {"star_utility", format_rational(star)},
                          {"ratio", format_rational(star / greedy)}}}});
  }

  const std::vector<std::string> high_b = padded({"2", "1", "0.5"}, 12);
  auto high_players = [&] {
    Json players = Json::array();
    for (const char* c : {"2.25", "2.25", "2.25", "2.25", "2.25", "2.75", "3.25", "3.25", "3.25"}) {
      players.push_back(schedule_of(high_b, c));
    }
    return players;
  };

  files["high-cost-11.json"] = {{"n", 11}, {"players", high_players()}};
  manifest.push_back({{"file", "high-cost-11.json"},
                      {"command", "verify-nash --scenario high-cost-11.json --mode structural"},
                      {"description", "nine high-cost players with k = 3,3,3,3,3,4,5,5,5 on 11 nodes"},
                      {"expected", {{"partition_indices", {7, 5, 3, 1}}, {"empty_players", {7, 8}}}}});

  {
    Json players = Json::array();
    players.push_back(schedule_of(high_b, "1.5"));
    players.push_back(schedule_of(high_b, "1.5"));
    for (const Json& p : high_players()) players.push_back(p);
    files["mixed-13.json"] = {{"n", 13}, {"players", players}};
  }
  manifest.push_back({{"file", "mixed-13.json"},
                      {"command", "verify-nash --scenario mixed-13.json --mode structural"},
                      {"description", "two medium-cost players ahead of the nine high-cost players on 13 nodes"},
                      {"expected", {{"partition_indices", {7, 5, 3, 1}}, {"isolated_in_high_layers", {0, 1}}}}});

  files["manifest.json"] = {{"examples", manifest}};

  Json written = Json::array();
  for (auto it = files.begin(); it != files.end(); ++it) {
    write_file(dir / it.key(), render(it.value()));
    written.push_back(it.key());
  }
  return {{"verb", "emit-examples"}, {"out_dir", out_dir}, {"files", written}};
}

}  // namespace netform::detail
