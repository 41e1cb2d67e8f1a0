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

// netform command-line front end. Every verb prints one JSON report on
// standard output. Exit status: 0 ok, 1 domain or output error, 2 resource
// cap, 3 parse or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netform/netform.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitResource = 2;
constexpr int kExitParse = 3;

int exit_code(nf_status st) {
  switch (st) {
    case NF_OK:
      return kExitOk;
    case NF_ERR_RESOURCE:
      return kExitResource;
    case NF_ERR_PARSE:
      return kExitParse;
    case NF_ERR_DOMAIN:
    case NF_ERR_IO:
    case NF_ERR_INVALID_ARGUMENT:
    case NF_ERR_INTERNAL:
      return kExitDomain;
  }
  return kExitDomain;
}

// Prints the report (or error document) left in *slot and maps the status.
int finish(nf_status st, char** slot) {
  char* text = *slot;
  if (text) {
    std::fputs(text, stdout);
    nf_string_free(text);
  }
  if (st != NF_OK) std::cerr << "netform: " << nf_status_name(st) << ": " << nf_last_error() << "\n";
  return exit_code(st);
}

int fail(nf_status st, const std::string& message) {
  char* text = nullptr;
  nf_error_report(st, message.c_str(), &text);
  if (text) {
    std::fputs(text, stdout);
    nf_string_free(text);
  }
  std::cerr << "netform: " << message << "\n";
  return st == NF_ERR_PARSE ? kExitParse : exit_code(st);
}

struct InputError {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Owning wrappers so early returns release handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using GraphH = Handle<nf_graph, nf_graph_free>;
using ScheduleH = Handle<nf_schedule, nf_schedule_free>;
using ConfigH = Handle<nf_config, nf_config_free>;
using ScenarioH = Handle<nf_scenario, nf_scenario_free>;

struct Options {
  std::string graph;
  std::string reference;
  std::string start;
  std::string schedule;
  std::string scenario;
  std::string config;
  std::string mode = "exhaustive";
  std::string method = "exhaustive";
  std::string threshold;
  std::string out;
  int rounds = 50;
};

nf_status load_graph(const std::string& path, GraphH& h) { return nf_graph_parse(slurp(path).c_str(), &h.p); }
nf_status load_schedule(const std::string& path, ScheduleH& h) {
  return nf_schedule_parse(slurp(path).c_str(), &h.p);
}
nf_status load_scenario(const std::string& path, ScenarioH& h) {
  return nf_scenario_parse(slurp(path).c_str(), &h.p);
}

nf_status load_config(const Options& o, ConfigH& h) {
  nf_status st = o.config.empty() ? nf_config_default(&h.p) : nf_config_parse(slurp(o.config).c_str(), &h.p);
  if (st != NF_OK) return st;
  if (const char* env = std::getenv("NETFORM_WORKERS"); env && *env) {
    char* end = nullptr;
    long w = std::strtol(env, &end, 10);
    if (*end != '\0' || w < 1 || w > 4096) throw InputError{"NETFORM_WORKERS must be a positive integer"};
    st = nf_config_set_workers(h.p, static_cast<int>(w));
  }
  return st;
}

#define NF_TRY(expr)                                   \
  do {                                                 \
    nf_status st_ = (expr);                            \
    if (st_ != NF_OK) return fail(st_, nf_last_error()); \
  } while (0)

int run(const std::string& verb, const Options& o) {
  char* text = nullptr;
  if (verb == "emit-examples") return finish(nf_emit_examples(o.out.c_str(), &text), &text);

  ConfigH config;
  NF_TRY(load_config(o, config));

  if (verb == "construct-eq" || verb == "verify-nash" || verb == "run-dynamics") {
    ScenarioH scenario;
    NF_TRY(load_scenario(o.scenario, scenario));
    if (verb == "construct-eq") return finish(nf_construct_eq(scenario.p, &text), &text);
    if (verb == "verify-nash") {
      nf_verify_mode mode = o.mode == "structural" ? NF_VERIFY_STRUCTURAL : NF_VERIFY_EXHAUSTIVE;
      return finish(nf_verify_nash(scenario.p, mode, config.p, &text), &text);
    }
    return finish(nf_run_dynamics(scenario.p, o.rounds, config.p, &text), &text);
  }

  GraphH graph;
  NF_TRY(load_graph(o.graph, graph));
  if (verb == "reduce-tts") return finish(nf_reduce_tts(graph.p, config.p, &text), &text);

  ScheduleH schedule;
  NF_TRY(load_schedule(o.schedule, schedule));
  if (verb == "eval-utility") {
    GraphH reference;
    if (!o.reference.empty()) NF_TRY(load_graph(o.reference, reference));
    return finish(nf_eval_utility(graph.p, reference.p, schedule.p, &text), &text);
  }
  if (verb == "solve-br") return finish(nf_solve_br(graph.p, schedule.p, config.p, o.method.c_str(), &text), &text);
  if (verb == "brn-decide") {
    return finish(nf_brn_decide(graph.p, schedule.p, config.p, o.threshold.c_str(), &text), &text);
  }
  if (verb == "greedy") {
    GraphH start;
    if (!o.start.empty()) NF_TRY(load_graph(o.start, start));
    return finish(nf_greedy(graph.p, start.p, schedule.p, &text), &text);
  }
  return fail(NF_ERR_PARSE, "unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netform: best responses and equilibria in multi-layer network formation games"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "solver config JSON")->check(CLI::ExistingFile);
  };
  auto add_graph = [&](CLI::App* sub, const char* help) {
    sub->add_option("--graph", o.graph, help)->required()->check(CLI::ExistingFile);
  };
  auto add_schedule = [&](CLI::App* sub) {
    sub->add_option("--schedule", o.schedule, "benefit schedule JSON")->required()->check(CLI::ExistingFile);
  };
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", o.scenario, "game scenario JSON")->required()->check(CLI::ExistingFile);
  };

  auto* eval = app.add_subcommand("eval-utility", "utility of a graph against a reference (complete by default)");
  add_graph(eval, "graph to score");
  eval->add_option("--reference", o.reference, "reference graph JSON")->check(CLI::ExistingFile);
  add_schedule(eval);
  add_config(eval);

  auto* solve = app.add_subcommand("solve-br", "best response to a reference graph");
  add_graph(solve, "reference graph");
  add_schedule(solve);
  add_config(solve);
  solve->add_option("--method", o.method, "solver")
      ->check(CLI::IsMember({"exhaustive", "closed-form", "certified", "peel", "decompose"}));

  auto* brn = app.add_subcommand("brn-decide", "does some graph reach utility >= threshold");
  add_graph(brn, "reference graph");
  add_schedule(brn);
  add_config(brn);
  brn->add_option("--threshold", o.threshold, "positive threshold, e.g. 0.64 or 27/40")->required();

  auto* tts = app.add_subcommand("reduce-tts", "build the tree 4-spanner instance and check both answers");
  add_graph(tts, "connected graph");
  add_config(tts);

  auto* construct = app.add_subcommand("construct-eq", "construct a pure Nash equilibrium");
  add_scenario(construct);
  add_config(construct);

  auto* verify = app.add_subcommand("verify-nash", "check every player plays a best response");
  add_scenario(verify);
  add_config(verify);
  verify->add_option("--mode", o.mode, "verification method")->check(CLI::IsMember({"exhaustive", "structural"}));

  auto* dyn = app.add_subcommand("run-dynamics", "sequential best-response dynamics");
  add_scenario(dyn);
  add_config(dyn);
  dyn->add_option("--rounds", o.rounds, "maximum rounds")->check(CLI::NonNegativeNumber);

  auto* greedy = app.add_subcommand("greedy", "single-edge hill climbing");
  add_graph(greedy, "reference graph");
  add_schedule(greedy);
  greedy->add_option("--start", o.start, "starting graph (defaults to the reference)")->check(CLI::ExistingFile);

  auto* examples = app.add_subcommand("emit-examples", "write the example instances and a manifest");
  examples->add_option("--out", o.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const InputError& e) {
    return fail(NF_ERR_PARSE, e.message);
  }
}
