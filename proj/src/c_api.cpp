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

#include "netform/netform.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "netform/errors.hpp"
#include "netform/io.hpp"
#include "report.hpp"

struct nf_graph {
  netform::Graph value;
};
struct nf_schedule {
  netform::BenefitSchedule value;
};
struct nf_config {
  netform::SolverConfig value;
};
struct nf_scenario {
  netform::Scenario value;
};

namespace {

using netform::detail::Json;

thread_local std::string last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* kind_name(nf_status status) {
  switch (status) {
    case NF_OK:
      return "ok";
    case NF_ERR_DOMAIN:
      return "domain";
    case NF_ERR_RESOURCE:
      return "resource";
    case NF_ERR_PARSE:
      return "parse";
    case NF_ERR_IO:
      return "io";
    case NF_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case NF_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void put_error(nf_status status, const std::string& message, char** out) {
  last_error = message;
  if (out) *out = dup_string(netform::detail::render(netform::detail::error_report(kind_name(status), message)));
}

// Runs `body`, translating exceptions into status codes and error documents.
template <typename Body>
nf_status guarded(char** out, Body&& body) {
  if (out) *out = nullptr;
  try {
    nf_status st = body();
    if (st == NF_OK) last_error.clear();
    return st;
  } catch (const netform::ParseError& e) {
    put_error(NF_ERR_PARSE, e.what(), out);
    return NF_ERR_PARSE;
  } catch (const netform::ResourceError& e) {
    put_error(NF_ERR_RESOURCE, e.what(), out);
    return NF_ERR_RESOURCE;
  } catch (const netform::IoError& e) {
    put_error(NF_ERR_IO, e.what(), out);
    return NF_ERR_IO;
  } catch (const netform::DomainError& e) {
    put_error(NF_ERR_DOMAIN, e.what(), out);
    return NF_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    put_error(NF_ERR_RESOURCE, "out of memory", out);
    return NF_ERR_RESOURCE;
  } catch (const std::exception& e) {
    put_error(NF_ERR_INTERNAL, e.what(), out);
    return NF_ERR_INTERNAL;
  }
}

nf_status invalid(const char* what, char** out) {
  put_error(NF_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what, out);
  return NF_ERR_INVALID_ARGUMENT;
}

nf_status emit(const Json& report, char** out) {
  *out = dup_string(netform::detail::render(report));
  return *out ? NF_OK : NF_ERR_RESOURCE;
}

template <typename Handle, typename Parse>
nf_status parse_into(const char* json, Handle** out, Parse&& parse) {
  if (!out) return invalid("out", nullptr);
  *out = nullptr;
  if (!json) return invalid("json", nullptr);
  return guarded(nullptr, [&] {
    *out = new Handle{parse(json)};
    return NF_OK;
  });
}

netform::SolverConfig config_or_default(const nf_config* config) {
  return config ? config->value : netform::SolverConfig{};
}

}  // namespace

extern "C" {

const char* nf_last_error(void) { return last_error.c_str(); }
const char* nf_status_name(nf_status status) { return kind_name(status); }
const char* nf_version(void) { return "0.1.0"; }

nf_status nf_graph_parse(const char* json, nf_graph** out) {
  return parse_into(json, out, [](const char* s) { return netform::parse_graph(s); });
}

nf_status nf_graph_to_json(const nf_graph* graph, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!graph) return invalid("graph", out);
  return guarded(out, [&] {
    *out = dup_string(netform::graph_to_json(graph->value));
    return NF_OK;
  });
}

int nf_graph_node_count(const nf_graph* graph) { return graph ? graph->value.node_count() : -1; }
size_t nf_graph_edge_count(const nf_graph* graph) { return graph ? graph->value.edge_count() : 0; }
void nf_graph_free(nf_graph* graph) { delete graph; }

nf_status nf_schedule_parse(const char* json, nf_schedule** out) {
  return parse_into(json, out, [](const char* s) { return netform::parse_schedule(s); });
}
void nf_schedule_free(nf_schedule* schedule) { delete schedule; }

nf_status nf_config_default(nf_config** out) {
  if (!out) return invalid("out", nullptr);
  return guarded(nullptr, [&] {
    *out = new nf_config{};
    return NF_OK;
  });
}

nf_status nf_config_parse(const char* json, nf_config** out) {
  return parse_into(json, out, [](const char* s) { return netform::parse_config(s); });
}

nf_status nf_config_set_workers(nf_config* config, int workers) {
  if (!config) return invalid("config", nullptr);
  if (workers < 1) {
    put_error(NF_ERR_DOMAIN, "workers must be at least 1", nullptr);
    return NF_ERR_DOMAIN;
  }
  config->value.workers = workers;
  return NF_OK;
}

nf_status nf_config_set_want_all(nf_config* config, int want_all) {
  if (!config) return invalid("config", nullptr);
  config->value.want_all = want_all != 0;
  return NF_OK;
}

void nf_config_free(nf_config* config) { delete config; }

nf_status nf_scenario_parse(const char* json, nf_scenario** out) {
  return parse_into(json, out, [](const char* s) { return netform::parse_scenario(s); });
}
void nf_scenario_free(nf_scenario* scenario) { delete scenario; }

nf_status nf_eval_utility(const nf_graph* graph, const nf_graph* reference_or_null, const nf_schedule* schedule,
                          char** out) {
  if (!out) return invalid("out", nullptr);
  if (!graph) return invalid("graph", out);
  if (!schedule) return invalid("schedule", out);
  return guarded(out, [&] {
    return emit(netform::detail::report_eval_utility(graph->value,
                                                     reference_or_null ? &reference_or_null->value : nullptr,
                                                     schedule->value),
                out);
  });
}

nf_status nf_solve_br(const nf_graph* reference, const nf_schedule* schedule, const nf_config* config,
                      const char* method, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!reference) return invalid("reference", out);
  if (!schedule) return invalid("schedule", out);
  return guarded(out, [&] {
    return emit(netform::detail::report_solve_br(reference->value, schedule->value, config_or_default(config),
                                                 method ? method : "exhaustive"),
                out);
  });
}

nf_status nf_brn_decide(const nf_graph* reference, const nf_schedule* schedule, const nf_config* config,
                        const char* threshold, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!reference) return invalid("reference", out);
  if (!schedule) return invalid("schedule", out);
  if (!threshold) return invalid("threshold", out);
  return guarded(out, [&] {
    return emit(netform::detail::report_brn_decide(reference->value, schedule->value, config_or_default(config),
                                                   netform::parse_rational(threshold)),
                out);
  });
}

nf_status nf_reduce_tts(const nf_graph* graph, const nf_config* config, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!graph) return invalid("graph", out);
  return guarded(out, [&] {
    return emit(netform::detail::report_reduce_tts(graph->value, config_or_default(config)), out);
  });
}

nf_status nf_construct_eq(const nf_scenario* scenario, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!scenario) return invalid("scenario", out);
  return guarded(out, [&] { return emit(netform::detail::report_construct_eq(scenario->value), out); });
}

nf_status nf_verify_nash(const nf_scenario* scenario, nf_verify_mode mode, const nf_config* config, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!scenario) return invalid("scenario", out);
  return guarded(out, [&] {
    auto m = mode == NF_VERIFY_STRUCTURAL ? netform::VerifyMode::kStructural : netform::VerifyMode::kExhaustive;
    return emit(netform::detail::report_verify_nash(scenario->value, m, config_or_default(config)), out);
  });
}

nf_status nf_run_dynamics(const nf_scenario* scenario, int max_rounds, const nf_config* config, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!scenario) return invalid("scenario", out);
  return guarded(out, [&] {
    return emit(netform::detail::report_run_dynamics(scenario->value, max_rounds, config_or_default(config)), out);
  });
}

nf_status nf_greedy(const nf_graph* reference, const nf_graph* start_or_null, const nf_schedule* schedule,
                    char** out) {
  if (!out) return invalid("out", nullptr);
  if (!reference) return invalid("reference", out);
  if (!schedule) return invalid("schedule", out);
  return guarded(out, [&] {
    return emit(netform::detail::report_greedy(reference->value, start_or_null ? &start_or_null->value : nullptr,
                                               schedule->value),
                out);
  });
}

nf_status nf_emit_examples(const char* out_dir, char** out) {
  if (!out) return invalid("out", nullptr);
  if (!out_dir) return invalid("out_dir", out);
  return guarded(out, [&] { return emit(netform::detail::emit_example_suite(out_dir), out); });
}

nf_status nf_error_report(nf_status status, const char* message, char** out) {
  if (!out) return invalid("out", nullptr);
  *out = dup_string(netform::detail::render(
      netform::detail::error_report(kind_name(status), message ? message : "")));
  return NF_OK;
}

void nf_string_free(char* s) { std::free(s); }

}  // extern "C"
