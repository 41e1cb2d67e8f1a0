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

#ifndef NETFORM_NETFORM_H
#define NETFORM_NETFORM_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(NETFORM_BUILDING)
#define NF_API __declspec(dllexport)
#else
#define NF_API __declspec(dllimport)
#endif
#else
#define NF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nf_status {
  NF_OK = 0,
  NF_ERR_DOMAIN = 1,
  NF_ERR_RESOURCE = 2,
  NF_ERR_PARSE = 3,
  NF_ERR_IO = 4,
  NF_ERR_INVALID_ARGUMENT = 5,
  NF_ERR_INTERNAL = 6
} nf_status;

typedef struct nf_graph nf_graph;
typedef struct nf_schedule nf_schedule;
typedef struct nf_config nf_config;
typedef struct nf_scenario nf_scenario;

typedef enum nf_verify_mode { NF_VERIFY_EXHAUSTIVE = 0, NF_VERIFY_STRUCTURAL = 1 } nf_verify_mode;

/* Message of the last failure on the calling thread; empty after success. */
NF_API const char* nf_last_error(void);
NF_API const char* nf_status_name(nf_status status);
NF_API const char* nf_version(void);

/* Parsers take JSON text. */
NF_API nf_status nf_graph_parse(const char* json, nf_graph** out);
NF_API nf_status nf_graph_to_json(const nf_graph* graph, char** out);
NF_API int nf_graph_node_count(const nf_graph* graph);
NF_API size_t nf_graph_edge_count(const nf_graph* graph);
NF_API void nf_graph_free(nf_graph* graph);

NF_API nf_status nf_schedule_parse(const char* json, nf_schedule** out);
NF_API void nf_schedule_free(nf_schedule* schedule);

NF_API nf_status nf_config_default(nf_config** out);
NF_API nf_status nf_config_parse(const char* json, nf_config** out);
NF_API nf_status nf_config_set_workers(nf_config* config, int workers);
NF_API nf_status nf_config_set_want_all(nf_config* config, int want_all);
NF_API void nf_config_free(nf_config* config);

NF_API nf_status nf_scenario_parse(const char* json, nf_scenario** out);
NF_API void nf_scenario_free(nf_scenario* scenario);

/* Report functions write a JSON document to *out on success and an
   {"error": {...}} document on failure. Release it with nf_string_free. */
NF_API nf_status nf_eval_utility(const nf_graph* graph, const nf_graph* reference_or_null,
                                 const nf_schedule* schedule, char** out);
/* method: "exhaustive", "closed-form", "certified", "peel" or "decompose". */
NF_API nf_status nf_solve_br(const nf_graph* reference, const nf_schedule* schedule, const nf_config* config,
                             const char* method, char** out);
NF_API nf_status nf_brn_decide(const nf_graph* reference, const nf_schedule* schedule, const nf_config* config,
                               const char* threshold, char** out);
NF_API nf_status nf_reduce_tts(const nf_graph* graph, const nf_config* config, char** out);
NF_API nf_status nf_construct_eq(const nf_scenario* scenario, char** out);
NF_API nf_status nf_verify_nash(const nf_scenario* scenario, nf_verify_mode mode, const nf_config* config,
                                char** out);
NF_API nf_status nf_run_dynamics(const nf_scenario* scenario, int max_rounds, const nf_config* config, char** out);
NF_API nf_status nf_greedy(const nf_graph* reference, const nf_graph* start_or_null, const nf_schedule* schedule,
                           char** out);
NF_API nf_status nf_emit_examples(const char* out_dir, char** out);

/* Canonical error document for failures that happen outside the library. */
NF_API nf_status nf_error_report(nf_status status, const char* message, char** out);

NF_API void nf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif  /* NETFORM_NETFORM_H */
