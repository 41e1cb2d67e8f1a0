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

#ifndef NETFORM_REPORT_HPP
#define NETFORM_REPORT_HPP

#include <string>

#include "json_codec.hpp"
#include "netform/game.hpp"

namespace netform::detail {

Json report_eval_utility(const Graph& g, const Graph* reference, const BenefitSchedule& s);
// method: exhaustive | closed-form | peel | decompose | certified
Json report_solve_br(const Graph& reference, const BenefitSchedule& s, const SolverConfig& config,
                     const std::string& method);
Json report_brn_decide(const Graph& reference, const BenefitSchedule& s, const SolverConfig& config,
                       const Rational& threshold);
Json report_reduce_tts(const Graph& g, const SolverConfig& config);
Json report_construct_eq(const Scenario& scenario);
Json report_verify_nash(const Scenario& scenario, VerifyMode mode, const SolverConfig& config);
Json report_run_dynamics(const Scenario& scenario, int max_rounds, const SolverConfig& config);
Json report_greedy(const Graph& reference, const Graph* start, const BenefitSchedule& s);
Json emit_example_suite(const std::string& out_dir);

Json error_report(const std::string& kind, const std::string& message);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string render(const Json& report);

}  // namespace netform::detail

#endif  // NETFORM_REPORT_HPP
