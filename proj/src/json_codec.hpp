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

#ifndef NETFORM_JSON_CODEC_HPP
#define NETFORM_JSON_CODEC_HPP

#include <json.hpp>

#include "netform/best_response.hpp"
#include "netform/graph.hpp"
#include "netform/io.hpp"
#include "netform/utility.hpp"

namespace netform::detail {

using Json = nlohmann::json;

Json parse_document(std::string_view text);
Rational rational_from_json(const Json& j, const char* what);

Graph graph_from_json(const Json& j);
BenefitSchedule schedule_from_json(const Json& j);
SolverConfig config_from_json(const Json& j);
Scenario scenario_from_json(const Json& j);

Json to_json(const Graph& g);
Json to_json(const BenefitSchedule& s);
Json to_json(const SolverConfig& c);
Json to_json(const Rational& r);

}  // namespace netform::detail

#endif  // NETFORM_JSON_CODEC_HPP
