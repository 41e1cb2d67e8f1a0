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

#ifndef NETFORM_IO_HPP
#define NETFORM_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netform/best_response.hpp"
#include "netform/graph.hpp"
#include "netform/utility.hpp"

namespace netform {

// Text formats, all JSON:
//   graph     {"n": 6, "edges": [[0, 1], [1, 2]]}
//   schedule  {"values": ["1.01", 0.85], "cost": 1}
//   config    {"max_n": 7, "max_candidates": 16777216, "workers": 1, "want_all": false}
//   scenario  {"n": 4, "players": [schedule, ...], "initial_layers": [graph, ...]}
// Numbers may be JSON numbers or strings ("27/40", "1.01"). A document that
// wraps the object under a "graph", "schedule", "config" or "scenario" key is
// accepted too, so one bundle file can feed several flags. Malformed input
// throws ParseError.

struct Scenario {
  int n = 0;
  std::vector<BenefitSchedule> schedules;
  std::optional<std::vector<Graph>> initial_layers;
};

Graph parse_graph(std::string_view text);
BenefitSchedule parse_schedule(std::string_view text);
SolverConfig parse_config(std::string_view text);
Scenario parse_scenario(std::string_view text);

std::string graph_to_json(const Graph& g);
std::string schedule_to_json(const BenefitSchedule& s);

// Reads a whole file; throws IoError.
std::string read_text_file(const std::string& path);

}  // namespace netform

#endif  // NETFORM_IO_HPP
