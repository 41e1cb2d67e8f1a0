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

#include <gtest/gtest.h>

#include "netform/errors.hpp"
#include "netform/io.hpp"
#include "oracles.hpp"

namespace netform {
namespace {

TEST(GraphFormat, ParsesAndRoundTrips) {
  Graph g = parse_graph(R"({"n": 4, "edges": [[0, 1], [1, 3], [0, 2]]})");
  EXPECT_EQ(g, Graph(4, {{0, 1}, {1, 3}, {0, 2}}));
  EXPECT_EQ(parse_graph(graph_to_json(g)), g);
  EXPECT_EQ(parse_graph(R"({"graph": {"n": 2, "edges": [[0, 1]]}, "other": 1})"), Graph::complete(2));
  EXPECT_EQ(parse_graph(R"({"n": 0, "edges": []})"), Graph(0));
}

TEST(GraphFormat, RejectsMalformed) {
  for (const char* bad : {
           R"({"n": 3, "edges": [[1, 0]]})",
           R"({"n": 3, "edges": [[0, 1], [0, 1]]})",
           R"({"n": 3, "edges": [[1, 1]]})",
           R"({"n": 3, "edges": [[0, 3]]})",
           R"({"n": 3, "edges": [[-1, 2]]})",
           R"({"n": 65, "edges": []})",
           R"({"edges": []})",
           R"({"n": 3})",
           R"({"n": 3, "edges": [[0, 1, 2]]})",
           R"({"n": 3, "edges": {}})",
           R"({"n": "3", "edges": []})",
           R"([1, 2])",
           R"({"n": 3, "edges": [[0, 1]])",
       }) {
    EXPECT_THROW(parse_graph(bad), ParseError) << bad;
  }
}

TEST(ScheduleFormat, ExactNumbers) {
  BenefitSchedule s = parse_schedule(R"({"values": ["1.01", 0.85, "4/5", 0.2, 1e-1], "cost": 1})");
  EXPECT_EQ(s.values(), testing::rationals({"1.01", "0.85", "0.8", "0.2", "0.1"}));
  EXPECT_EQ(s.cost(), Rational(1));
  EXPECT_EQ(parse_schedule(schedule_to_json(s)), s);
  EXPECT_EQ(parse_schedule(R"({"schedule": {"values": [3], "cost": "27/40"}})").cost(), Rational(27, 40));
}

TEST(ScheduleFormat, RejectsMalformed) {
  for (const char* bad : {
           R"({"values": [1, 2], "cost": 1})",
           R"({"values": [1], "cost": 0})",
           R"({"values": [1, -1], "cost": 1})",
           R"({"values": ["x"], "cost": 1})",
           R"({"values": [1]})",
           R"({"cost": 1})",
           R"({"values": [true], "cost": 1})",
       }) {
    EXPECT_THROW(parse_schedule(bad), ParseError) << bad;
  }
}

TEST(ConfigFormat, Fields) {
  SolverConfig c = parse_config(R"({"max_n": 8, "max_candidates": 1000, "workers": 3, "want_all": true})");
  EXPECT_EQ(c.max_n, 8);
  EXPECT_EQ(c.max_candidates, 1000u);
  EXPECT_EQ(c.workers, 3);
  EXPECT_TRUE(c.want_all);
  EXPECT_EQ(parse_config("{}"), SolverConfig{});
  EXPECT_THROW(parse_config(R"({"workers": 0})"), ParseError);
  EXPECT_THROW(parse_config(R"({"max_n": 1.5})"), ParseError);
  EXPECT_THROW(parse_config(R"({"want_all": 1})"), ParseError);
  EXPECT_THROW(parse_config(R"({"speed": 1})"), ParseError);
}

TEST(ScenarioFormat, Fields) {
  Scenario s = parse_scenario(R"({"n": 3, "players": [{"values": [1, 0.5], "cost": 0.25},
                                   {"values": [2, 1], "cost": 3}],
                                   "initial_layers": [{"n": 3, "edges": [[0, 1]]}, {"n": 3, "edges": []}]})");
  EXPECT_EQ(s.n, 3);
  ASSERT_EQ(s.schedules.size(), 2u);
  ASSERT_TRUE(s.initial_layers.has_value());
  EXPECT_EQ((*s.initial_layers)[0], Graph(3, {{0, 1}}));
  EXPECT_FALSE(parse_scenario(R"({"n": 3, "players": [{"values": [1], "cost": 1}]})").initial_layers);
  EXPECT_THROW(parse_scenario(R"({"n": 3, "players": []})"), ParseError);
  EXPECT_THROW(parse_scenario(R"({"n": 3, "players": [{"values": [1], "cost": 1}],
                                  "initial_layers": []})"),
               ParseError);
  EXPECT_THROW(parse_scenario(R"({"n": 3, "players": [{"values": [1], "cost": 1}],
                                  "initial_layers": [{"n": 4, "edges": []}]})"),
               ParseError);
}

TEST(Files, MissingFileIsIoError) { EXPECT_THROW(read_text_file("/nonexistent/netform.json"), IoError); }

}  // namespace
}  // namespace netform
