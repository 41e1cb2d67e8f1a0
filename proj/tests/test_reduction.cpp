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
#include "netform/reduction.hpp"
#include "oracles.hpp"

namespace netform {
namespace {

using testing::q;
using testing::Rng;

TEST(TtsInstance, Validation) {
  EXPECT_THROW(TtsInstance(Graph(4, {{0, 1}, {2, 3}}), 4), DomainError);
  EXPECT_THROW(TtsInstance(Graph::cycle(5), 0), DomainError);
  EXPECT_NO_THROW(TtsInstance(Graph::cycle(5), 1));
}

TEST(BrnFromTts, ThresholdsAndSchedule) {
  BrnInstance ring = brn_instance_from_tts(TtsInstance(Graph::cycle(6), 4));
  EXPECT_EQ(ring.threshold, Rational(7));
  EXPECT_EQ(ring.schedule.values(), testing::rationals({"3", "2", "2", "2", "0"}));
  EXPECT_EQ(ring.schedule.cost(), Rational(2));
  EXPECT_EQ(ring.reference, Graph::cycle(6));

  // K4 on {0..3} with pendant chains 3-4 and 0-5.
  Graph k4_chains(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {0, 5}});
  EXPECT_EQ(brn_instance_from_tts(TtsInstance(k4_chains, 4)).threshold, Rational(11));

  Rng rng(51);
  EXPECT_EQ(brn_instance_from_tts(TtsInstance(rng.tree(6), 4)).threshold, Rational(5));

  BrnInstance seven = brn_instance_from_tts(TtsInstance(Graph::cycle(7), 4));
  EXPECT_EQ(seven.schedule.length(), 6u);

  EXPECT_THROW(brn_instance_from_tts(TtsInstance(Graph::cycle(6), 3)), DomainError);
  EXPECT_THROW(brn_instance_from_tts(TtsInstance(Graph::cycle(5), 4)), DomainError);
}

TEST(BrnFromTts, ScheduleSatisfiesReductionConstraints) {
  Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(6, 12);
    BrnInstance inst = brn_instance_from_tts(TtsInstance(rng.connected(n, 20), 4));
    const auto& b = inst.schedule.values();
    const Rational& c = inst.schedule.cost();
    EXPECT_GT(b[0], b[1]);
    EXPECT_EQ(b[1], b[2]);
    EXPECT_EQ(b[2], b[3]);
    EXPECT_GT(b[3], b[4]);
    EXPECT_LT(b[0] - b[1], c);
    EXPECT_LT(c, b[0]);
  }
}

TEST(TtsDecision, Examples) {
  EXPECT_TRUE(tts_decision(TtsInstance(Graph::complete(5), 2)));
  EXPECT_FALSE(tts_decision(TtsInstance(Graph::cycle(6), 4)));
  EXPECT_TRUE(tts_decision(TtsInstance(Graph::cycle(5), 4)));
  EXPECT_THROW(tts_decision(TtsInstance(Graph::complete(6), 1), 5), ResourceError);
}

TEST(TtsDecision, MatchesSubsetOracle) {
  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(2, 7);
    int t = rng.uniform(1, 5);
    Graph g = rng.connected(n, rng.uniform(0, 40));
    TtsInstance inst(g, t);
    bool answer = tts_decision(inst);
    EXPECT_EQ(answer, testing::oracle_tree_spanner(g, t));
    auto tree = find_tree_spanner(inst);
    EXPECT_EQ(tree.has_value(), answer);
    if (tree) {
      EXPECT_EQ(tree->edge_count(), static_cast<std::size_t>(n - 1));
      EXPECT_TRUE(tree->is_connected());
      EXPECT_TRUE(tree->is_subgraph_of(g));
      EXPECT_TRUE(is_t_spanner(*tree, g, t));
    }
  }
}

TEST(VerifyReduction, Examples) {
  ReductionReport ring = verify_reduction(TtsInstance(Graph::cycle(6), 4));
  EXPECT_FALSE(ring.tts);
  EXPECT_FALSE(ring.brn);
  EXPECT_TRUE(ring.agree);
  EXPECT_FALSE(ring.witness.has_value());

  Graph chord = Graph::cycle(6).with_edge(0, 3);
  ReductionReport yes = verify_reduction(TtsInstance(chord, 4));
  EXPECT_TRUE(yes.tts);
  EXPECT_TRUE(yes.brn);
  EXPECT_TRUE(yes.agree);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_TRUE(yes.witness_is_tree_spanner);
  EXPECT_GE(yes.optimum, yes.threshold);
}

}  // namespace
}  // namespace netform
