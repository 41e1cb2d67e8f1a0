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

#include "netform/best_response.hpp"
#include "netform/errors.hpp"
#include "netform/utility.hpp"
#include "oracles.hpp"

namespace netform {
namespace {

using testing::q;
using testing::Rng;
using testing::sched;

const Graph kRing6 = Graph::cycle(6);
const Graph kStarG2 = Graph::star(6, 0);
const Graph kDoubleStarG3(6, {{0, 1}, {2, 3}, {0, 3}, {3, 4}, {0, 5}});

BenefitSchedule example_schedule() { return sched({"1.01", "0.85", "0.8", "0.2", "0.1"}, "1"); }

TEST(Schedule, Validation) {
  EXPECT_THROW(sched({"1"}, "0"), DomainError);
  EXPECT_THROW(sched({"1"}, "-1"), DomainError);
  EXPECT_THROW(sched({"1", "-0.5"}, "1"), DomainError);
  EXPECT_THROW(sched({"1", "2"}, "1"), DomainError);
  BenefitSchedule s = sched({"3", "2"}, "1");
  EXPECT_EQ(s.b2(), Rational(2));
  EXPECT_EQ(sched({"3"}, "1").b2(), Rational(0));
  EXPECT_THROW(s.require_covers(4), DomainError);
  EXPECT_NO_THROW(s.require_covers(3));
}

TEST(SingleLayer, Examples) {
  EXPECT_EQ(single_layer_utility(Graph::complete(3), sched({"1", "1"}, "0.5")), q("1.5"));
  EXPECT_EQ(single_layer_utility(Graph(5), sched({"3", "2", "1", "1"}, "0.5")), Rational(0));
  EXPECT_EQ(single_layer_utility(Graph::star(4, 0), sched({"1", "0.5", "0"}, "0.75")), q("2.25"));
  EXPECT_EQ(testing::oracle_single(Graph::star(4, 0), sched({"1", "0.5", "0"}, "0.75")), q("2.25"));
}

TEST(Conditional, ExampleRingShapes) {
  BenefitSchedule s = example_schedule();
  EXPECT_EQ(conditional_utility(kStarG2, kRing6, s), q("0.42"));
  EXPECT_EQ(conditional_utility(kDoubleStarG3, kRing6, s), q("0.64"));
  EXPECT_EQ(conditional_utility(Graph(6), kRing6, s), Rational(0));
  EXPECT_THROW(conditional_utility(Graph(5), kRing6, s), DomainError);
}

TEST(Conditional, MatchesOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(1, 7);
    Graph g = rng.graph(n, rng.uniform(0, 100));
    Graph ref = rng.graph(n, rng.uniform(0, 100));
    BenefitSchedule s = rng.schedule(std::max(1, n - 1));
    EXPECT_EQ(conditional_utility(g, ref, s), testing::oracle_conditional(g, ref, s));
  }
}

TEST(Conditional, GeneralizesSingleLayer) {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(1, 6);
    Graph g = rng.graph(n, rng.uniform(0, 100));
    BenefitSchedule s = rng.schedule(std::max(1, n - 1));
    EXPECT_EQ(conditional_utility(g, Graph::complete(n), s), single_layer_utility(g, s));
  }
}

TEST(Conditional, NonincreasingInCost) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(2, 6);
    Graph g = rng.graph(n, 50);
    Graph ref = rng.graph(n, 50);
    BenefitSchedule s = rng.schedule(n - 1);
    BenefitSchedule dearer(s.values(), s.cost() + Rational(rng.uniform(1, 8), 8));
    EXPECT_GE(conditional_utility(g, ref, s), conditional_utility(g, ref, dearer));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_cost(sched({"3", "2"}, "0.5")), CostClass::kLow);
  EXPECT_EQ(classify_cost(sched({"3", "2"}, "3")), CostClass::kMedium);
  EXPECT_EQ(classify_cost(sched({"3", "2"}, "1")), CostClass::kMedium);
  EXPECT_EQ(classify_cost(sched({"3", "2"}, "3.5")), CostClass::kHigh);
}

TEST(Classify, ExactlyOneClass) {
  Rng rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    BenefitSchedule s = rng.schedule(2);
    Rational b1 = s.values()[0], b2 = s.values()[1], c = s.cost();
    int hits = (b1 - b2 > c) + (c > b1) + (b1 - b2 <= c && c <= b1);
    EXPECT_EQ(hits, 1);
    CostClass expect = b1 - b2 > c ? CostClass::kLow : c > b1 ? CostClass::kHigh : CostClass::kMedium;
    EXPECT_EQ(classify_cost(s), expect);
  }
}

TEST(Bounds, Examples) {
  Rng rng(25);
  Graph tree = rng.tree(6);
  BenefitSchedule s = sched({"1", "0.9", "0.5", "0.1", "0"}, "0.5");
  UtilityBounds t = br_utility_bounds(tree, s);
  EXPECT_EQ(t.lower, t.upper);
  EXPECT_EQ(t.lower, q("2.5"));

  UtilityBounds k4 = br_utility_bounds(Graph::complete(4), sched({"1", "0.9", "0.9"}, "0.5"));
  EXPECT_EQ(k4.lower, q("3.0"));
  EXPECT_EQ(k4.upper, q("4.2"));

  UtilityBounds ring = br_utility_bounds(kRing6, s);
  EXPECT_EQ(ring.lower, q("3.0"));
  EXPECT_EQ(ring.upper, q("3.4"));
}

TEST(Bounds, RejectOutsideRegime) {
  EXPECT_THROW(br_utility_bounds(kRing6, sched({"3", "2", "1", "1", "1"}, "0.5")), DomainError);
  EXPECT_THROW(br_utility_bounds(kRing6, sched({"3", "2", "1", "1", "1"}, "3.5")), DomainError);
  EXPECT_THROW(br_utility_bounds(Graph(4, {{0, 1}}), sched({"1", "0.9", "0"}, "0.5")), DomainError);
}

TEST(Bounds, BracketExhaustiveOptimum) {
  Rng rng(26);
  int checked = 0;
  while (checked < 200) {
    int n = rng.uniform(2, 5);
    Graph ref = rng.connected(n, rng.uniform(0, 80));
    BenefitSchedule s = rng.schedule(n - 1, CostClass::kMedium);
    UtilityBounds b = br_utility_bounds(ref, s);
    Rational best = testing::oracle_best_response(ref, s).utility;
    EXPECT_LE(b.lower, best);
    EXPECT_GE(b.upper, best);
    ++checked;
  }
}

TEST(KIndex, Examples) {
  EXPECT_EQ(k_index(sched({"3", "2"}, "3.5"), 10), 3);
  EXPECT_EQ(k_index(sched({"3", "2"}, "4.5"), 10), 4);
  EXPECT_EQ(k_index(sched({"3", "0"}, "3.1"), 10), std::nullopt);
  EXPECT_EQ(k_index(sched({"3", "2"}, "13"), 10), std::nullopt);
  EXPECT_THROW(k_index(sched({"3", "2"}, "1"), 10), DomainError);
}

TEST(KIndex, LinearScanOracle) {
  Rng rng(27);
  for (int trial = 0; trial < 300; ++trial) {
    BenefitSchedule s = rng.schedule(2, CostClass::kHigh);
    int n = rng.uniform(2, 30);
    std::optional<int> expect;
    for (int t = 1; t <= n && !expect; ++t) {
      if (s.cost() < s.b1() + Rational(t - 2, 2) * s.b2()) expect = t;
    }
    auto k = k_index(s, n);
    EXPECT_EQ(k, expect);
    if (k) EXPECT_GE(*k, 3);
  }
}

TEST(KIndex, EmptyBestResponseBelowIndex) {
  // On a complete reference with k nodes the optimum is empty iff k < k-index.
  Rng rng(28);
  int checked = 0;
  while (checked < 40) {
    BenefitSchedule s = rng.schedule(5, CostClass::kHigh);
    auto kidx = k_index(s, 6);
    if (!kidx) continue;
    for (int k = 3; k <= 6; ++k) {
      BrResult br = exhaustive_best_response(Graph::complete(k), s);
      EXPECT_EQ(br.graph.empty_of_edges() && br.utility == 0, k < *kidx) << "k=" << k << " index=" << *kidx;
      if (k < *kidx) EXPECT_TRUE(br.graph.empty_of_edges());
    }
    ++checked;
  }
}

}  // namespace
}  // namespace netform
