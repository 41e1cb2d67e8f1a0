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
#include "netform/graph.hpp"
#include "oracles.hpp"

namespace netform {
namespace {

using testing::Rng;

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 3}}), DomainError);
  EXPECT_THROW(Graph(65), DomainError);
}

TEST(Graph, EdgesAreCanonical) {
  Graph g(4, {{2, 1}, {3, 0}, {0, 1}});
  std::vector<Edge> expected{{0, 1}, {0, 3}, {1, 2}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g, Graph(4, {{0, 1}, {1, 2}, {0, 3}}));
}

TEST(Distances, PathEmptyRing) {
  EXPECT_EQ(all_pairs_distances(Graph::path(3)).distance(0, 2), 2);
  DistanceTable empty = all_pairs_distances(Graph(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) EXPECT_FALSE(empty.distance(i, j).has_value());
  EXPECT_EQ(all_pairs_distances(Graph::cycle(6)).distance(0, 3), 3);
}

TEST(Distances, MatchFloydAndEdges) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(1, 7);
    Graph g = rng.graph(n, rng.uniform(0, 100));
    DistanceTable d = all_pairs_distances(g);
    auto ref = testing::floyd(g);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(d.distance(i, i), 0);
      for (int j = 0; j < n; ++j) {
        if (ref[i][j] >= testing::kInf) {
          EXPECT_FALSE(d.reachable(i, j));
        } else {
          EXPECT_EQ(d.distance(i, j), ref[i][j]);
        }
        if (i != j) EXPECT_EQ(d.distance(i, j) == 1, g.has_edge(i, j));
      }
    }
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(Graph::complete(4)), Graph(4));
  EXPECT_EQ(complement(Graph::cycle(4)), Graph(4, {{0, 2}, {1, 3}}));
}

TEST(Complement, InvolutionAndEdgeCount) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(0, 7);
    Graph g = rng.graph(n, rng.uniform(0, 100));
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.edge_count() + complement(g).edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(Union, Examples) {
  EXPECT_EQ(union_of({Graph(3), Graph(3)}), Graph(3));
  EXPECT_EQ(union_of({Graph::star(3, 0), Graph::star(3, 1)}), Graph::complete(3));
  Graph g = Graph::cycle(5);
  EXPECT_EQ(union_of({g, complement(g)}), Graph::complete(5));
  EXPECT_THROW(union_of({Graph(3), Graph(4)}), DomainError);
}

TEST(Components, Examples) {
  using Sets = std::vector<std::vector<int>>;
  EXPECT_EQ(components(Graph(3)), (Sets{{0}, {1}, {2}}));
  EXPECT_EQ(components(Graph::cycle(6)), (Sets{{0, 1, 2, 3, 4, 5}}));
  EXPECT_EQ(components(Graph(4, {{0, 1}, {2, 3}})), (Sets{{0, 1}, {2, 3}}));
  EXPECT_EQ(components(Graph(5, {{1, 4}, {0, 3}})), (Sets{{0, 3}, {1, 4}, {2}}));
}

TEST(InducedSubgraph, Examples) {
  std::vector<int> first3{0, 1, 2};
  EXPECT_EQ(induced_subgraph(Graph::complete(4), first3).graph, Graph::complete(3));
  EXPECT_EQ(induced_subgraph(Graph::cycle(6), first3).graph, Graph::path(3));
  std::vector<int> single{4};
  InducedSubgraph one = induced_subgraph(Graph::cycle(6), single);
  EXPECT_EQ(one.graph, Graph(1));
  EXPECT_EQ(one.labels, std::vector<int>{4});
  EXPECT_EQ(one.index_of[4], 0);
  EXPECT_EQ(one.index_of[0], -1);
  std::vector<int> bad{7};
  EXPECT_THROW(induced_subgraph(Graph(3), bad), DomainError);
}

TEST(InducedSubgraph, LiftRestoresLabels) {
  Graph g(6, {{1, 3}, {3, 5}, {0, 2}});
  std::vector<int> nodes{1, 3, 5};
  InducedSubgraph sub = induced_subgraph(g, nodes);
  EXPECT_EQ(lift(sub.graph, sub.labels, 6), Graph(6, {{1, 3}, {3, 5}}));
}

TEST(Spanner, Examples) {
  EXPECT_TRUE(is_t_spanner(Graph::star(5, 0), Graph::complete(5), 2));
  EXPECT_FALSE(is_t_spanner(Graph::path(6), Graph::cycle(6), 4));
  Graph g = Graph::cycle(5);
  for (int t = 1; t <= 3; ++t) EXPECT_TRUE(is_t_spanner(g, g, t));
  EXPECT_THROW(is_t_spanner(Graph(3), Graph(4), 2), DomainError);
}

TEST(SpanningTrees, CountsAndOrder) {
  auto count = [](const Graph& g) {
    std::vector<Graph> seen;
    for_each_spanning_tree(g, g.all_nodes(), kSpanningTreeCap, [&](const Graph& t) {
      seen.push_back(t);
      return true;
    });
    return seen;
  };
  EXPECT_EQ(count(Graph::complete(4)).size(), 16u);
  EXPECT_EQ(count(Graph::complete(5)).size(), 125u);
  auto ring = count(Graph::cycle(6));
  ASSERT_EQ(ring.size(), 6u);
  for (std::size_t i = 1; i < ring.size(); ++i) EXPECT_TRUE(edge_set_less(ring[i - 1], ring[i]));
  TreeEnumeration capped = for_each_spanning_tree(Graph::complete(5), Graph::complete(5).all_nodes(), 10,
                                                  [](const Graph&) { return true; });
  EXPECT_TRUE(capped.cap_reached);
}

TEST(TwoSpannerForest, Examples) {
  EXPECT_EQ(find_2spanner_forest(Graph::complete(5)), Graph::star(5, 0));
  EXPECT_FALSE(find_2spanner_forest(Graph::cycle(6)).has_value());
  Graph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  EXPECT_EQ(find_2spanner_forest(tree), tree);
}

TEST(TwoSpannerForest, OutputValidAndAbsenceConfirmed) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(2, 6);
    Graph g = rng.graph(n, rng.uniform(20, 90));
    auto f = find_2spanner_forest(g);
    if (f) {
      EXPECT_TRUE(f->is_forest());
      EXPECT_TRUE(f->is_subgraph_of(g));
      EXPECT_TRUE(is_t_spanner(*f, g, 2));
      EXPECT_EQ(components(*f), components(g));
    } else {
      // A spanning forest is a union of per-component trees; check each one.
      bool exists = true;
      for (const auto& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        exists = exists && testing::oracle_tree_spanner(sub.graph, 2);
      }
      EXPECT_FALSE(exists);
    }
  }
}

TEST(Peel, Examples) {
  Graph tree(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  PeelingRecord t = two_core_peel(tree);
  EXPECT_TRUE(t.core.empty_of_edges());
  EXPECT_EQ(t.removals.size(), 6u - 2u);

  PeelingRecord ring = two_core_peel(Graph::cycle(6));
  EXPECT_EQ(ring.core, Graph::cycle(6));
  EXPECT_TRUE(ring.removals.empty());

  Graph pendant(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  PeelingRecord p = two_core_peel(pendant);
  EXPECT_EQ(p.core, Graph(4, {{0, 1}, {1, 2}, {0, 2}}));
  ASSERT_EQ(p.removals.size(), 1u);
  EXPECT_EQ(p.removals[0], (std::pair<int, int>{3, 2}));
}

TEST(Peel, ReplayReconstructs) {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(1, 9);
    Graph g = trial % 3 == 0 ? rng.tree(n) : rng.graph(n, rng.uniform(5, 60));
    PeelingRecord rec = two_core_peel(g);
    EXPECT_EQ(unpeel(rec), g);
    for (int v = 0; v < n; ++v) EXPECT_NE(rec.core.degree(v), 1);
  }
}

TEST(StarCenter, Examples) {
  EXPECT_EQ(star_center(Graph::complete(4)), 0);
  EXPECT_EQ(star_center(Graph::star(5, 2)), 2);
  EXPECT_FALSE(star_center(Graph::cycle(6)).has_value());
  EXPECT_THROW(star_center(Graph(1)), DomainError);
}

TEST(FlowerHub, RecognizesCliquesSharingAHub) {
  // Triangle {0,1,2} and K4 {0,3,4,5} sharing node 0.
  Graph flower(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {3, 4}, {3, 5}, {4, 5}});
  EXPECT_EQ(flower_hub(flower), 0);
  EXPECT_FALSE(flower_hub(Graph::complete(4)).has_value());
  EXPECT_FALSE(flower_hub(Graph::cycle(5)).has_value());
  EXPECT_EQ(flower_hub(Graph::star(4, 3)), 3);
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha_density(Graph::complete(6)), Rational(2));
  Rng rng(15);
  EXPECT_EQ(alpha_density(rng.tree(7)), Rational(0));
  EXPECT_EQ(alpha_density(Graph::cycle(5)), Rational(1, 4));
  EXPECT_THROW(alpha_density(Graph(1)), DomainError);
  EXPECT_THROW(alpha_density(Graph(21)), ResourceError);
}

TEST(Alpha, ClosedFormsAndOracle) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(alpha_density(Graph::complete(n)), Rational(n - 2, 2));
    EXPECT_EQ(alpha_density(Graph::cycle(n)), Rational(1, n - 1));
  }
  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(2, 8);
    Graph g = rng.graph(n, rng.uniform(0, 100));
    EXPECT_EQ(alpha_density(g), testing::oracle_alpha(g));
  }
}

TEST(Isomorphism, Basics) {
  EXPECT_TRUE(are_isomorphic(Graph::star(5, 0), Graph::star(5, 3)));
  EXPECT_TRUE(are_isomorphic(Graph::path(4), Graph(4, {{2, 0}, {0, 3}, {3, 1}})));
  EXPECT_FALSE(are_isomorphic(Graph::path(4), Graph::star(4, 0)));
  EXPECT_FALSE(are_isomorphic(Graph::cycle(6), Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

}  // namespace
}  // namespace netform
