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

#ifndef NETFORM_GRAPH_HPP
#define NETFORM_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netform/rational.hpp"

namespace netform {

// Set of node ids packed into one word; bit i is node i.
using NodeMask = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on nodes 0..n-1, stored as one adjacency bitset per
// node. Values are immutable once built; the builders below return copies.
class Graph {
 public:
  static constexpr int kMaxNodes = 64;

  Graph() = default;
  explicit Graph(int n);
  // Endpoints may come in either order; duplicates, self-loops and
  // out-of-range ids throw DomainError.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  // Star centered at `center` whose peripheral nodes are `leaves`.
  static Graph star(int n, int center, NodeMask leaves);
  // Star centered at `center` over every other node.
  static Graph star(int n, int center);

  int node_count() const { return n_; }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
  NodeMask neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  int degree(int u) const;
  NodeMask all_nodes() const;
  NodeMask isolated_nodes() const;
  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool empty_of_edges() const { return edge_count() == 0; }
  bool is_complete() const;
  bool is_connected() const;
  bool is_forest() const;
  // Every edge of *this is an edge of `other`.
  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(int u) const;
  void add(int u, int v);

  int n_ = 0;
  std::vector<NodeMask> adj_;
};

// Lexicographic order on the sorted edge lists of two graphs on the same n;
// the canonical tie-break used by every solver.
bool edge_set_less(const Graph& a, const Graph& b);

// Hop counts between every pair; unreachable pairs have no value.
class DistanceTable {
 public:
  explicit DistanceTable(int n);

  int node_count() const { return n_; }
  std::optional<int> distance(int i, int j) const;
  bool reachable(int i, int j) const { return distance(i, j).has_value(); }

  void set(int i, int j, int hops);

 private:
  static constexpr std::uint8_t kUnreachable = 0xFF;

  int n_;
  std::vector<std::uint8_t> hops_;
};

DistanceTable all_pairs_distances(const Graph& g);

// Hop distances from one source; entries for unreachable nodes are nullopt.
std::vector<std::optional<int>> distances_from(const Graph& g, int source);

Graph complement(const Graph& g);
Graph union_of(std::span<const Graph> graphs);
Graph union_of(std::initializer_list<Graph> graphs);

// Maximal connected node sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);
std::vector<NodeMask> component_masks(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // labels[new_id] = old_id, ascending.
  std::vector<int> labels;
  // Maps an old id to its new id, or -1 when the node is not in the subset.
  std::vector<int> index_of;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> nodes);
InducedSubgraph induced_subgraph(const Graph& g, NodeMask nodes);

// Rebuild a graph on `n` nodes from one expressed in the labels of an induced
// subgraph.
Graph lift(const Graph& sub, std::span<const int> labels, int n);

// True iff every edge of g has its endpoints within t hops in h.
bool is_t_spanner(const Graph& h, const Graph& g, int t);

// Spanning trees of the subgraph of g induced on the connected node set
// `within`, visited in lexicographic order of their edge lists. `visit`
// returns false to stop early.
struct TreeEnumeration {
  std::uint64_t visited = 0;
  bool stopped = false;
  bool cap_reached = false;
};

TreeEnumeration for_each_spanning_tree(const Graph& g, NodeMask within,
                                       std::uint64_t cap,
                                       const std::function<bool(const Graph&)>& visit);

inline constexpr std::uint64_t kSpanningTreeCap = 1'000'000;

// Spanning forest that is also a 2-spanner, or nullopt when none exists.
// Throws ResourceError ("undecided") if the tree enumeration cap is reached
// for some component before a decision.
std::optional<Graph> find_2spanner_forest(const Graph& g,
                                          std::uint64_t tree_cap = kSpanningTreeCap);

struct PeelingRecord {
  // Same node set as the input; peeled nodes are isolated.
  Graph core;
  // (leaf, its unique neighbor at removal time) in removal order.
  std::vector<std::pair<int, int>> removals;
};

PeelingRecord two_core_peel(const Graph& g);

// Replays removals in reverse onto the core.
Graph unpeel(const PeelingRecord& record);

// Smallest node adjacent to every other node.
std::optional<int> star_center(const Graph& g);

// Hub of a connected, non-complete graph that consists of cliques sharing one
// common node: the hub is adjacent to everything and deleting it leaves a
// disjoint union of cliques.
std::optional<int> flower_hub(const Graph& g);

// max over |S| >= 2 of |E(S,S)| / (|S| - 1), minus one. Exact, n <= 20.
inline constexpr int kAlphaMaxNodes = 20;
Rational alpha_density(const Graph& g);

// Brute force over relabelings with a degree-sequence filter; n <= 10.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace netform

#endif  // NETFORM_GRAPH_HPP
