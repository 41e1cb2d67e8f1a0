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

#include "netform/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "netform/errors.hpp"

namespace netform {
namespace {

constexpr NodeMask bit(int i) { return NodeMask{1} << i; }

NodeMask low_mask(int n) { return n >= 64 ? ~NodeMask{0} : (NodeMask{1} << n) - 1; }

void require_same_n(const Graph& a, const Graph& b, const char* what) {
  if (a.node_count() != b.node_count()) {
    throw DomainError(std::string(what) + ": node counts differ (" +
                      std::to_string(a.node_count()) + " vs " +
                      std::to_string(b.node_count()) + ")");
  }
}

// Nodes of `within` reachable from `source` using only edges inside `within`.
NodeMask reach(std::span<const NodeMask> adj, int source, NodeMask within) {
  NodeMask seen = bit(source);
  NodeMask frontier = seen;
  while (frontier != 0) {
    NodeMask next = 0;
    for (NodeMask f = frontier; f != 0; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Union-find with rollback for spanning-tree enumeration.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(parent_.size(), 1) {
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }

  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class SpanningTreeWalker {
 public:
  SpanningTreeWalker(const Graph& g, NodeMask within, std::uint64_t cap,
                     const std::function<bool(const Graph&)>& visit)
      : n_(g.node_count()), within_(within), cap_(cap), visit_(visit), uf_(g.node_count()) {
    for (const Edge& e : g.edges()) {
      if ((within & bit(e.u)) && (within & bit(e.v))) edges_.push_back(e);
    }
    target_ = std::popcount(within) - 1;
  }

  TreeEnumeration run() {
    if (within_ != 0 && is_connected_with(0)) walk(0);
    return result_;
  }

 private:
  // Would `within` stay connected using the chosen edges plus edges[from..]?
  bool is_connected_with(std::size_t from) const {
    std::vector<NodeMask> adj(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : chosen_) {
      adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
      adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
    for (std::size_t i = from; i < edges_.size(); ++i) {
      adj[static_cast<std::size_t>(edges_[i].u)] |= bit(edges_[i].v);
      adj[static_cast<std::size_t>(edges_[i].v)] |= bit(edges_[i].u);
    }
    return reach(adj, std::countr_zero(within_), within_) == within_;
  }

  // Returns false once enumeration must stop.
  bool walk(std::size_t index) {
    if (static_cast<int>(chosen_.size()) == target_) {
      if (result_.visited == cap_) {
        result_.cap_reached = true;
        return false;
      }
      ++result_.visited;
      if (!visit_(Graph(n_, chosen_))) {
        result_.stopped = true;
        return false;
      }
      return true;
    }
    if (index == edges_.size()) return true;

    const Edge& e = edges_[index];
    if (uf_.unite(e.u, e.v)) {
      chosen_.push_back(e);
      bool go_on = walk(index + 1);
      chosen_.pop_back();
      uf_.undo();
      if (!go_on) return false;
    }
    if (is_connected_with(index + 1)) return walk(index + 1);
    return true;
  }

  int n_;
  NodeMask within_;
  std::uint64_t cap_;
  const std::function<bool(const Graph&)>& visit_;
  RollbackUnionFind uf_;
  std::vector<Edge> edges_;
  std::vector<Edge> chosen_;
  int target_ = 0;
  TreeEnumeration result_;
};

// Tree on the nodes of `component` grown breadth-first from `root`, visiting
// neighbors in ascending id order.
Graph bfs_tree(const Graph& g, NodeMask component, int root) {
  std::vector<Edge> tree;
  NodeMask seen = bit(root);
  std::vector<int> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (NodeMask nb = g.neighbors(x) & component & ~seen; nb != 0; nb &= nb - 1) {
      int y = std::countr_zero(nb);
      seen |= bit(y);
      tree.push_back({x, y});
      queue.push_back(y);
    }
  }
  return Graph(g.node_count(), tree);
}

// A tree is a 2-spanner of g on `component` iff each g-edge inside the
// component is a tree edge or its endpoints share a tree neighbor.
bool tree_spans_within_two(const Graph& tree, const Graph& g, NodeMask component) {
  for (const Edge& e : g.edges()) {
    if (!(component & bit(e.u))) continue;
    if (tree.has_edge(e.u, e.v)) continue;
    if ((tree.neighbors(e.u) & tree.neighbors(e.v)) == 0) return false;
  }
  return true;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxNodes) {
    throw DomainError("graph node count " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxNodes));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_node(int u) const {
  if (u < 0 || u >= n_) {
    throw DomainError("node " + std::to_string(u) + " out of range for n=" + std::to_string(n_));
  }
}

void Graph::add(int u, int v) {
  check_node(u);
  check_node(v);
  if (u == v) throw DomainError("self-loop at node " + std::to_string(u));
  if (has_edge(u, v)) {
    throw DomainError("duplicate edge (" + std::to_string(std::min(u, v)) + "," +
                      std::to_string(std::max(u, v)) + ")");
  }
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.adj_[static_cast<std::size_t>(u)] = low_mask(n) & ~bit(u);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n < 3) throw DomainError("cycle needs at least 3 nodes");
  for (int u = 0; u < n; ++u) g.add(u, (u + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add(u, u + 1);
  return g;
}

Graph Graph::star(int n, int center, NodeMask leaves) {
  Graph g(n);
  g.check_node(center);
  leaves &= low_mask(n) & ~bit(center);
  for (NodeMask l = leaves; l != 0; l &= l - 1) g.add(center, std::countr_zero(l));
  return g;
}

Graph Graph::star(int n, int center) { return star(n, center, low_mask(n)); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (NodeMask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(int u) const {
  check_node(u);
  return std::popcount(adj_[static_cast<std::size_t>(u)]);
}

NodeMask Graph::all_nodes() const { return low_mask(n_); }

NodeMask Graph::isolated_nodes() const {
  NodeMask out = 0;
  for (int u = 0; u < n_; ++u) {
    if (adj_[static_cast<std::size_t>(u)] == 0) out |= bit(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (NodeMask m = adj_[static_cast<std::size_t>(u)] & ~low_mask(u + 1); m != 0; m &= m - 1) {
      out.push_back({u, std::countr_zero(m)});
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) {
    throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  }
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  g.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
  return g;
}

bool Graph::is_complete() const { return edge_count() == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return reach(adj_, 0, all_nodes()) == all_nodes();
}

bool Graph::is_forest() const {
  return edge_count() + component_masks(*this).size() == static_cast<std::size_t>(n_);
}

bool Graph::is_subgraph_of(const Graph& other) const {
  require_same_n(*this, other, "is_subgraph_of");
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if ((adj_[u] & ~other.adj_[u]) != 0) return false;
  }
  return true;
}

bool edge_set_less(const Graph& a, const Graph& b) {
  return std::ranges::lexicographical_compare(a.edges(), b.edges());
}

DistanceTable::DistanceTable(int n)
    : n_(n), hops_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {
  for (int i = 0; i < n; ++i) hops_[static_cast<std::size_t>(i * n + i)] = 0;
}

std::optional<int> DistanceTable::distance(int i, int j) const {
  std::uint8_t h = hops_.at(static_cast<std::size_t>(i * n_ + j));
  if (h == kUnreachable) return std::nullopt;
  return h;
}

void DistanceTable::set(int i, int j, int hops) {
  hops_.at(static_cast<std::size_t>(i * n_ + j)) = static_cast<std::uint8_t>(hops);
  hops_.at(static_cast<std::size_t>(j * n_ + i)) = static_cast<std::uint8_t>(hops);
}

std::vector<std::optional<int>> distances_from(const Graph& g, int source) {
  std::vector<std::optional<int>> out(static_cast<std::size_t>(g.node_count()));
  out[static_cast<std::size_t>(source)] = 0;
  NodeMask seen = bit(source);
  NodeMask frontier = seen;
  for (int level = 1; frontier != 0; ++level) {
    NodeMask next = 0;
    for (NodeMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= ~seen;
    for (NodeMask m = next; m != 0; m &= m - 1) out[static_cast<std::size_t>(std::countr_zero(m))] = level;
    seen |= next;
    frontier = next;
  }
  return out;
}

DistanceTable all_pairs_distances(const Graph& g) {
  DistanceTable table(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) {
    auto row = distances_from(g, i);
    for (int j = i + 1; j < g.node_count(); ++j) {
      if (row[static_cast<std::size_t>(j)]) table.set(i, j, *row[static_cast<std::size_t>(j)]);
    }
  }
  return table;
}

Graph complement(const Graph& g) {
  int n = g.node_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph union_of(std::span<const Graph> graphs) {
  if (graphs.empty()) throw DomainError("union_of: no graphs");
  int n = graphs.front().node_count();
  std::vector<NodeMask> adj(static_cast<std::size_t>(n), 0);
  for (const Graph& g : graphs) {
    require_same_n(graphs.front(), g, "union_of");
    for (int u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] |= g.neighbors(u);
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (NodeMask m = adj[static_cast<std::size_t>(u)] & ~low_mask(u + 1); m != 0; m &= m - 1) {
      edges.push_back({u, std::countr_zero(m)});
    }
  }
  return Graph(n, edges);
}

Graph union_of(std::initializer_list<Graph> graphs) {
  return union_of(std::span<const Graph>(graphs.begin(), graphs.size()));
}

std::vector<NodeMask> component_masks(const Graph& g) {
  std::vector<NodeMask> out;
  std::vector<NodeMask> adj(static_cast<std::size_t>(g.node_count()));
  for (int u = 0; u < g.node_count(); ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
  NodeMask left = g.all_nodes();
  while (left != 0) {
    NodeMask c = reach(adj, std::countr_zero(left), g.all_nodes());
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (NodeMask c : component_masks(g)) {
    std::vector<int> nodes;
    for (NodeMask m = c; m != 0; m &= m - 1) nodes.push_back(std::countr_zero(m));
    out.push_back(std::move(nodes));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, NodeMask nodes) {
  if ((nodes & ~g.all_nodes()) != 0) {
    throw DomainError("induced_subgraph: node " + std::to_string(std::countr_zero(nodes & ~g.all_nodes())) +
                      " out of range for n=" + std::to_string(g.node_count()));
  }
  InducedSubgraph out;
  out.index_of.assign(static_cast<std::size_t>(g.node_count()), -1);
  for (NodeMask m = nodes; m != 0; m &= m - 1) {
    int old = std::countr_zero(m);
    out.index_of[static_cast<std::size_t>(old)] = static_cast<int>(out.labels.size());
    out.labels.push_back(old);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = out.index_of[static_cast<std::size_t>(e.u)];
    int b = out.index_of[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph(static_cast<int>(out.labels.size()), edges);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> nodes) {
  NodeMask mask = 0;
  for (int u : nodes) {
    if (u < 0 || u >= g.node_count()) {
      throw DomainError("induced_subgraph: node " + std::to_string(u) + " out of range for n=" +
                        std::to_string(g.node_count()));
    }
    mask |= bit(u);
  }
  return induced_subgraph(g, mask);
}

Graph lift(const Graph& sub, std::span<const int> labels, int n) {
  std::vector<Edge> edges;
  for (const Edge& e : sub.edges()) {
    edges.push_back({labels[static_cast<std::size_t>(e.u)], labels[static_cast<std::size_t>(e.v)]});
  }
  return Graph(n, edges);
}

bool is_t_spanner(const Graph& h, const Graph& g, int t) {
  require_same_n(h, g, "is_t_spanner");
  if (t < 1) throw DomainError("is_t_spanner: t must be positive");
  for (int x = 0; x < g.node_count(); ++x) {
    NodeMask later = g.neighbors(x) & ~low_mask(x + 1);
    if (later == 0) continue;
    // Nodes within t hops of x in h.
    NodeMask seen = bit(x);
    NodeMask frontier = seen;
    for (int level = 0; level < t && frontier != 0; ++level) {
      NodeMask next = 0;
      for (NodeMask f = frontier; f != 0; f &= f - 1) next |= h.neighbors(std::countr_zero(f));
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if ((later & ~seen) != 0) return false;
  }
  return true;
}

TreeEnumeration for_each_spanning_tree(const Graph& g, NodeMask within, std::uint64_t cap,
                                       const std::function<bool(const Graph&)>& visit) {
  return SpanningTreeWalker(g, within, cap, visit).run();
}

std::optional<Graph> find_2spanner_forest(const Graph& g, std::uint64_t tree_cap) {
  std::vector<Graph> parts;
  for (NodeMask comp : component_masks(g)) {
    if (std::popcount(comp) == 1) continue;
    std::optional<Graph> found;
    for (NodeMask m = comp; m != 0 && !found; m &= m - 1) {
      Graph tree = bfs_tree(g, comp, std::countr_zero(m));
      if (tree_spans_within_two(tree, g, comp)) found = tree;
    }
    if (!found) {
      TreeEnumeration walk = for_each_spanning_tree(g, comp, tree_cap, [&](const Graph& tree) {
        if (!tree_spans_within_two(tree, g, comp)) return true;
        found = tree;
        return false;
      });
      if (!found && walk.cap_reached) {
        throw ResourceError("undecided: spanning-tree cap of " + std::to_string(tree_cap) +
                            " reached while searching for a 2-spanner forest");
      }
    }
    if (!found) return std::nullopt;
    parts.push_back(*found);
  }
  if (parts.empty()) return Graph(g.node_count());
  return union_of(parts);
}

PeelingRecord two_core_peel(const Graph& g) {
  PeelingRecord record;
  Graph core = g;
  for (;;) {
    int leaf = -1;
    for (int u = 0; u < core.node_count(); ++u) {
      if (core.degree(u) == 1) {
        leaf = u;
        break;
      }
    }
    if (leaf < 0) break;
    int neighbor = std::countr_zero(core.neighbors(leaf));
    record.removals.emplace_back(leaf, neighbor);
    core = core.without_edge(leaf, neighbor);
  }
  record.core = std::move(core);
  return record;
}

Graph unpeel(const PeelingRecord& record) {
  Graph g = record.core;
  for (auto it = record.removals.rbegin(); it != record.removals.rend(); ++it) {
    g = g.with_edge(it->first, it->second);
  }
  return g;
}

std::optional<int> star_center(const Graph& g) {
  if (g.node_count() < 2) throw DomainError("star_center needs at least 2 nodes");
  for (int u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) == g.node_count() - 1) return u;
  }
  return std::nullopt;
}

std::optional<int> flower_hub(const Graph& g) {
  int n = g.node_count();
  if (n < 3 || g.is_complete() || !g.is_connected()) return std::nullopt;
  for (int h = 0; h < n; ++h) {
    if (g.degree(h) != n - 1) continue;
    bool petals_are_cliques = true;
    NodeMask rest = g.all_nodes() & ~bit(h);
    for (NodeMask m = rest; m != 0 && petals_are_cliques; m &= m - 1) {
      int x = std::countr_zero(m);
      // Inside a clique petal, x's neighborhood minus the hub plus x itself is
      // the same set for every member.
      NodeMask petal = (g.neighbors(x) & rest) | bit(x);
      for (NodeMask p = petal; p != 0; p &= p - 1) {
        int y = std::countr_zero(p);
        if (((g.neighbors(y) & rest) | bit(y)) != petal) {
          petals_are_cliques = false;
          break;
        }
      }
    }
    if (petals_are_cliques) return h;
  }
  return std::nullopt;
}

Rational alpha_density(const Graph& g) {
  int n = g.node_count();
  if (n < 2) throw DomainError("alpha_density needs at least 2 nodes");
  if (n > kAlphaMaxNodes) {
    throw ResourceError("alpha_density: subset cap exceeded (n=" + std::to_string(n) + " > " +
                        std::to_string(kAlphaMaxNodes) + ")");
  }
  std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint16_t> internal(subsets, 0);
  std::int64_t best_edges = 0;
  std::int64_t best_den = 1;
  for (std::size_t s = 1; s < subsets; ++s) {
    int low = std::countr_zero(s);
    std::size_t rest = s & (s - 1);
    internal[s] = static_cast<std::uint16_t>(internal[rest] +
                                             std::popcount(g.neighbors(low) & static_cast<NodeMask>(rest)));
    int size = std::popcount(s);
    if (size < 2) continue;
    // internal/(size-1) > best_edges/best_den
    if (static_cast<std::int64_t>(internal[s]) * best_den > best_edges * (size - 1)) {
      best_edges = internal[s];
      best_den = size - 1;
    }
  }
  return Rational(best_edges, best_den) - 1;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  int n = a.node_count();
  if (n != b.node_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(static_cast<std::size_t>(n)), db(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    da[static_cast<std::size_t>(u)] = a.degree(u);
    db[static_cast<std::size_t>(u)] = b.degree(u);
  }
  std::vector<int> sa = da, sb = db;
  std::ranges::sort(sa);
  std::ranges::sort(sb);
  if (sa != sb) return false;

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  NodeMask used = 0;
  std::function<bool(int)> extend = [&](int u) -> bool {
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if ((used & bit(v)) || db[static_cast<std::size_t>(v)] != da[static_cast<std::size_t>(u)]) continue;
      bool consistent = true;
      for (int w = 0; w < u && consistent; ++w) {
        consistent = a.has_edge(u, w) == b.has_edge(v, image[static_cast<std::size_t>(w)]);
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(u)] = v;
      used |= bit(v);
      if (extend(u + 1)) return true;
      used &= ~bit(v);
    }
    return false;
  };
  return extend(0);
}

}  // namespace netform
