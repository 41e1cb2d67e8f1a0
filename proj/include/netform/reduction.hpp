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

#ifndef NETFORM_REDUCTION_HPP
#define NETFORM_REDUCTION_HPP

#include <cstdint>
#include <optional>

#include "netform/best_response.hpp"
#include "netform/graph.hpp"

namespace netform {

// Tree t-spanner question: does the connected graph g have a spanning tree in
// which every edge's endpoints are within t hops?
struct TtsInstance {
  Graph graph;
  int t = 4;

  TtsInstance(Graph graph, int t);
};

// BRN instance answering "yes" exactly when the tree 4-spanner instance does:
// reference = g, b = (3, 2, 2, 2, 0, ...), c = 2 and threshold
// r = (n-1)(b(1)-c) + (|E|-n+1) b(2). Requires t = 4 and n >= 6.
BrnInstance brn_instance_from_tts(const TtsInstance& instance);

// Exhaustive spanning-tree search with early exit. Throws ResourceError if
// the tree cap is reached first.
bool tts_decision(const TtsInstance& instance, std::uint64_t tree_cap = kSpanningTreeCap);

// The first spanning tree (lexicographic) that is a t-spanner, if any.
std::optional<Graph> find_tree_spanner(const TtsInstance& instance, std::uint64_t tree_cap = kSpanningTreeCap);

struct ReductionReport {
  bool tts = false;
  bool brn = false;
  bool agree = false;
  // Optimal BRN graph when it reaches the threshold.
  std::optional<Graph> witness;
  // Whether the witness is a spanning tree of g that is also a 4-spanner.
  bool witness_is_tree_spanner = false;
  Rational threshold;
  Rational optimum;
};

ReductionReport verify_reduction(const TtsInstance& instance, const SolverConfig& config = {},
                                 std::uint64_t tree_cap = kSpanningTreeCap);

}  // namespace netform

#endif  // NETFORM_REDUCTION_HPP
