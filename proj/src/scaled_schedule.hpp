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

#ifndef NETFORM_SRC_SCALED_SCHEDULE_HPP
#define NETFORM_SRC_SCALED_SCHEDULE_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "netform/graph.hpp"
#include "netform/utility.hpp"

namespace netform::detail {

// A schedule multiplied through by the common denominator of its entries so
// that utilities of graphs up to n nodes are exact 64-bit integers. Used by
// the search loops; results are converted back with to_rational().
class ScaledSchedule {
 public:
  ScaledSchedule(const BenefitSchedule& s, int n);

  std::int64_t benefit(int hops) const { return benefit_[static_cast<std::size_t>(hops)]; }
  std::int64_t cost() const { return cost_; }
  Rational to_rational(std::int64_t scaled) const { return Rational(BigInt(scaled), scale_); }

  // Scaled conditional utility. `adj` is the candidate's adjacency and
  // `ref_later[x]` the reference neighbors of x with larger ids.
  std::int64_t utility(std::span<const NodeMask> adj, std::span<const NodeMask> ref_later,
                       std::int64_t edge_count) const {
    std::int64_t total = -cost_ * edge_count;
    for (std::size_t x = 0; x < ref_later.size(); ++x) {
      NodeMask wanted = ref_later[x];
      if (wanted == 0) continue;
      NodeMask seen = NodeMask{1} << x;
      NodeMask frontier = seen;
      for (std::size_t level = 1; wanted != 0 && frontier != 0; ++level) {
        NodeMask next = 0;
        for (NodeMask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= ~seen;
        NodeMask hit = next & wanted;
        if (hit != 0) {
          total += benefit_[level] * std::popcount(hit);
          wanted &= ~hit;
        }
        seen |= next;
        frontier = next;
      }
    }
    return total;
  }

  std::int64_t utility(const Graph& g, const Graph& reference) const;

 private:
  BigInt scale_;
  std::vector<std::int64_t> benefit_;  // index = hops, 0..n-1; [0] unused
  std::int64_t cost_ = 0;
};

std::vector<NodeMask> adjacency(const Graph& g);
std::vector<NodeMask> later_neighbors(const Graph& g);

}  // namespace netform::detail

#endif  // NETFORM_SRC_SCALED_SCHEDULE_HPP
