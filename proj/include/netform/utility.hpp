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

#ifndef NETFORM_UTILITY_HPP
#define NETFORM_UTILITY_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "netform/graph.hpp"
#include "netform/rational.hpp"

namespace netform {

// Nonincreasing, nonnegative benefit b(1..L) per hop distance together with a
// positive per-edge cost c. b(d) = 0 for unreachable pairs. Coverage of a
// particular graph size is checked by the functions that use it.
class BenefitSchedule {
 public:
  BenefitSchedule(std::vector<Rational> values, Rational cost);

  // b(hops) for 1 <= hops <= length(); 0 past the table once coverage has
  // been validated.
  const Rational& benefit(int hops) const;
  const Rational& cost() const { return cost_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t length() const { return values_.size(); }

  // b(1), b(2), reading missing entries as zero.
  Rational b1() const;
  Rational b2() const;

  // Throws DomainError unless b(1..n-1) are all present.
  void require_covers(int n) const;

  friend bool operator==(const BenefitSchedule&, const BenefitSchedule&) = default;

 private:
  std::vector<Rational> values_;
  Rational cost_;
};

enum class CostClass { kLow, kMedium, kHigh };

std::string_view to_string(CostClass c);

// Sum of b(d(i,j)) over unordered pairs i < j, minus c|E|.
Rational single_layer_utility(const Graph& g, const BenefitSchedule& s);

// Sum of b(d_g(x,y)) over the edges (x,y) of `reference`, minus c|E(g)|.
Rational conditional_utility(const Graph& g, const Graph& reference, const BenefitSchedule& s);

// LOW: b(1)-b(2) > c. HIGH: c > b(1). MEDIUM otherwise, boundaries included.
CostClass classify_cost(const BenefitSchedule& s);

struct UtilityBounds {
  Rational lower;
  Rational upper;
};

// Bracket on the best-response utility to a connected reference, valid when
// b(1)-b(2) <= c <= b(1). Throws DomainError outside that range.
UtilityBounds br_utility_bounds(const Graph& reference, const BenefitSchedule& s);

// Smallest t >= 1 with c < b(1) + (t-2)/2 * b(2), searched up to t = n.
// nullopt when no such t <= n exists. Throws DomainError unless HIGH.
std::optional<int> k_index(const BenefitSchedule& s, int n);

}  // namespace netform

#endif  // NETFORM_UTILITY_HPP
