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

#include "netform/utility.hpp"

#include <string>

#include "netform/errors.hpp"
#include "scaled_schedule.hpp"

namespace netform {
namespace {

const Rational kZero{0};

}  // namespace

BenefitSchedule::BenefitSchedule(std::vector<Rational> values, Rational cost)
    : values_(std::move(values)), cost_(std::move(cost)) {
  if (cost_ <= 0) throw DomainError("edge cost must be positive, got " + format_rational(cost_));
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0) {
      throw DomainError("benefit b(" + std::to_string(k + 1) + ") is negative");
    }
    if (k > 0 && values_[k] > values_[k - 1]) {
      throw DomainError("benefit schedule must be nonincreasing: b(" + std::to_string(k + 1) +
                        ") > b(" + std::to_string(k) + ")");
    }
  }
}

const Rational& BenefitSchedule::benefit(int hops) const {
  if (hops < 1) throw DomainError("benefit defined for hops >= 1");
  if (static_cast<std::size_t>(hops) > values_.size()) return kZero;
  return values_[static_cast<std::size_t>(hops - 1)];
}

Rational BenefitSchedule::b1() const { return values_.empty() ? Rational(0) : values_[0]; }
Rational BenefitSchedule::b2() const { return values_.size() < 2 ? Rational(0) : values_[1]; }

void BenefitSchedule::require_covers(int n) const {
  if (n >= 2 && values_.size() < static_cast<std::size_t>(n - 1)) {
    throw DomainError("benefit schedule too short: has " + std::to_string(values_.size()) +
                      " entries, graph with n=" + std::to_string(n) + " needs " +
                      std::to_string(n - 1));
  }
}

std::string_view to_string(CostClass c) {
  switch (c) {
    case CostClass::kLow:
      return "LOW";
    case CostClass::kMedium:
      return "MEDIUM";
    case CostClass::kHigh:
      return "HIGH";
  }
  return "?";
}

Rational single_layer_utility(const Graph& g, const BenefitSchedule& s) {
  return conditional_utility(g, Graph::complete(g.node_count()), s);
}

Rational conditional_utility(const Graph& g, const Graph& reference, const BenefitSchedule& s) {
  if (g.node_count() != reference.node_count()) {
    throw DomainError("conditional_utility: node counts differ");
  }
  s.require_covers(g.node_count());
  Rational total = -s.cost() * static_cast<long long>(g.edge_count());
  int last_source = -1;
  std::vector<std::optional<int>> row;
  for (const Edge& e : reference.edges()) {
    if (e.u != last_source) {
      row = distances_from(g, e.u);
      last_source = e.u;
    }
    if (auto d = row[static_cast<std::size_t>(e.v)]) total += s.benefit(*d);
  }
  return total;
}

CostClass classify_cost(const BenefitSchedule& s) {
  const Rational b1 = s.b1();
  const Rational b2 = s.b2();
  if (b1 - b2 > s.cost()) return CostClass::kLow;
  if (s.cost() > b1) return CostClass::kHigh;
  return CostClass::kMedium;
}

UtilityBounds br_utility_bounds(const Graph& reference, const BenefitSchedule& s) {
  if (!reference.is_connected()) throw DomainError("br_utility_bounds: reference must be connected");
  const Rational b1 = s.b1();
  const Rational b2 = s.b2();
  if (!(b1 - b2 <= s.cost() && s.cost() <= b1)) {
    throw DomainError("br_utility_bounds: requires b(1)-b(2) <= c <= b(1)");
  }
  const long long n = reference.node_count();
  const long long edges = static_cast<long long>(reference.edge_count());
  return {edges * (b1 - s.cost()), (n - 1) * (b1 - s.cost()) + (edges - n + 1) * b2};
}

std::optional<int> k_index(const BenefitSchedule& s, int n) {
  if (classify_cost(s) != CostClass::kHigh) {
    throw DomainError("k_index is defined for high-cost schedules only");
  }
  for (int t = 1; t <= n; ++t) {
    if (s.cost() < s.b1() + Rational(t - 2, 2) * s.b2()) return t;
  }
  return std::nullopt;
}

namespace detail {

ScaledSchedule::ScaledSchedule(const BenefitSchedule& s, int n) {
  s.require_covers(n);
  scale_ = boost::multiprecision::denominator(s.cost());
  int top = std::max(n - 1, 0);
  for (int d = 1; d <= top; ++d) {
    BigInt den = boost::multiprecision::denominator(s.benefit(d));
    scale_ = boost::multiprecision::lcm(scale_, den);
  }
  // Utilities sum at most n(n-1)/2 benefits plus as many costs; keep each
  // scaled term well inside 2^52 so the sums stay exact.
  const BigInt limit = BigInt(1) << 52;
  auto scaled = [&](const Rational& value) {
    BigInt v = boost::multiprecision::numerator(value) * (scale_ / boost::multiprecision::denominator(value));
    if (v >= limit) {
      throw DomainError("schedule values too large or too finely divided for exact 64-bit evaluation");
    }
    return static_cast<std::int64_t>(v);
  };
  benefit_.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (int d = 1; d <= top; ++d) benefit_[static_cast<std::size_t>(d)] = scaled(s.benefit(d));
  cost_ = scaled(s.cost());
}

std::int64_t ScaledSchedule::utility(const Graph& g, const Graph& reference) const {
  auto adj = adjacency(g);
  auto later = later_neighbors(reference);
  return utility(adj, later, static_cast<std::int64_t>(g.edge_count()));
}

std::vector<NodeMask> adjacency(const Graph& g) {
  std::vector<NodeMask> adj(static_cast<std::size_t>(g.node_count()));
  for (int u = 0; u < g.node_count(); ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
  return adj;
}

std::vector<NodeMask> later_neighbors(const Graph& g) {
  std::vector<NodeMask> out(static_cast<std::size_t>(g.node_count()));
  for (int u = 0; u < g.node_count(); ++u) {
    NodeMask above = u + 1 >= 64 ? 0 : ~((NodeMask{1} << (u + 1)) - 1);
    out[static_cast<std::size_t>(u)] = g.neighbors(u) & above;
  }
  return out;
}

}  // namespace detail
}  // namespace netform
