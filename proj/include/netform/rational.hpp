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

#ifndef NETFORM_RATIONAL_HPP
#define NETFORM_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace netform {

// Exact arbitrary-precision rational. Every utility, cost and threshold in the
// library is carried in this type; regime boundaries are equality-sensitive.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "3", "-2", "1.01", "2.5e-3", "27/40". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// Canonical rendering: an exact decimal when the reduced denominator has no
// prime factors other than 2 and 5 ("0.64", "-3", "0.125"), otherwise "p/q".
std::string format_rational(const Rational& value);

}  // namespace netform

#endif  // NETFORM_RATIONAL_HPP
