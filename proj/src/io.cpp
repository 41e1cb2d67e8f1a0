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

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "json_codec.hpp"
#include "netform/errors.hpp"
#include "netform/io.hpp"
#include "netform/rational.hpp"

namespace netform {
namespace detail {
namespace {

const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key) && j.at(key).is_object()) return j.at(key);
  return j;
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

long long integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number_float()) {
    double d = j.get<double>();
    if (d == static_cast<double>(static_cast<long long>(d))) return static_cast<long long>(d);
  }
  throw ParseError(std::string(what) + " must be an integer");
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    // Shortest round-trip text recovers the literal the author wrote.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
  }
  throw ParseError(std::string(what) + " must be a number or numeric string");
}

Graph graph_from_json(const Json& doc) {
  const Json& j = unwrap(doc, "graph");
  long long n = integer_from_json(field(j, "n", "graph"), "graph n");
  if (n < 0 || n > Graph::kMaxNodes) throw ParseError("graph n=" + std::to_string(n) + " outside 0.." + std::to_string(Graph::kMaxNodes));
  const Json& edges = field(j, "edges", "graph");
  if (!edges.is_array()) throw ParseError("graph edges must be an array");
  std::vector<Edge> list;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
    int u = static_cast<int>(integer_from_json(e[0], "edge endpoint"));
    int v = static_cast<int>(integer_from_json(e[1], "edge endpoint"));
    if (u == v) throw ParseError("self-loop at node " + std::to_string(u));
    if (u > v) throw ParseError("edge [" + std::to_string(u) + ", " + std::to_string(v) + "] must list the smaller id first");
    list.push_back({u, v});
  }
  try {
    return Graph(static_cast<int>(n), list);
  } catch (const DomainError& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

BenefitSchedule schedule_from_json(const Json& doc) {
  const Json& j = unwrap(doc, "schedule");
  const Json& values = field(j, "values", "schedule");
  if (!values.is_array()) throw ParseError("schedule values must be an array");
  std::vector<Rational> b;
  for (const Json& v : values) b.push_back(rational_from_json(v, "benefit value"));
  Rational c = rational_from_json(field(j, "cost", "schedule"), "cost");
  try {
    return BenefitSchedule(std::move(b), std::move(c));
  } catch (const DomainError& e) {
    throw ParseError(std::string("schedule: ") + e.what());
  }
}

SolverConfig config_from_json(const Json& doc) {
  const Json& j = unwrap(doc, "config");
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  SolverConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "max_n") {
      c.max_n = static_cast<int>(integer_from_json(*it, "max_n"));
    } else if (key == "max_candidates") {
      long long v = integer_from_json(*it, "max_candidates");
      if (v < 0) throw ParseError("max_candidates must be nonnegative");
      c.max_candidates = static_cast<std::uint64_t>(v);
    } else if (key == "workers") {
      c.workers = static_cast<int>(integer_from_json(*it, "workers"));
    } else if (key == "want_all") {
      if (!it->is_boolean()) throw ParseError("want_all must be a boolean");
      c.want_all = it->get<bool>();
    } else {
      throw ParseError("unknown config key \"" + key + "\"");
    }
  }
  if (c.max_n < 0) throw ParseError("max_n must be nonnegative");
  if (c.workers < 1) throw ParseError("workers must be at least 1");
  return c;
}

Scenario scenario_from_json(const Json& doc) {
  const Json& j = unwrap(doc, "scenario");
  Scenario s;
  long long n = integer_from_json(field(j, "n", "scenario"), "scenario n");
  if (n < 1 || n > Graph::kMaxNodes) throw ParseError("scenario n=" + std::to_string(n) + " outside 1.." + std::to_string(Graph::kMaxNodes));
  s.n = static_cast<int>(n);
  const Json& players = field(j, "players", "scenario");
  if (!players.is_array() || players.empty()) throw ParseError("scenario players must be a nonempty array");
  for (const Json& p : players) s.schedules.push_back(schedule_from_json(p));
  if (auto it = j.find("initial_layers"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != players.size()) {
      throw ParseError("initial_layers must list one graph per player");
    }
    std::vector<Graph> layers;
    for (const Json& g : *it) {
      layers.push_back(graph_from_json(g));
      if (layers.back().node_count() != s.n) throw ParseError("initial layer node count differs from scenario n");
    }
    s.initial_layers = std::move(layers);
  }
  return s;
}

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.node_count()}, {"edges", edges}};
}

Json to_json(const BenefitSchedule& s) {
  Json values = Json::array();
  for (const Rational& v : s.values()) values.push_back(format_rational(v));
  return {{"values", values}, {"cost", format_rational(s.cost())}};
}

Json to_json(const SolverConfig& c) {
  return {{"max_n", c.max_n}, {"max_candidates", c.max_candidates}, {"workers", c.workers}, {"want_all", c.want_all}};
}

}  // namespace detail

Graph parse_graph(std::string_view text) { return detail::graph_from_json(detail::parse_document(text)); }
BenefitSchedule parse_schedule(std::string_view text) {
  return detail::schedule_from_json(detail::parse_document(text));
}
SolverConfig parse_config(std::string_view text) { return detail::config_from_json(detail::parse_document(text)); }
Scenario parse_scenario(std::string_view text) { return detail::scenario_from_json(detail::parse_document(text)); }

std::string graph_to_json(const Graph& g) { return detail::to_json(g).dump(); }
std::string schedule_to_json(const BenefitSchedule& s) { return detail::to_json(s).dump(); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buf.str();
}

}  // namespace netform
