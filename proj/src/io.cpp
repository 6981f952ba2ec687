// Copyright 2026 The walsh-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walshforge/io.hpp"

#include <fstream>
#include <sstream>

namespace wf {

namespace {

FieldElem elem_from_json(const FieldCtx& ctx, const nlohmann::json& j, const std::string& what) {
  std::uint64_t v = 0;
  try {
    if (j.is_string())
      v = parse_hex(j.get<std::string>());
    else if (j.is_number_unsigned())
      v = j.get<std::uint64_t>();
    else
      throw UsageError(what + ": expected a hex string or a nonnegative integer");
    return ctx.elem(v);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

}  // namespace

TracePoly trace_poly_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a7")) throw UsageError("G: expected an object with an \"a7\" field");
  const FieldElem a7 = elem_from_json(ctx, j.at("a7"), "G.a7");
  if (a7.is_zero()) throw UsageError("G.a7 must be nonzero");

  std::vector<std::pair<int, FieldElem>> entries;
  int max_index = 0;
  if (j.contains("b")) {
    const auto& b = j.at("b");
    if (!b.is_object()) throw UsageError("G.b: expected an object keyed by index");
    for (const auto& [key, value] : b.items()) {
      int idx = -1;
      try {
        std::size_t used = 0;
        idx = std::stoi(key, &used);
        if (used != key.size()) idx = -1;
      } catch (const std::exception&) {
      }
      if (idx < 0 || idx > 62) throw UsageError("G.b: bad index '" + key + "'");
      entries.emplace_back(idx, elem_from_json(ctx, value, "G.b[" + key + "]"));
      max_index = std::max(max_index, idx);
    }
  }
  int s = max_index;
  if (j.contains("s")) {
    if (!j.at("s").is_number_integer() || j.at("s").get<int>() < 0 || j.at("s").get<int>() > 62)
      throw UsageError("G.s must be an integer in [0, 62]");
    s = j.at("s").get<int>();
    if (s < max_index) throw UsageError("G.s is smaller than the largest b index");
  }
  std::vector<FieldElem> coeffs(static_cast<std::size_t>(s) + 1);
  for (const auto& [idx, v] : entries) coeffs[static_cast<std::size_t>(idx)] = v;
  return TracePoly(a7, std::move(coeffs));
}

nlohmann::json to_json(const TracePoly& g) {
  nlohmann::json b = nlohmann::json::object();
  for (std::size_t i = 0; i < g.b().size(); ++i) b[std::to_string(i)] = format_hex(g.b()[i].value);
  return {{"a7", format_hex(g.a7().value)}, {"b", b}, {"s", g.s()}};
}

QuinticCurve curve_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("curve: expected an object");
  QuinticCurve c;
  for (auto [name, slot] : {std::pair{"a", &c.a}, {"b", &c.b}, {"c", &c.c}, {"d", &c.d}}) {
    if (!j.contains(name)) throw UsageError(std::string("curve: missing \"") + name + "\"");
    *slot = elem_from_json(ctx, j.at(name), std::string("curve.") + name);
  }
  if (c.a.is_zero()) throw UsageError("curve.a must be nonzero");
  return c;
}

nlohmann::json to_json(const QuinticCurve& c) {
  return {{"a", format_hex(c.a.value)}, {"b", format_hex(c.b.value)}, {"c", format_hex(c.c.value)},
          {"d", format_hex(c.d.value)}};
}

nlohmann::json to_json(const BoundCheck& c) {
  nlohmann::json j = {{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation},
                      {"rhs", c.rhs},   {"pass", c.pass}, {"hard", c.hard}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

nlohmann::json load_json_arg(const std::string& text) {
  std::string body = text;
  if (text.empty() || text.front() != '{') {
    std::ifstream in(text);
    if (!in) throw UsageError("cannot open '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace wf
