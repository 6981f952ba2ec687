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

#ifndef WALSHFORGE_COMMANDS_HPP_
#define WALSHFORGE_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "walshforge/boolfn.hpp"
#include "walshforge/io.hpp"

namespace wf {

inline constexpr const char* kSchema = "walsh-forge/1";
inline constexpr const char* kVersion = "1.0.0";

enum class Check { kSpectrum, kAutocorr, kPredictor, kBounds, kAuxcurve, kGenus2 };

std::string to_string(Check c);
// Comma-separated names; throws UsageError for unknown ones.
std::set<Check> parse_checks(const std::string& list);

struct RunConfig {
  int m = 5;
  std::optional<std::uint64_t> modulus;
  std::optional<nlohmann::json> g;      // explicit G; otherwise drawn from seed
  std::optional<nlohmann::json> curve;  // for `curve`; otherwise drawn from seed
  int s = 0;
  std::uint64_t seed = 0;
  int count = 1;
  std::optional<std::set<Check>> checks;  // empty: every check valid for m
  std::string format = "json";
  int threads = 1;
  bool slow = false;
  bool selftest_negative = false;
};

// Deterministic body plus a metadata block (timings, thread count) that the
// determinism hash excludes.
struct Report {
  nlohmann::json body;
  nlohmann::json metadata;
  std::string csv;  // filled when format == "csv"
  int exit_code = 0;

  // FNV-1a 64 over body.dump(), as 16 hex digits.
  std::string determinism_hash() const;
  // body + {"determinism_hash", "metadata"}.
  nlohmann::json to_json() const;
  // to_json().dump(2) or csv, by format.
  std::string render(const std::string& format) const;
};

// All commands throw UsageError on invalid configuration.
Report cmd_analyze(const RunConfig& config);
Report cmd_scan(const RunConfig& config);
Report cmd_verify(const RunConfig& config);
Report cmd_curve(const RunConfig& config);

}  // namespace wf

#endif  // WALSHFORGE_COMMANDS_HPP_
