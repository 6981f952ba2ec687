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

#ifndef WALSHFORGE_IO_HPP_
#define WALSHFORGE_IO_HPP_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "walshforge/boolfn.hpp"
#include "walshforge/bounds.hpp"

namespace wf {

// Malformed or out-of-range input; the CLI maps it to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"a7": "0x..", "b": {"0": "0x..", "1": "0x.."}, "s": n}
// Missing b means b_0 = 0; missing s means the largest index given.
// Values may be hex strings or integers. Throws UsageError.
TracePoly trace_poly_from_json(const FieldCtx& ctx, const nlohmann::json& j);
nlohmann::json to_json(const TracePoly& g);

// {"a": "0x..", "b": "0x..", "c": "0x..", "d": "0x.."}; throws UsageError.
QuinticCurve curve_from_json(const FieldCtx& ctx, const nlohmann::json& j);
nlohmann::json to_json(const QuinticCurve& c);

nlohmann::json to_json(const BoundCheck& c);

// Parses inline JSON when `text` starts with '{', otherwise reads the file
// it names. Throws UsageError.
nlohmann::json load_json_arg(const std::string& text);

}  // namespace wf

#endif  // WALSHFORGE_IO_HPP_
