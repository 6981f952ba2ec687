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

#include "walshforge/bounds.hpp"

namespace wf {

BoundCheck sqrt_bound(std::string name, const BigInt& deviation, const BigInt& slack, const BigInt& coeff,
                      const BigInt& q, bool strict) {
  const BigInt excess = deviation > slack ? BigInt(deviation - slack) : BigInt(0);
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = to_string(excess * excess);
  c.rhs = to_string(coeff * coeff * q);
  c.relation = strict ? "<" : "<=";
  c.pass = strict ? excess * excess < coeff * coeff * q : excess * excess <= coeff * coeff * q;
  return c;
}

BoundCheck equality_check(std::string name, const BigInt& lhs, const BigInt& rhs) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = to_string(lhs);
  c.rhs = to_string(rhs);
  c.relation = "==";
  c.pass = lhs == rhs;
  return c;
}

}  // namespace wf
