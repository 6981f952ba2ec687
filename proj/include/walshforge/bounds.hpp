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

#ifndef WALSHFORGE_BOUNDS_HPP_
#define WALSHFORGE_BOUNDS_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wf {

using BigInt = boost::multiprecision::cpp_int;

// One inequality or identity, with both sides as exact integers after the
// scaling and squaring that removes square roots. `hard` checks decide the
// exit status; the others are informational.
struct BoundCheck {
  std::string name;
  std::string lhs;
  std::string relation;  // "<=", "<", ">=", "=="
  std::string rhs;
  bool pass = false;
  bool hard = true;
  std::string note;
};

// deviation <= slack + coeff * sqrt(q), decided as
// max(deviation - slack, 0)^2 <= coeff^2 q (strict: <).
BoundCheck sqrt_bound(std::string name, const BigInt& deviation, const BigInt& slack, const BigInt& coeff,
                      const BigInt& q, bool strict = false);

BoundCheck equality_check(std::string name, const BigInt& lhs, const BigInt& rhs);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace wf

#endif  // WALSHFORGE_BOUNDS_HPP_
