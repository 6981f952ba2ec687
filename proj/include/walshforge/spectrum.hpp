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

#ifndef WALSHFORGE_SPECTRUM_HPP_
#define WALSHFORGE_SPECTRUM_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "walshforge/boolfn.hpp"

namespace wf {

// values[v] = sum_x (-1)^(f(x) + v.x), v.x the parity of v & x.
struct WalshSpectrum {
  std::vector<std::int32_t> values;
  std::uint64_t q() const { return values.size(); }
};

// In-place butterfly, O(q log q). Throws std::invalid_argument if the table
// length is not a power of two (>= 2).
WalshSpectrum fwht(const TruthTable& table);

// max_v |f^(v)|
std::uint64_t linf(const WalshSpectrum& spec);

// sigma_f = (1/q) sum_v f^(v)^4; exact.
std::uint64_t l4_fourth(const WalshSpectrum& spec);

// sum_v f^(v)^2; equals q^2 for any Boolean function.
std::uint64_t l2_squared_sum(const WalshSpectrum& spec);

std::uint64_t nonlinearity(const WalshSpectrum& spec);

struct DivisibilityReport {
  int degree = 0;
  std::uint64_t divisor = 0;  // 2^ceil(m/d)
  std::uint64_t linf = 0;
  bool divides = false;
  bool every_value_divides = false;  // informational
};

// Checks that 2^ceil(m/d) divides linf(spec). Throws for d < 1.
DivisibilityReport divisibility_check(const WalshSpectrum& spec, int binary_degree);

// "v,value" rows with a header line.
void write_spectrum_csv(std::ostream& out, const WalshSpectrum& spec);

}  // namespace wf

#endif  // WALSHFORGE_SPECTRUM_HPP_
