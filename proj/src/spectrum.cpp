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

#include "walshforge/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace wf {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

WalshSpectrum fwht(const TruthTable& table) {
  const std::size_t n = table.size();
  if (n < 2 || !std::has_single_bit(n))
    throw std::invalid_argument("fwht: table length must be a power of two");
  WalshSpectrum s;
  s.values.resize(n);
  for (std::size_t x = 0; x < n; ++x) s.values[x] = table.bits[x] ? -1 : 1;
  auto& v = s.values;
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = v[j], w = v[j + h];
        v[j] = u + w;
        v[j + h] = u - w;
      }
    }
  }
  return s;
}

std::uint64_t linf(const WalshSpectrum& spec) {
  std::uint64_t best = 0;
  for (auto x : spec.values) best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::abs(x)));
  return best;
}

std::uint64_t l4_fourth(const WalshSpectrum& spec) {
  u128 acc = 0;
  for (auto x : spec.values) {
    const auto sq = static_cast<std::uint64_t>(std::int64_t{x} * x);
    acc += static_cast<u128>(sq) * sq;
  }
  return static_cast<std::uint64_t>(acc / spec.q());
}

std::uint64_t l2_squared_sum(const WalshSpectrum& spec) {
  std::uint64_t acc = 0;
  for (auto x : spec.values) acc += static_cast<std::uint64_t>(std::int64_t{x} * x);
  return acc;
}

std::uint64_t nonlinearity(const WalshSpectrum& spec) { return spec.q() / 2 - linf(spec) / 2; }

DivisibilityReport divisibility_check(const WalshSpectrum& spec, int binary_degree) {
  if (binary_degree < 1) throw std::invalid_argument("divisibility_check: degree must be >= 1");
  const int m = std::countr_zero(spec.q());
  const int e = (m + binary_degree - 1) / binary_degree;
  DivisibilityReport r;
  r.degree = binary_degree;
  r.divisor = std::uint64_t{1} << e;
  r.linf = linf(spec);
  r.divides = r.linf % r.divisor == 0;
  r.every_value_divides = std::all_of(spec.values.begin(), spec.values.end(), [&](std::int32_t x) {
    return static_cast<std::uint64_t>(std::abs(x)) % r.divisor == 0;
  });
  return r;
}

void write_spectrum_csv(std::ostream& out, const WalshSpectrum& spec) {
  out << "v,value\n";
  for (std::size_t v = 0; v < spec.values.size(); ++v) out << v << ',' << spec.values[v] << '\n';
}

}  // namespace wf
