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

#ifndef WALSHFORGE_AUTOCORR_HPP_
#define WALSHFORGE_AUTOCORR_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "walshforge/boolfn.hpp"

namespace wf {

// Signed autocorrelation sums S_alpha = sum_x (-1)^Tr(G(x) + G(x + alpha))
// for every alpha != 0; X_alpha = S_alpha^2.
class XAlphaTable {
 public:
  XAlphaTable(std::uint64_t q, std::vector<std::int64_t> signed_sums);

  std::uint64_t q() const { return q_; }
  // Number of entries, q - 1.
  std::size_t size() const { return sums_.size() - 1; }
  std::int64_t signed_sum(FieldElem alpha) const { return sums_.at(alpha.value); }
  std::uint64_t x_alpha(FieldElem alpha) const;

  // q^2 + sum_{alpha != 0} X_alpha
  std::uint64_t sigma4() const;

 private:
  std::uint64_t q_;
  std::vector<std::int64_t> sums_;  // index alpha; slot 0 unused
};

// Signed sum for one shift, by direct summation over x. Throws
// std::invalid_argument for alpha = 0.
std::int64_t autocorrelation_sum(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha);

// X_alpha for one shift.
std::uint64_t x_alpha(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha);

// The full table. Work is split over alpha; the result does not depend on
// `threads`.
XAlphaTable x_alpha_all(const FieldCtx& ctx, const TracePoly& g, int threads = 1);

struct SigmaDecomposition {
  std::uint64_t n0 = 0;  // #{alpha : X_alpha = 2q}
  std::uint64_t n = 0;   // #{alpha : X_alpha = 8q}
  std::uint64_t z = 0;   // #{alpha : X_alpha = 0}
};

class TrichotomyViolation : public std::runtime_error {
 public:
  TrichotomyViolation(FieldElem alpha, std::uint64_t value);
  FieldElem alpha() const { return alpha_; }
  std::uint64_t value() const { return value_; }

 private:
  FieldElem alpha_;
  std::uint64_t value_;
};

// Partitions the table by X_alpha in {0, 2q, 8q}. Throws TrichotomyViolation
// naming the first alpha whose value is outside that set.
SigmaDecomposition sigma_decomposition(const XAlphaTable& table);

// "alpha,x_alpha" rows sorted by alpha.
void write_x_alpha_csv(std::ostream& out, const XAlphaTable& table);

}  // namespace wf

#endif  // WALSHFORGE_AUTOCORR_HPP_
