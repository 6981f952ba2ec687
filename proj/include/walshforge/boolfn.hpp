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

#ifndef WALSHFORGE_BOOLFN_HPP_
#define WALSHFORGE_BOOLFN_HPP_

#include <cstdint>
#include <vector>

#include "walshforge/field.hpp"

namespace wf {

// G = a7 x^7 + sum_{i=0}^{s} b_i x^(2^i + 1), a7 != 0. Zero b_i are allowed
// and count as absent monomials; s is the largest declared index.
class TracePoly {
 public:
  // Throws std::invalid_argument when a7 = 0 or b is empty.
  TracePoly(FieldElem a7, std::vector<FieldElem> b);

  // x^7 with b = {0}, i.e. s = 0.
  static TracePoly monomial(FieldElem a7) { return TracePoly(a7, {kZero}); }

  FieldElem a7() const { return a7_; }
  const std::vector<FieldElem>& b() const { return b_; }
  int s() const { return static_cast<int>(b_.size()) - 1; }

  // Exponents carrying a nonzero coefficient: 7 and 2^i + 1 for b_i != 0.
  std::vector<std::uint64_t> exponents() const;

  friend bool operator==(const TracePoly&, const TracePoly&) = default;

 private:
  FieldElem a7_;
  std::vector<FieldElem> b_;
};

// y^2 + y = a x^5 + b x^3 + c x + d.
struct QuinticCurve {
  FieldElem a, b, c, d;
  friend bool operator==(const QuinticCurve&, const QuinticCurve&) = default;
};

// One bit per x in [0, q), bits[x] = Tr(G(x)).
struct TruthTable {
  std::vector<std::uint8_t> bits;
  std::size_t size() const { return bits.size(); }
};

// Binary digit sum of i.
int sigma_digits(std::uint64_t i);

// max sigma_digits over exponents with nonzero coefficient.
int binary_degree(const TracePoly& g);

FieldElem eval_g(const FieldCtx& ctx, const TracePoly& g, FieldElem x);

TruthTable truth_table(const FieldCtx& ctx, const TracePoly& g);

// Coefficients of the genus-2 curve whose trace function agrees pointwise
// with x -> Tr(G(x + alpha) + G(x)):
//   a = a7 alpha^2
//   b = a7 alpha^4 + a7^(1/2) alpha^(1/2)
//   c = a7 alpha^6 + a7^(1/4) alpha^(3/4) + a7^(1/2) alpha^(5/2)
//       + sum (b_i alpha)^(2^-i) + sum b_i alpha^(2^i)
//   d = G(alpha)
// Throws std::invalid_argument for alpha = 0.
QuinticCurve reduce_difference(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha);

}  // namespace wf

#endif  // WALSHFORGE_BOOLFN_HPP_
