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

#ifndef WALSHFORGE_GENUS2_HPP_
#define WALSHFORGE_GENUS2_HPP_

#include <cstdint>
#include <vector>

#include "walshforge/boolfn.hpp"

namespace wf {

// Radical of the quadratic form attached to y^2 + y = ax^5 + bx^3 + cx + d
// and the point counts it allows.
struct SymplecticData {
  int w = 0;                          // dim W
  std::vector<FieldElem> w_basis;     // spans W
  std::vector<int> q_on_basis;        // Q(basis_i)
  bool v_equals_w = false;            // Q vanishes on W
  std::vector<std::int64_t> predicted_counts;  // sorted #C1(k) candidates

  // All 2^w elements of W, in the order of the binary combinations of the
  // basis.
  std::vector<FieldElem> elements() const;
};

// Q(x) = Tr(x R(x)), R(x) = a x^4 + b x^2 + c^2 x.
int q_form(const FieldCtx& ctx, const QuinticCurve& curve, FieldElem x);

// E_{a,b}(x) = a^4 x^16 + b^4 x^8 + b^2 x^2 + a x. Throws for a = 0.
FieldElem e_poly(const FieldCtx& ctx, FieldElem a, FieldElem b, FieldElem x);

// P(x) = a^2 x^5 + b^2 x + a.
FieldElem p_poly(const FieldCtx& ctx, FieldElem a, FieldElem b, FieldElem x);

// Kernel of x -> E_{a,b}(x) on k, from the m x m bit matrix of the map in
// the power basis. Also evaluates Q on the basis. predicted_counts is left
// empty; see classify. Throws std::invalid_argument for a = 0.
SymplecticData radical(const FieldCtx& ctx, const QuinticCurve& curve);

// radical() plus the admissible counts: {1 + q} when Q is nonzero on W,
// otherwise {1 + q - sqrt(2^w q), 1 + q + sqrt(2^w q)}.
SymplecticData classify(const FieldCtx& ctx, const QuinticCurve& curve);

// 2 #{x : Tr(a x^5 + b x^3 + c x + d) = 0}
std::int64_t count_points_affine(const FieldCtx& ctx, const QuinticCurve& curve);

// Affine count plus the single point at infinity.
std::int64_t count_points(const FieldCtx& ctx, const QuinticCurve& curve);

// Rescales x -> t x with t^2 = b/a so the x^5 and x^3 coefficients agree.
// Curves with b = 0 come back unchanged with t = 1. The rescaled curve has
// the same point count.
struct NormalizedCurve {
  QuinticCurve curve;
  FieldElem scale;
};
NormalizedCurve normalize_ab(const FieldCtx& ctx, const QuinticCurve& curve);

// Elements of W that are roots of P.
std::vector<FieldElem> p_roots(const FieldCtx& ctx, const QuinticCurve& curve);

struct MaisnerNart {
  int w = 0;
  FieldElem ell;
};

// For a curve with a = b and a root z of P: ell^3 = 1 + z^-4, and w = 3 when
// Tr(ell) = 0, w = 1 otherwise. Curves with b = 0 have P = a^2 x^5 + a, a
// unique root, ell = 1 and w = 1. Throws std::invalid_argument when P(z) != 0
// or when a != b with b != 0; std::logic_error for even m.
MaisnerNart maisner_nart_w(const FieldCtx& ctx, const QuinticCurve& curve, FieldElem z);

}  // namespace wf

#endif  // WALSHFORGE_GENUS2_HPP_
