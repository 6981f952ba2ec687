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

#ifndef WALSHFORGE_AUXCURVE_HPP_
#define WALSHFORGE_AUXCURVE_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "walshforge/boolfn.hpp"
#include "walshforge/bounds.hpp"

namespace wf {

// The curve C : v + v^4 = gamma x^7 with gamma = a7^(-1/3). Under
// alpha = x^-3 its points with x != 0 carry the solutions v of
// v + v^4 = ell(alpha).

struct AuxPoint {
  FieldElem x, v;
  friend bool operator==(const AuxPoint&, const AuxPoint&) = default;
};

struct AuxCurvePoints {
  FieldElem gamma;
  std::vector<AuxPoint> points;  // x != 0, in (v, v + 1) pairs
  // #C(k) = S7 + q + 1: the points above plus (0,0), (0,1) and infinity.
  std::int64_t count_total = 0;
};

// a7^(-1/3)
FieldElem aux_gamma(const FieldCtx& ctx, const TracePoly& g);

// S7 = sum_x (-1)^Tr(gamma x^7). Throws std::invalid_argument for gamma = 0.
std::int64_t s7_sum(const FieldCtx& ctx, FieldElem gamma);

// Both roots of v + v^4 = gamma x^7 for every x != 0 with Tr(gamma x^7) = 0.
// Requires odd m and gamma != 0.
AuxCurvePoints enumerate_points(const FieldCtx& ctx, FieldElem gamma);

// The rational functions on C whose traces equal Tr(eta v^3) and
// Tr(eta (v^2 + v)) at alpha = x^-3:
//   f = v^3 + sum (v^(3 2^i) + v^3) b_i x^(-3-3 2^i) + (v^6 + v^12) a7 x^-21
//   g = a7 gamma^2 x^-7 + sum b_i x^(-3(1+2^i)) (v^(2^(i+1)) + v^(2^i) + v^2 + v)
// Both need x != 0.
FieldElem aux_f(const FieldCtx& ctx, const TracePoly& g, FieldElem x, FieldElem v);
FieldElem aux_g(const FieldCtx& ctx, const TracePoly& g, FieldElem x, FieldElem v);

struct N123Report {
  std::uint64_t n1 = 0;      // #{Tr(eta v^3) = 1}
  std::uint64_t n2 = 0;      // #{Tr(eta (v^2 + v)) = 1}
  std::uint64_t n3 = 0;      // #{Tr(eta (v^3 + v^2 + v)) = 0}
  std::uint64_t ground = 0;  // points counted, x != 0
  std::int64_t count_total = 0;
  std::uint64_t n_prime = 0;  // both traces 1, by the inclusion-exclusion lemma
  std::uint64_t n = 0;        // n_prime / 2: one alpha per (v, v + 1) pair
  bool bounds_applicable = false;  // the constants need s >= 2
  std::vector<BoundCheck> bounds;
};

// Counts over `points` with eta = eta_of_alpha(G, x^-3), and the
//   |N_i - #C/2| <= K_i sqrt(q) / 2 + 5/2
// bounds with K_1 = 21 2^s - 21, K_2 = 7 (2^(s+1) - 1), K_3 = 35 2^s - 70.
N123Report count_n123(const FieldCtx& ctx, const TracePoly& g, const AuxCurvePoints& points);

// "x,v" rows.
void write_points_csv(std::ostream& out, const AuxCurvePoints& points);

}  // namespace wf

#endif  // WALSHFORGE_AUXCURVE_HPP_
