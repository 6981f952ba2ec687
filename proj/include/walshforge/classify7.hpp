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

#ifndef WALSHFORGE_CLASSIFY7_HPP_
#define WALSHFORGE_CLASSIFY7_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "walshforge/boolfn.hpp"
#include "walshforge/bounds.hpp"

namespace wf {

// Which of X_alpha in {0, 2q, 8q} a shift alpha falls into, predicted from
// trace tests alone (no summation over x).
struct AlphaClassification {
  FieldElem alpha;
  bool lambda_zero = false;  // alpha^7 = a7^-1
  FieldElem ell;             // (a7^-1 alpha^-7)^(1/3); 1 when lambda_zero
  int trace_ell = 0;
  FieldElem eta;
  std::optional<FieldElem> v;  // v + v^4 = ell, present when Tr(ell) = 0
  std::uint64_t predicted = 0;
};

// eta = 1 + a7^(1/4) alpha^(7/4) + a7^(1/2) alpha^(7/2)
//         + sum (b_i alpha^(1+2^i))^(2^-i) + sum b_i alpha^(1+2^i).
// Tr(eta) = 1 always: the Frobenius-conjugate pairs cancel under the trace.
FieldElem eta_of_alpha(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha);

enum class VChoice { kTraceZeroChain, kPlusOne };

// Trichotomy predictor for one shift (odd m):
//   lambda = 0 or Tr(ell) = 1          -> 2q
//   Tr(ell) = 0, with u + u^2 = ell, Tr(u) = 0 and v + v^2 = u:
//     Tr(eta v^3) = 1 and Tr(eta (v^2 + v)) = 1 -> 8q, otherwise 0.
// `choice` selects v or v + 1; the prediction does not depend on it.
// Throws std::invalid_argument for alpha = 0, std::logic_error for even m or
// when an Artin-Schreier step that must succeed has no solution.
AlphaClassification classify_alpha(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha,
                                   VChoice choice = VChoice::kTraceZeroChain);

struct CountsReport {
  std::uint64_t n0 = 0;  // predicted 2q
  std::uint64_t n = 0;   // predicted 8q
  std::uint64_t z = 0;   // predicted 0
  std::uint64_t lambda_zero = 0;
  std::vector<BoundCheck> bounds;
};

// Predictor over all alpha != 0, plus the N0 and N bound checks.
CountsReport count_n0_n(const FieldCtx& ctx, const TracePoly& g, int threads = 1);

// |N0 - q/2| <= 3 sqrt(q) + 1 (hard) and the strict < 3 sqrt(q) form
// (informational).
std::vector<BoundCheck> check_n0_bound(const FieldCtx& ctx, std::uint64_t n0);

// |N - q/8| <= 23 2^(s-1) sqrt(q); stated for q >= 32, informational below.
BoundCheck check_n_bound(const FieldCtx& ctx, int s, std::uint64_t n);

// |sigma - 3q^2| <= 185 2^(s-1) q^(3/2), as 4 (sigma - 3q^2)^2 <= 185^2 4^s q^3.
BoundCheck check_sigma_bound(const FieldCtx& ctx, int s, std::uint64_t sigma4);

// linf^2 >= 2q (hard for m <= 11 + 2s, informational otherwise) and, for
// m >= 15 + 2s, linf >= sqrt(2q) + 2^ceil(m/3).
std::vector<BoundCheck> check_linf_lower(const FieldCtx& ctx, int s, std::uint64_t linf);

// linf^2 <= 36 q
BoundCheck check_linf_upper(const FieldCtx& ctx, std::uint64_t linf);

// sigma = 3q^2 + 8q(N - q/8) + 2q(N0 - q/2), compared after scaling.
BoundCheck check_sigma_identity(const FieldCtx& ctx, std::uint64_t sigma4, std::uint64_t n0, std::uint64_t n);

// #{phi = psi = 0} from #{phi = 0}, #{psi = 0}, #{phi = psi} over a set of
// size `total`. Throws std::invalid_argument when the inputs are
// inconsistent (odd numerator or out of range).
std::uint64_t n_from_aux_counts(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3, std::uint64_t total);

}  // namespace wf

#endif  // WALSHFORGE_CLASSIFY7_HPP_
