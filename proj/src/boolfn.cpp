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

#include "walshforge/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wf {

TracePoly::TracePoly(FieldElem a7, std::vector<FieldElem> b) : a7_(a7), b_(std::move(b)) {
  if (a7_.is_zero()) throw std::invalid_argument("TracePoly: a7 must be nonzero");
  if (b_.empty()) throw std::invalid_argument("TracePoly: b must declare at least b_0");
  if (b_.size() > 63) throw std::invalid_argument("TracePoly: s must be below 63");
}

std::vector<std::uint64_t> TracePoly::exponents() const {
  std::vector<std::uint64_t> e{7};
  for (std::size_t i = 0; i < b_.size(); ++i)
    if (!b_[i].is_zero()) e.push_back((std::uint64_t{1} << i) + 1);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

int sigma_digits(std::uint64_t i) { return std::popcount(i); }

int binary_degree(const TracePoly& g) {
  int d = 0;
  for (auto e : g.exponents()) d = std::max(d, sigma_digits(e));
  return d;
}

FieldElem eval_g(const FieldCtx& ctx, const TracePoly& g, FieldElem x) {
  const FieldElem x2 = ctx.square(x);
  const FieldElem x3 = ctx.mul(x2, x);
  const FieldElem x7 = ctx.mul(ctx.square(x3), x);
  FieldElem r = ctx.mul(g.a7(), x7);
  const auto& b = g.b();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero()) continue;
    r += ctx.mul(b[i], ctx.mul(ctx.frobenius(x, static_cast<std::int64_t>(i)), x));
  }
  return r;
}

TruthTable truth_table(const FieldCtx& ctx, const TracePoly& g) {
  TruthTable t;
  t.bits.resize(ctx.q());
  for (std::uint64_t x = 0; x < ctx.q(); ++x)
    t.bits[x] = static_cast<std::uint8_t>(ctx.trace(eval_g(ctx, g, FieldElem(static_cast<std::uint32_t>(x)))));
  return t;
}

QuinticCurve reduce_difference(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("reduce_difference: alpha must be nonzero");
  const FieldElem a7 = g.a7();
  const FieldElem a7_half = ctx.sqrt(a7);
  const FieldElem a7_quarter = ctx.sqrt(a7_half);

  QuinticCurve out;
  out.a = ctx.mul(a7, ctx.pow(alpha, 2));
  out.b = ctx.mul(a7, ctx.pow(alpha, 4)) + ctx.mul(a7_half, ctx.frac_pow(alpha, 1, 2));
  FieldElem c = ctx.mul(a7, ctx.pow(alpha, 6)) + ctx.mul(a7_quarter, ctx.frac_pow(alpha, 3, 4)) +
                ctx.mul(a7_half, ctx.frac_pow(alpha, 5, 2));
  const auto& b = g.b();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i);
    c += ctx.frobenius(ctx.mul(b[i], alpha), -k);
    c += ctx.mul(b[i], ctx.frobenius(alpha, k));
  }
  out.c = c;
  out.d = eval_g(ctx, g, alpha);
  return out;
}

}  // namespace wf
