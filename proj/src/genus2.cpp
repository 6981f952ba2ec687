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

#include "walshforge/genus2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <stdexcept>

namespace wf {

std::vector<FieldElem> SymplecticData::elements() const {
  std::vector<FieldElem> out;
  out.reserve(std::size_t{1} << w_basis.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << w_basis.size()); ++mask) {
    FieldElem e;
    for (std::size_t i = 0; i < w_basis.size(); ++i)
      if ((mask >> i) & 1) e += w_basis[i];
    out.push_back(e);
  }
  return out;
}

int q_form(const FieldCtx& ctx, const QuinticCurve& curve, FieldElem x) {
  const FieldElem x2 = ctx.square(x);
  const FieldElem r = ctx.mul(curve.a, ctx.square(x2)) + ctx.mul(curve.b, x2) + ctx.mul(ctx.square(curve.c), x);
  return ctx.trace(ctx.mul(x, r));
}

FieldElem e_poly(const FieldCtx& ctx, FieldElem a, FieldElem b, FieldElem x) {
  if (a.is_zero()) throw std::invalid_argument("e_poly: a must be nonzero");
  const FieldElem x2 = ctx.square(x), x8 = ctx.square(ctx.square(x2)), x16 = ctx.square(x8);
  const FieldElem a4 = ctx.square(ctx.square(a)), b2 = ctx.square(b), b4 = ctx.square(b2);
  return ctx.mul(a4, x16) + ctx.mul(b4, x8) + ctx.mul(b2, x2) + ctx.mul(a, x);
}

FieldElem p_poly(const FieldCtx& ctx, FieldElem a, FieldElem b, FieldElem x) {
  return ctx.mul(ctx.square(a), ctx.pow(x, 5)) + ctx.mul(ctx.square(b), x) + a;
}

SymplecticData radical(const FieldCtx& ctx, const QuinticCurve& curve) {
  if (curve.a.is_zero()) throw std::invalid_argument("radical: a must be nonzero");
  const int m = ctx.m();

  // Column j is E(t^j). Eliminate on images while tracking which basis
  // vectors were combined; every image that reduces to zero yields a
  // kernel vector.
  struct Row {
    std::uint32_t image;
    std::uint32_t combo;
  };
  std::array<std::optional<Row>, 32> pivot{};
  SymplecticData out;
  for (int j = 0; j < m; ++j) {
    Row r{e_poly(ctx, curve.a, curve.b, FieldElem(std::uint32_t{1} << j)).value, std::uint32_t{1} << j};
    while (r.image != 0) {
      const int top = 31 - std::countl_zero(r.image);
      if (!pivot[top]) {
        pivot[top] = r;
        break;
      }
      r.image ^= pivot[top]->image;
      r.combo ^= pivot[top]->combo;
    }
    if (r.image == 0) out.w_basis.emplace_back(r.combo);
  }
  out.w = static_cast<int>(out.w_basis.size());
  out.v_equals_w = true;
  for (auto e : out.w_basis) {
    const int qv = q_form(ctx, curve, e);
    out.q_on_basis.push_back(qv);
    if (qv != 0) out.v_equals_w = false;
  }
  return out;
}

SymplecticData classify(const FieldCtx& ctx, const QuinticCurve& curve) {
  SymplecticData d = radical(ctx, curve);
  const auto base = static_cast<std::int64_t>(ctx.q()) + 1;
  if (!d.v_equals_w) {
    d.predicted_counts = {base};
    return d;
  }
  if ((d.w + ctx.m()) % 2 != 0)
    throw std::logic_error("classify: dim W and m have different parity");
  const std::int64_t root = std::int64_t{1} << ((d.w + ctx.m()) / 2);  // sqrt(2^w q)
  d.predicted_counts = {base - root, base + root};
  return d;
}

std::int64_t count_points_affine(const FieldCtx& ctx, const QuinticCurve& curve) {
  std::int64_t zeros = 0;
  for (std::uint64_t xv = 0; xv < ctx.q(); ++xv) {
    const FieldElem x(static_cast<std::uint32_t>(xv));
    const FieldElem x2 = ctx.square(x), x3 = ctx.mul(x2, x), x5 = ctx.mul(x3, x2);
    const FieldElem rhs = ctx.mul(curve.a, x5) + ctx.mul(curve.b, x3) + ctx.mul(curve.c, x) + curve.d;
    if (ctx.trace(rhs) == 0) ++zeros;
  }
  return 2 * zeros;
}

std::int64_t count_points(const FieldCtx& ctx, const QuinticCurve& curve) {
  return count_points_affine(ctx, curve) + 1;
}

NormalizedCurve normalize_ab(const FieldCtx& ctx, const QuinticCurve& curve) {
  if (curve.a.is_zero()) throw std::invalid_argument("normalize_ab: a must be nonzero");
  if (curve.b.is_zero()) return {curve, kOne};
  const FieldElem t = ctx.sqrt(ctx.mul(curve.b, ctx.inv(curve.a)));
  const FieldElem t2 = ctx.square(t), t3 = ctx.mul(t2, t);
  QuinticCurve out{ctx.mul(curve.a, ctx.mul(t3, t2)), ctx.mul(curve.b, t3), ctx.mul(curve.c, t), curve.d};
  return {out, t};
}

std::vector<FieldElem> p_roots(const FieldCtx& ctx, const QuinticCurve& curve) {
  std::vector<FieldElem> roots;
  for (auto e : radical(ctx, curve).elements())
    if (p_poly(ctx, curve.a, curve.b, e).is_zero()) roots.push_back(e);
  std::sort(roots.begin(), roots.end());
  return roots;
}

MaisnerNart maisner_nart_w(const FieldCtx& ctx, const QuinticCurve& curve, FieldElem z) {
  if (!ctx.odd_degree()) throw std::logic_error("maisner_nart_w: m must be odd");
  if (curve.a.is_zero()) throw std::invalid_argument("maisner_nart_w: a must be nonzero");
  if (!curve.b.is_zero() && curve.a != curve.b)
    throw std::invalid_argument("maisner_nart_w: needs a = b (or b = 0)");
  if (!p_poly(ctx, curve.a, curve.b, z).is_zero())
    throw std::invalid_argument("maisner_nart_w: z is not a root of P");
  if (curve.b.is_zero()) return {1, kOne};
  const FieldElem ell = ctx.kth_root(kOne + ctx.pow(z, -4), 3);
  return {ctx.trace(ell) == 0 ? 3 : 1, ell};
}

}  // namespace wf
