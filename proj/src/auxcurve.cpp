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

#include "walshforge/auxcurve.hpp"

#include <ostream>
#include <stdexcept>

#include "walshforge/classify7.hpp"

namespace wf {

FieldElem aux_gamma(const FieldCtx& ctx, const TracePoly& g) { return ctx.frac_pow(g.a7(), -1, 3); }

std::int64_t s7_sum(const FieldCtx& ctx, FieldElem gamma) {
  if (gamma.is_zero()) throw std::invalid_argument("s7_sum: gamma must be nonzero");
  std::int64_t s = 0;
  for (std::uint64_t xv = 0; xv < ctx.q(); ++xv)
    s += ctx.trace(ctx.mul(gamma, ctx.pow(FieldElem(static_cast<std::uint32_t>(xv)), 7))) ? -1 : 1;
  return s;
}

AuxCurvePoints enumerate_points(const FieldCtx& ctx, FieldElem gamma) {
  if (gamma.is_zero()) throw std::invalid_argument("enumerate_points: gamma must be nonzero");
  if (!ctx.odd_degree()) throw std::logic_error("enumerate_points: m must be odd");
  AuxCurvePoints out;
  out.gamma = gamma;
  for (std::uint64_t xv = 1; xv < ctx.q(); ++xv) {
    const FieldElem x(static_cast<std::uint32_t>(xv));
    // v + v^4 = w + w^2 with w = v + v^2.
    auto w = ctx.solve_artin_schreier(ctx.mul(gamma, ctx.pow(x, 7)));
    if (!w) continue;
    if (ctx.trace(*w) != 0) *w += kOne;
    const auto v = ctx.solve_artin_schreier(*w);
    if (!v) throw std::logic_error("enumerate_points: trace-zero w without a root");
    out.points.push_back({x, *v});
    out.points.push_back({x, *v + kOne});
  }
  out.count_total = static_cast<std::int64_t>(out.points.size()) + 3;
  return out;
}

FieldElem aux_f(const FieldCtx& ctx, const TracePoly& g, FieldElem x, FieldElem v) {
  const FieldElem xi = ctx.inv(x);
  const FieldElem v3 = ctx.pow(v, 3);
  FieldElem f = v3;
  const auto& b = g.b();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i);
    const FieldElem x_term = ctx.mul(ctx.pow(xi, 3), ctx.pow(ctx.frobenius(xi, k), 3));  // x^(-3-3 2^i)
    f += ctx.mul(ctx.mul(ctx.frobenius(v3, k) + v3, b[i]), x_term);
  }
  f += ctx.mul(ctx.mul(ctx.pow(v, 6) + ctx.pow(v, 12), g.a7()), ctx.pow(xi, 21));
  return f;
}

FieldElem aux_g(const FieldCtx& ctx, const TracePoly& g, FieldElem x, FieldElem v) {
  const FieldElem xi = ctx.inv(x);
  const FieldElem gamma = aux_gamma(ctx, g);
  FieldElem r = ctx.mul(ctx.mul(g.a7(), ctx.square(gamma)), ctx.pow(xi, 7));
  const FieldElem u = ctx.square(v) + v;
  const auto& b = g.b();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i);
    const FieldElem x_term = ctx.pow(ctx.mul(xi, ctx.frobenius(xi, k)), 3);  // x^(-3(1+2^i))
    r += ctx.mul(ctx.mul(b[i], x_term), ctx.frobenius(u, k) + u);
  }
  return r;
}

N123Report count_n123(const FieldCtx& ctx, const TracePoly& g, const AuxCurvePoints& points) {
  N123Report r;
  r.ground = points.points.size();
  r.count_total = points.count_total;
  for (const auto& p : points.points) {
    const FieldElem alpha = ctx.pow(p.x, -3);
    const FieldElem eta = eta_of_alpha(ctx, g, alpha);
    const FieldElem v2 = ctx.square(p.v), v3 = ctx.mul(v2, p.v);
    const int t1 = ctx.trace(ctx.mul(eta, v3));
    const int t2 = ctx.trace(ctx.mul(eta, v2 + p.v));
    r.n1 += t1 == 1;
    r.n2 += t2 == 1;
    r.n3 += t1 == t2;
  }
  // phi = 1 + Tr(eta v^3), psi = 1 + Tr(eta (v^2 + v)): #{phi = 0} = n1,
  // #{psi = 0} = n2, #{phi = psi} = n3.
  r.n_prime = n_from_aux_counts(r.n1, r.n2, r.n3, r.ground);
  if (r.n_prime % 2 != 0) throw std::logic_error("count_n123: points with both traces 1 do not pair up");
  r.n = r.n_prime / 2;

  const int s = g.s();
  r.bounds_applicable = s >= 2;
  if (!r.bounds_applicable) return r;
  // |N_i - #C/2| <= K sqrt(q) / 2 + 5/2  <=>  |2 N_i - #C| <= 5 + K sqrt(q)
  const BigInt q = ctx.q(), c = r.count_total, two_s = BigInt(1) << s;
  auto dev = [&](std::uint64_t ni) {
    BigInt d = 2 * BigInt(ni) - c;
    return d < 0 ? BigInt(-d) : d;
  };
  r.bounds.push_back(sqrt_bound("aux |N1 - #C/2| <= (21 2^s - 21) sqrt(q)/2 + 5/2", dev(r.n1), 5,
                                21 * two_s - 21, q));
  r.bounds.push_back(sqrt_bound("aux |N2 - #C/2| <= 7 (2^(s+1) - 1) sqrt(q)/2 + 5/2", dev(r.n2), 5,
                                7 * (2 * two_s - 1), q));
  r.bounds.push_back(sqrt_bound("aux |N3 - #C/2| <= (35 2^s - 70) sqrt(q)/2 + 5/2", dev(r.n3), 5,
                                35 * two_s - 70, q));
  return r;
}

void write_points_csv(std::ostream& out, const AuxCurvePoints& points) {
  out << "x,v\n";
  for (const auto& p : points.points) out << p.x.value << ',' << p.v.value << '\n';
}

}  // namespace wf
