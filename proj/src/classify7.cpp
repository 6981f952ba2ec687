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

#include "walshforge/classify7.hpp"

#include <stdexcept>
#include <string>

#include "walshforge/parallel.hpp"

namespace wf {

FieldElem eta_of_alpha(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("eta_of_alpha: alpha must be nonzero");
  const FieldElem a7 = g.a7();
  // a7 alpha^7 and its square roots.
  const FieldElem t = ctx.mul(a7, ctx.pow(alpha, 7));
  const FieldElem t_half = ctx.sqrt(t);
  FieldElem eta = kOne + t_half + ctx.sqrt(t_half);
  const auto& b = g.b();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i);
    const FieldElem term = ctx.mul(b[i], ctx.mul(alpha, ctx.frobenius(alpha, k)));
    eta += term + ctx.frobenius(term, -k);
  }
  return eta;
}

AlphaClassification classify_alpha(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha, VChoice choice) {
  if (alpha.is_zero()) throw std::invalid_argument("classify_alpha: alpha must be nonzero");
  if (!ctx.odd_degree()) throw std::logic_error("classify_alpha: m must be odd");
  const std::uint64_t q = ctx.q();

  AlphaClassification r;
  r.alpha = alpha;
  r.eta = eta_of_alpha(ctx, g, alpha);
  const FieldElem e = ctx.mul(g.a7(), ctx.pow(alpha, 7));  // inverse of a7^-1 alpha^-7
  if (e == kOne) {
    r.lambda_zero = true;
    r.ell = kOne;
    r.trace_ell = 1;
    r.predicted = 2 * q;
    return r;
  }
  r.ell = ctx.kth_root(ctx.inv(e), 3);
  r.trace_ell = ctx.trace(r.ell);
  if (r.trace_ell == 1) {
    r.predicted = 2 * q;
    return r;
  }

  auto u = ctx.solve_artin_schreier(r.ell);
  if (!u) throw std::logic_error("classify_alpha: u + u^2 = ell has no root although Tr(ell) = 0");
  if (ctx.trace(*u) != 0) *u += kOne;
  auto v = ctx.solve_artin_schreier(*u);
  if (!v) throw std::logic_error("classify_alpha: v + v^2 = u has no root although Tr(u) = 0");
  if (choice == VChoice::kPlusOne) *v += kOne;
  r.v = v;

  const FieldElem v2 = ctx.square(*v);
  const FieldElem v3 = ctx.mul(v2, *v);
  const bool both = ctx.trace(ctx.mul(r.eta, v3)) == 1 && ctx.trace(ctx.mul(r.eta, v2 + *v)) == 1;
  r.predicted = both ? 8 * q : 0;
  return r;
}

CountsReport count_n0_n(const FieldCtx& ctx, const TracePoly& g, int threads) {
  const std::uint64_t q = ctx.q();
  std::vector<std::uint64_t> predicted(q, 0);
  std::vector<std::uint8_t> lambda_zero(q, 0);
  parallel_for(q - 1, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto c = classify_alpha(ctx, g, FieldElem(static_cast<std::uint32_t>(i + 1)));
      predicted[i + 1] = c.predicted;
      lambda_zero[i + 1] = c.lambda_zero;
    }
  });
  CountsReport r;
  for (std::uint64_t a = 1; a < q; ++a) {
    if (predicted[a] == 2 * q)
      ++r.n0;
    else if (predicted[a] == 8 * q)
      ++r.n;
    else
      ++r.z;
    r.lambda_zero += lambda_zero[a];
  }
  r.bounds = check_n0_bound(ctx, r.n0);
  r.bounds.push_back(check_n_bound(ctx, g.s(), r.n));
  return r;
}

std::vector<BoundCheck> check_n0_bound(const FieldCtx& ctx, std::uint64_t n0) {
  // |N0 - q/2| <= 3 sqrt(q) + 1  <=>  |2 N0 - q| <= 2 + 6 sqrt(q)
  const BigInt q = ctx.q();
  BigInt dev = 2 * BigInt(n0) - q;
  if (dev < 0) dev = -dev;
  auto weak = sqrt_bound("|N0 - q/2| <= 3 sqrt(q) + 1", dev, 2, 6, q);
  auto strict = sqrt_bound("strict |N0 - q/2| < 3 sqrt(q)", dev, 0, 6, q, true);
  strict.hard = false;
  return {weak, strict};
}

BoundCheck check_n_bound(const FieldCtx& ctx, int s, std::uint64_t n) {
  // |N - q/8| <= 23 2^(s-1) sqrt(q)  <=>  |8N - q| <= 92 2^s sqrt(q)
  const BigInt q = ctx.q();
  BigInt dev = 8 * BigInt(n) - q;
  if (dev < 0) dev = -dev;
  auto c = sqrt_bound("|N - q/8| <= 23 2^(s-1) sqrt(q)", dev, 0, BigInt(92) << s, q);
  if (ctx.q() < 32) {
    c.hard = false;
    c.note = "stated for q >= 32";
  }
  return c;
}

BoundCheck check_sigma_bound(const FieldCtx& ctx, int s, std::uint64_t sigma4) {
  const BigInt q = ctx.q();
  const BigInt dev = BigInt(sigma4) - 3 * q * q;
  const BigInt lhs = 4 * dev * dev;
  const BigInt rhs = BigInt(185 * 185) * (BigInt(1) << (2 * s)) * q * q * q;
  BoundCheck c;
  c.name = "|sigma - 3q^2| <= 185 2^(s-1) q^(3/2)";
  c.lhs = to_string(lhs);
  c.relation = "<=";
  c.rhs = to_string(rhs);
  c.pass = lhs <= rhs;
  return c;
}

std::vector<BoundCheck> check_linf_lower(const FieldCtx& ctx, int s, std::uint64_t linf) {
  const BigInt q = ctx.q();
  const int m = ctx.m();
  std::vector<BoundCheck> out;

  BoundCheck first;
  first.name = "linf >= sqrt(2q)";
  first.lhs = to_string(BigInt(linf) * linf);
  first.relation = ">=";
  first.rhs = to_string(2 * q);
  first.pass = BigInt(linf) * linf >= 2 * q;
  if (m > 11 + 2 * s) {
    first.hard = false;
    first.note = "outside m <= 11 + 2s";
  }
  out.push_back(first);

  if (m >= 15 + 2 * s) {
    // (linf - t) |linf - t| >= 2q keeps the sign of linf - t.
    const BigInt t = BigInt(1) << ((m + 2) / 3);
    const BigInt diff = BigInt(linf) - t;
    const BigInt signed_sq = diff * (diff < 0 ? BigInt(-diff) : diff);
    BoundCheck second;
    second.name = "linf >= sqrt(2q) + 2^ceil(m/3)";
    second.lhs = to_string(signed_sq);
    second.relation = ">=";
    second.rhs = to_string(2 * q);
    second.pass = signed_sq >= 2 * q;
    out.push_back(second);
  }
  return out;
}

BoundCheck check_linf_upper(const FieldCtx& ctx, std::uint64_t linf) {
  BoundCheck c;
  c.name = "linf <= 6 sqrt(q)";
  c.lhs = to_string(BigInt(linf) * linf);
  c.relation = "<=";
  c.rhs = to_string(36 * BigInt(ctx.q()));
  c.pass = BigInt(linf) * linf <= 36 * BigInt(ctx.q());
  return c;
}

BoundCheck check_sigma_identity(const FieldCtx& ctx, std::uint64_t sigma4, std::uint64_t n0, std::uint64_t n) {
  // 3q^2 + 8q(N - q/8) + 2q(N0 - q/2) = q^2 + 8qN + 2qN0
  const BigInt q = ctx.q();
  return equality_check("sigma = 3q^2 + 8q(N - q/8) + 2q(N0 - q/2)", BigInt(sigma4),
                        3 * q * q + 8 * q * BigInt(n) - q * q + 2 * q * BigInt(n0) - q * q);
}

std::uint64_t n_from_aux_counts(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3, std::uint64_t total) {
  if (n1 > total || n2 > total || n3 > total)
    throw std::invalid_argument("n_from_aux_counts: count exceeds the set size");
  const std::uint64_t sum = n1 + n2 + n3;
  if (sum < total || (sum - total) % 2 != 0)
    throw std::invalid_argument("n_from_aux_counts: inconsistent counts (" + std::to_string(n1) + ", " +
                                std::to_string(n2) + ", " + std::to_string(n3) + ", " + std::to_string(total) + ")");
  return (sum - total) / 2;
}

}  // namespace wf
