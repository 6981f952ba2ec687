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

#include "walshforge/autocorr.hpp"

#include <ostream>
#include <string>

#include "walshforge/parallel.hpp"

namespace wf {

XAlphaTable::XAlphaTable(std::uint64_t q, std::vector<std::int64_t> signed_sums)
    : q_(q), sums_(std::move(signed_sums)) {
  if (sums_.size() != q_) throw std::invalid_argument("XAlphaTable: expected one slot per field element");
}

std::uint64_t XAlphaTable::x_alpha(FieldElem alpha) const {
  const std::int64_t s = signed_sum(alpha);
  return static_cast<std::uint64_t>(s * s);
}

std::uint64_t XAlphaTable::sigma4() const {
  std::uint64_t acc = q_ * q_;
  for (std::size_t a = 1; a < sums_.size(); ++a) acc += static_cast<std::uint64_t>(sums_[a] * sums_[a]);
  return acc;
}

std::int64_t autocorrelation_sum(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("x_alpha: alpha must be nonzero");
  std::int64_t s = 0;
  for (std::uint64_t xv = 0; xv < ctx.q(); ++xv) {
    const FieldElem x(static_cast<std::uint32_t>(xv));
    s += ctx.trace(eval_g(ctx, g, x) + eval_g(ctx, g, x + alpha)) ? -1 : 1;
  }
  return s;
}

std::uint64_t x_alpha(const FieldCtx& ctx, const TracePoly& g, FieldElem alpha) {
  const std::int64_t s = autocorrelation_sum(ctx, g, alpha);
  return static_cast<std::uint64_t>(s * s);
}

XAlphaTable x_alpha_all(const FieldCtx& ctx, const TracePoly& g, int threads) {
  // Tr is additive, so Tr(G(x) + G(x + alpha)) = Tr G(x) xor Tr G(x + alpha):
  // evaluate G once per x and reuse it for every shift.
  const std::uint64_t q = ctx.q();
  std::vector<std::int8_t> chi(q);
  parallel_for(q, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x)
      chi[x] = ctx.trace(eval_g(ctx, g, FieldElem(static_cast<std::uint32_t>(x)))) ? -1 : 1;
  });
  std::vector<std::int64_t> sums(q, 0);
  parallel_for(q - 1, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t alpha = i + 1;
      std::int64_t s = 0;
      for (std::size_t x = 0; x < q; ++x) s += chi[x] * chi[x ^ alpha];
      sums[alpha] = s;
    }
  });
  return XAlphaTable(q, std::move(sums));
}

TrichotomyViolation::TrichotomyViolation(FieldElem alpha, std::uint64_t value)
    : std::runtime_error("X_alpha = " + std::to_string(value) + " at alpha = " + format_hex(alpha.value) +
                         " is outside {0, 2q, 8q}"),
      alpha_(alpha),
      value_(value) {}

SigmaDecomposition sigma_decomposition(const XAlphaTable& table) {
  const std::uint64_t q = table.q();
  SigmaDecomposition d;
  for (std::uint64_t a = 1; a < q; ++a) {
    const FieldElem alpha(static_cast<std::uint32_t>(a));
    const std::uint64_t x = table.x_alpha(alpha);
    if (x == 0)
      ++d.z;
    else if (x == 2 * q)
      ++d.n0;
    else if (x == 8 * q)
      ++d.n;
    else
      throw TrichotomyViolation(alpha, x);
  }
  return d;
}

void write_x_alpha_csv(std::ostream& out, const XAlphaTable& table) {
  out << "alpha,x_alpha\n";
  for (std::uint64_t a = 1; a < table.q(); ++a)
    out << a << ',' << table.x_alpha(FieldElem(static_cast<std::uint32_t>(a))) << '\n';
}

}  // namespace wf
