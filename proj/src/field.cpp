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

#include "walshforge/field.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace wf {

namespace {

// Smallest irreducible polynomial of each degree 2..31.
constexpr std::array<std::uint64_t, 32> kDefaultModulus = {
    0,          0,          0x7,        0xb,        0x13,       0x25,
    0x43,       0x83,       0x11b,      0x203,      0x409,      0x805,
    0x1009,     0x201b,     0x4021,     0x8003,     0x1002b,    0x20009,
    0x40009,    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,
    0x100001b,  0x2000009,  0x400001b,  0x8000027,  0x10000003, 0x20000005,
    0x40000003, 0x80000009,
};

int degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

// Carry-less product of two polynomials of degree < 32.
std::uint64_t clmul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  while (y != 0) {
    if (y & 1) r ^= x;
    x <<= 1;
    y >>= 1;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = degree(p);
  while (a != 0 && degree(a) >= dp) a ^= p << (degree(a) - dp);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
  if (poly < 2) return false;
  const int n = degree(poly);
  if (n > 31) throw std::out_of_range("is_irreducible: degree above 31");
  if (n == 1) return true;
  // Ben-Or: f is irreducible iff gcd(f, x^(2^i) - x) = 1 for 1 <= i <= n/2.
  std::uint64_t power = 2;  // x
  for (int i = 1; i <= n / 2; ++i) {
    power = poly_mod(clmul(power, power), poly);
    if (poly_gcd(poly, power ^ 2) != 1) return false;
  }
  return true;
}

std::uint64_t default_modulus(int m) {
  if (m < 2 || m > 31) throw std::out_of_range("default_modulus: m must lie in [2, 31]");
  return kDefaultModulus[static_cast<std::size_t>(m)];
}

std::string format_hex(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  do {
    out.insert(out.begin(), kDigits[v & 0xf]);
    v >>= 4;
  } while (v != 0);
  return "0x" + out;
}

std::uint64_t parse_hex(std::string_view text) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("not a hexadecimal value: '" + std::string(text) + "'");
  return v;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = ((a % n) + n) % n;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    t0 -= k * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  return ((t0 % n) + n) % n;
}

FieldCtx::FieldCtx(int m, std::optional<std::uint64_t> modulus) : m_(m) {
  if (m < 2 || m > 31) throw std::out_of_range("FieldCtx: m must lie in [2, 31]");
  modulus_ = modulus.value_or(default_modulus(m));
  if (degree(modulus_) != m)
    throw std::invalid_argument("FieldCtx: modulus " + format_hex(modulus_) + " is not of degree " +
                                std::to_string(m));
  if (!is_irreducible(modulus_))
    throw std::invalid_argument("FieldCtx: modulus " + format_hex(modulus_) + " is reducible");

  // Trace is GF(2)-linear, so Tr(x) is the parity of x against the traces
  // of the power basis 1, t, ..., t^(m-1).
  trace_mask_ = 0;
  for (int i = 0; i < m_; ++i) {
    FieldElem y(std::uint32_t{1} << i), acc;
    for (int j = 0; j < m_; ++j) {
      acc += y;
      y = square(y);
    }
    if (acc.value & 1) trace_mask_ |= std::uint32_t{1} << i;
  }
}

FieldElem FieldCtx::elem(std::uint64_t v) const {
  if (v >= q()) throw std::out_of_range("field element " + format_hex(v) + " out of range");
  return FieldElem(static_cast<std::uint32_t>(v));
}

FieldElem FieldCtx::mul(FieldElem x, FieldElem y) const {
  std::uint64_t r = clmul(x.value, y.value);
  for (int d = 2 * m_ - 2; d >= m_; --d)
    if ((r >> d) & 1) r ^= modulus_ << (d - m_);
  return FieldElem(static_cast<std::uint32_t>(r));
}

FieldElem FieldCtx::pow(FieldElem x, std::int64_t n) const {
  if (x.is_zero()) {
    if (n < 0) throw std::domain_error("pow: zero has no inverse");
    return n == 0 ? kOne : kZero;
  }
  const auto ord = static_cast<std::int64_t>(order());
  std::uint64_t e = static_cast<std::uint64_t>(((n % ord) + ord) % ord);
  FieldElem r = kOne;
  while (e != 0) {
    if (e & 1) r = mul(r, x);
    x = square(x);
    e >>= 1;
  }
  return r;
}

FieldElem FieldCtx::frobenius(FieldElem x, std::int64_t i) const {
  std::int64_t k = ((i % m_) + m_) % m_;
  while (k-- > 0) x = square(x);
  return x;
}

FieldElem FieldCtx::inv(FieldElem x) const {
  if (x.is_zero()) throw std::domain_error("inv: zero has no inverse");
  return pow(x, -1);
}

int FieldCtx::trace(FieldElem x) const { return std::popcount(x.value & trace_mask_) & 1; }

FieldElem FieldCtx::sqrt(FieldElem x) const { return frobenius(x, m_ - 1); }

FieldElem FieldCtx::kth_root(FieldElem x, std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(order());
  const std::int64_t e = mod_inverse(k, ord);
  return pow(x, e);
}

FieldElem FieldCtx::frac_pow(FieldElem x, std::int64_t num, std::int64_t den) const {
  const auto ord = static_cast<std::int64_t>(order());
  if (x.is_zero()) {
    if (num < 0) throw std::domain_error("frac_pow: zero raised to a negative power");
    mod_inverse(den, ord);  // still reject a non-invertible denominator
    return num == 0 ? kOne : kZero;
  }
  const std::int64_t d = mod_inverse(den, ord);
  const std::int64_t n = ((num % ord) + ord) % ord;
  return pow(x, (n * d) % ord);
}

FieldElem FieldCtx::half_trace(FieldElem c) const {
  FieldElem acc;
  for (int i = 0; i <= (m_ - 1) / 2; ++i) {
    acc += c;
    c = square(square(c));
  }
  return acc;
}

std::optional<FieldElem> FieldCtx::solve_artin_schreier(FieldElem c) const {
  if (!odd_degree()) throw std::logic_error("solve_artin_schreier: half-trace needs odd m");
  if (trace(c) != 0) return std::nullopt;
  return half_trace(c);
}

}  // namespace wf
