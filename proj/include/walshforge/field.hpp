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

#ifndef WALSHFORGE_FIELD_HPP_
#define WALSHFORGE_FIELD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wf {

// An element of GF(2^m), stored as the bitmask of a polynomial of degree < m
// over GF(2). Addition is xor and needs no context; everything else goes
// through a FieldCtx.
struct FieldElem {
  std::uint32_t value = 0;

  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }

  friend constexpr FieldElem operator+(FieldElem x, FieldElem y) {
    return FieldElem(x.value ^ y.value);
  }
  constexpr FieldElem& operator+=(FieldElem y) {
    value ^= y.value;
    return *this;
  }
  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline constexpr FieldElem kZero{0};
inline constexpr FieldElem kOne{1};

// True when `poly` (bit i = coefficient of x^i) is irreducible over GF(2).
bool is_irreducible(std::uint64_t poly);

// Smallest irreducible polynomial of degree m, 2 <= m <= 31.
// Throws std::out_of_range otherwise.
std::uint64_t default_modulus(int m);

// "0xB" <-> 0b1011. Parsing accepts an optional 0x prefix, either case.
std::string format_hex(std::uint64_t v);
std::uint64_t parse_hex(std::string_view text);

// Immutable description of GF(2^m). Safe to share between threads.
class FieldCtx {
 public:
  // Uses default_modulus(m) when no modulus is given. Throws
  // std::invalid_argument if the modulus does not have degree m or is
  // reducible, std::out_of_range if m is outside [2, 31].
  explicit FieldCtx(int m, std::optional<std::uint64_t> modulus = std::nullopt);

  int m() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t q() const { return std::uint64_t{1} << m_; }
  std::uint64_t order() const { return q() - 1; }  // |k*|
  bool odd_degree() const { return (m_ & 1) != 0; }

  // Validates `v < q`; throws std::out_of_range otherwise.
  FieldElem elem(std::uint64_t v) const;

  FieldElem add(FieldElem x, FieldElem y) const { return x + y; }
  FieldElem mul(FieldElem x, FieldElem y) const;
  FieldElem square(FieldElem x) const { return mul(x, x); }

  // x^n. Negative n raises the inverse; exponents are reduced mod q-1 for
  // nonzero x. Throws std::domain_error for 0 raised to a negative power.
  FieldElem pow(FieldElem x, std::int64_t n) const;

  // x^(2^i); i may exceed m and is reduced mod m.
  FieldElem frobenius(FieldElem x, std::int64_t i) const;

  // Throws std::domain_error for x = 0.
  FieldElem inv(FieldElem x) const;

  // Absolute trace to GF(2): 0 or 1.
  int trace(FieldElem x) const;

  FieldElem sqrt(FieldElem x) const;

  // The unique y with y^k = x. Requires gcd(k, q-1) = 1, otherwise throws
  // std::domain_error. Negative k is allowed.
  FieldElem kth_root(FieldElem x, std::int64_t k) const;

  // x^(num/den) with the exponent computed mod q-1. Requires
  // gcd(den, q-1) = 1. For x = 0 the exponent must reduce to a positive
  // value (returns 0) and num must be nonnegative.
  FieldElem frac_pow(FieldElem x, std::int64_t num, std::int64_t den) const;

  // Sum_{i=0}^{(m-1)/2} c^(4^i). Only meaningful for odd m.
  FieldElem half_trace(FieldElem c) const;

  // A root u of u^2 + u = c; the other is u + 1. Empty when Tr(c) = 1.
  // Requires odd m (throws std::logic_error otherwise).
  std::optional<FieldElem> solve_artin_schreier(FieldElem c) const;

 private:
  int m_;
  std::uint64_t modulus_;
  std::uint32_t trace_mask_;  // Tr(x) = parity(x & trace_mask_)
};

// Inverse of a modulo n (n > 1); throws std::domain_error when gcd != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

}  // namespace wf

#endif  // WALSHFORGE_FIELD_HPP_
