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
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "walshforge/rng.hpp"

namespace wf {
namespace {

FieldElem E(std::uint32_t v) { return FieldElem(v); }

// Q(x) = Tr(a x^5 + b x^3 + c x) written out with pow; Tr(c^2 x^2) = Tr(c x).
int q_direct(const FieldCtx& f, const QuinticCurve& c, FieldElem x) {
  return f.trace(f.mul(c.a, f.pow(x, 5)) + f.mul(c.b, f.pow(x, 3)) + f.mul(c.c, x));
}

int polar(const FieldCtx& f, const QuinticCurve& c, FieldElem x, FieldElem y) {
  return q_direct(f, c, x + y) ^ q_direct(f, c, x) ^ q_direct(f, c, y);
}

// {x : B(x, y) = 0 for every y}, by exhaustive search.
std::set<FieldElem> brute_radical(const FieldCtx& f, const QuinticCurve& c) {
  std::set<FieldElem> out;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    bool in = true;
    for (std::uint32_t y = 0; y < f.q() && in; ++y) in = polar(f, c, E(x), E(y)) == 0;
    if (in) out.insert(E(x));
  }
  return out;
}

// Affine solutions of y^2 + y = f(x), enumerating both coordinates.
std::int64_t brute_count(const FieldCtx& f, const QuinticCurve& c) {
  std::int64_t n = 1;  // the point at infinity
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const FieldElem X(x);
    const FieldElem rhs = f.mul(c.a, f.pow(X, 5)) + f.mul(c.b, f.pow(X, 3)) + f.mul(c.c, X) + c.d;
    for (std::uint32_t y = 0; y < f.q(); ++y) n += f.square(E(y)) + E(y) == rhs;
  }
  return n;
}

QuinticCurve random_nonzero_a(const FieldCtx& f, SplitMix64& rng) {
  QuinticCurve c = random_curve(f, rng);
  if (c.a.is_zero()) c.a = kOne;
  return c;
}

TEST(Genus2Test, SmallCurveOverF8) {
  FieldCtx f(3);
  const QuinticCurve c{kOne, kZero, kZero, kZero};
  const SymplecticData d = classify(f, c);
  EXPECT_EQ(d.w, 1);
  const auto elems = d.elements();
  EXPECT_EQ(std::set<FieldElem>(elems.begin(), elems.end()), (std::set<FieldElem>{kZero, kOne}));
  EXPECT_EQ(d.q_on_basis, std::vector<int>{1});
  EXPECT_FALSE(d.v_equals_w);
  EXPECT_EQ(d.predicted_counts, std::vector<std::int64_t>{9});
  EXPECT_EQ(count_points(f, c), 9);
  EXPECT_EQ(brute_count(f, c), 9);
}

TEST(Genus2Test, DegenerateRightHandSide) {
  for (int m : {3, 4, 5}) {
    FieldCtx f(m);
    const auto q = static_cast<std::int64_t>(f.q());
    EXPECT_EQ(count_points(f, QuinticCurve{}), 2 * q + 1);
    // y^2 + y = 1 has no solution exactly when Tr(1) = m mod 2 = 1.
    EXPECT_EQ(count_points(f, QuinticCurve{kZero, kZero, kZero, kOne}), m % 2 ? 1 : 2 * q + 1);
  }
}

TEST(Genus2Test, CountMatchesTwoVariableEnumeration) {
  SplitMix64 rng(31);
  for (int m : {3, 5, 6, 7}) {
    FieldCtx f(m);
    for (int i = 0; i < 20; ++i) {
      const QuinticCurve c = random_curve(f, rng);
      ASSERT_EQ(count_points(f, c), brute_count(f, c));
    }
  }
}

// B(x, y) = Tr(y E(x)^(1/4)): the polar form factors through E.
TEST(Genus2Test, PolarFormFactorsThroughE) {
  for (int m : {3, 4, 5}) {
    FieldCtx f(m);
    for (std::uint32_t a = 1; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        const QuinticCurve c{E(a), E(b), kZero, kZero};
        for (std::uint32_t x = 0; x < f.q(); ++x) {
          const FieldElem r = f.sqrt(f.sqrt(e_poly(f, E(a), E(b), E(x))));
          for (std::uint32_t y = 0; y < f.q(); ++y)
            ASSERT_EQ(polar(f, c, E(x), E(y)), f.trace(f.mul(E(y), r)));
        }
      }
  }
  SplitMix64 rng(32);
  for (int draw = 0; draw < 10000; ++draw) {
    static const FieldCtx fields[] = {FieldCtx(7), FieldCtx(9), FieldCtx(11), FieldCtx(13)};
    const FieldCtx& f = fields[draw % 4];
    const QuinticCurve c = random_nonzero_a(f, rng);
    const FieldElem x(static_cast<std::uint32_t>(rng.below(f.q()))), y(static_cast<std::uint32_t>(rng.below(f.q())));
    const FieldElem r = f.sqrt(f.sqrt(e_poly(f, c.a, c.b, x)));
    ASSERT_EQ(polar(f, c, x, y), f.trace(f.mul(y, r)));
    ASSERT_EQ(q_form(f, c, x), q_direct(f, c, x));
  }
}

// E(x) = x P(x) (1 + x^5 P(x)) with P = a^2 x^5 + b^2 x + a.
TEST(Genus2Test, EFactorization) {
  auto check = [](const FieldCtx& f, FieldElem a, FieldElem b, FieldElem x) {
    const FieldElem p = f.mul(f.square(a), f.pow(x, 5)) + f.mul(f.square(b), x) + a;
    ASSERT_EQ(p_poly(f, a, b, x), p);
    ASSERT_EQ(e_poly(f, a, b, x), f.mul(f.mul(x, p), kOne + f.mul(f.pow(x, 5), p)));
  };
  for (int m : {2, 3, 4, 5}) {
    FieldCtx f(m);
    for (std::uint32_t a = 1; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b)
        for (std::uint32_t x = 0; x < f.q(); ++x) check(f, E(a), E(b), E(x));
  }
  SplitMix64 rng(38);
  for (int draw = 0; draw < 10000; ++draw) {
    static const FieldCtx fields[] = {FieldCtx(7), FieldCtx(9), FieldCtx(11), FieldCtx(13)};
    const FieldCtx& f = fields[draw % 4];
    check(f, E(static_cast<std::uint32_t>(1 + rng.below(f.q() - 1))), E(static_cast<std::uint32_t>(rng.below(f.q()))),
          E(static_cast<std::uint32_t>(rng.below(f.q()))));
  }
}

TEST(Genus2Test, EIsAdditive) {
  FieldCtx f(9);
  SplitMix64 rng(33);
  for (int i = 0; i < 2000; ++i) {
    const FieldElem a(static_cast<std::uint32_t>(1 + rng.below(f.q() - 1)));
    const FieldElem b(static_cast<std::uint32_t>(rng.below(f.q())));
    const FieldElem x(static_cast<std::uint32_t>(rng.below(f.q()))), y(static_cast<std::uint32_t>(rng.below(f.q())));
    ASSERT_EQ(e_poly(f, a, b, x + y), e_poly(f, a, b, x) + e_poly(f, a, b, y));
  }
  EXPECT_THROW(e_poly(f, kZero, kOne, kOne), std::invalid_argument);
}

TEST(Genus2Test, RadicalMatchesExhaustiveSearch) {
  SplitMix64 rng(34);
  for (int m : {3, 4, 5, 6, 7}) {
    FieldCtx f(m);
    for (int i = 0; i < 25; ++i) {
      const QuinticCurve c = random_nonzero_a(f, rng);
      const SymplecticData d = radical(f, c);
      const auto elems = d.elements();
      const std::set<FieldElem> got(elems.begin(), elems.end());
      ASSERT_EQ(got.size(), elems.size()) << "basis is not independent";
      ASSERT_EQ(got, brute_radical(f, c));
      for (auto e : elems) ASSERT_TRUE(e_poly(f, c.a, c.b, e).is_zero());
    }
  }
}

TEST(Genus2Test, PredictionContainsCount) {
  for (int m : {5, 7, 9}) {
    FieldCtx f(m);
    SplitMix64 rng(static_cast<std::uint64_t>(m) * 1000);
    for (int i = 0; i < 1000; ++i) {
      const QuinticCurve c = random_nonzero_a(f, rng);
      const SymplecticData d = classify(f, c);
      ASSERT_EQ(d.w % 2, m % 2);
      ASSERT_TRUE(std::binary_search(d.predicted_counts.begin(), d.predicted_counts.end(), count_points(f, c)));
    }
  }
}

TEST(Genus2Test, NormalizationPreservesCountAndEqualizes) {
  FieldCtx f(7);
  SplitMix64 rng(35);
  for (int i = 0; i < 200; ++i) {
    const QuinticCurve c = random_nonzero_a(f, rng);
    const NormalizedCurve n = normalize_ab(f, c);
    if (!c.b.is_zero()) EXPECT_EQ(n.curve.a, n.curve.b);
    EXPECT_EQ(count_points(f, n.curve), count_points(f, c));
    EXPECT_EQ(radical(f, n.curve).w, radical(f, c).w);
  }
}

// The criterion applies when a = b and P has a root in k. Roots are found
// here by scanning all of k, not through W.
TEST(Genus2Test, MaisnerNartAgreesWithRadical) {
  for (int m : {5, 7, 9}) {
    FieldCtx f(m);
    SplitMix64 rng(36 + static_cast<std::uint64_t>(m));
    int applicable = 0;
    for (int i = 0; i < 300; ++i) {
      const NormalizedCurve n = normalize_ab(f, random_nonzero_a(f, rng));
      std::vector<FieldElem> roots;
      for (std::uint32_t x = 0; x < f.q(); ++x)
        if (p_poly(f, n.curve.a, n.curve.b, E(x)).is_zero()) roots.push_back(E(x));
      ASSERT_EQ(p_roots(f, n.curve), roots);
      if (roots.empty()) continue;
      ++applicable;
      const int w = radical(f, n.curve).w;
      ASSERT_EQ(static_cast<int>(roots.size()), w);  // one root and w = 1, or three and w = 3
      for (auto z : roots) {
        const MaisnerNart mn = maisner_nart_w(f, n.curve, z);
        ASSERT_EQ(mn.w, w);
        if (!n.curve.b.is_zero()) ASSERT_EQ(f.pow(mn.ell, 3), kOne + f.pow(z, -4));
      }
    }
    EXPECT_GT(applicable, 50) << "m=" << m;
  }
}

// Curves coming from G(x + alpha) + G(x) always meet the hypothesis.
TEST(Genus2Test, DifferenceCurvesAlwaysHaveARoot) {
  FieldCtx f(7);
  SplitMix64 rng(37);
  for (int i = 0; i < 5; ++i) {
    const TracePoly g = random_trace_poly(f, 3, rng);
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      const QuinticCurve c = reduce_difference(f, g, E(a));
      const NormalizedCurve n = normalize_ab(f, c);
      const auto roots = p_roots(f, n.curve);
      ASSERT_FALSE(roots.empty());
      ASSERT_EQ(maisner_nart_w(f, n.curve, roots.front()).w, radical(f, c).w);
    }
  }
}

TEST(Genus2Test, MaisnerNartBranchesAndErrors) {
  FieldCtx f(5);
  // b = 0: P = a^2 x^5 + a has the root a^(-1/5); W is one-dimensional.
  const QuinticCurve c{E(3), kZero, E(7), kOne};
  const FieldElem z = f.frac_pow(E(3), -1, 5);
  EXPECT_EQ(maisner_nart_w(f, c, z).w, 1);
  EXPECT_EQ(radical(f, c).w, 1);
  EXPECT_THROW(maisner_nart_w(f, c, z + kOne), std::invalid_argument);
  EXPECT_THROW(maisner_nart_w(f, QuinticCurve{E(3), E(5), kZero, kZero}, kOne), std::invalid_argument);
  EXPECT_THROW(maisner_nart_w(FieldCtx(6), QuinticCurve{kOne, kOne, kZero, kZero}, kOne), std::logic_error);
  EXPECT_THROW(radical(f, QuinticCurve{}), std::invalid_argument);
}

}  // namespace
}  // namespace wf
