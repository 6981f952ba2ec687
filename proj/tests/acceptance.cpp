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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact (integer or field equality);
// no tolerances are involved.
//
// Corpus seeds: the G-corpus for field degree m is
//   corpus_poly(ctx, s = i % 4, seed = kCorpusSeed + m, index = i),
// i = 0 .. kCorpusSize - 1, so every s in {0,1,2,3} appears 13 times.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "walshforge/autocorr.hpp"
#include "walshforge/auxcurve.hpp"
#include "walshforge/boolfn.hpp"
#include "walshforge/classify7.hpp"
#include "walshforge/commands.hpp"
#include "walshforge/genus2.hpp"
#include "walshforge/rng.hpp"
#include "walshforge/spectrum.hpp"

namespace {

using namespace wf;

constexpr std::uint64_t kCorpusSeed = 0x5EED2026;
constexpr int kCorpusSize = 52;
constexpr std::uint64_t kBoundSeed = 0xB0D5;
constexpr int kBoundCorpusSize = 20;
constexpr std::uint64_t kCurveSeed = 0xC0B7E;
constexpr std::uint64_t kAuxSeed = 0xA0C5;
constexpr int kAuxCorpusSize = 10;

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t warnings = 0;
  std::string detail;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    pass = false;
    if (first_failure.empty()) first_failure = what;
  }
  void warn(bool ok) { warnings += !ok; }
};

std::string where(int m, int index, const TracePoly& g) {
  return "m=" + std::to_string(m) + " G#" + std::to_string(index) + " s=" + std::to_string(g.s());
}

// Everything the corpus criteria need for one G, computed once.
struct Analysis {
  int m = 0;
  int index = 0;
  TracePoly g;
  std::uint64_t sigma_spectrum = 0;
  std::uint64_t sigma_autocorr = 0;
  std::uint64_t linf = 0;
  DivisibilityReport div;
  bool trichotomy = true;
  std::uint64_t mismatches = 0;
  SigmaDecomposition brute;
  CountsReport predicted;
};

Analysis analyze_one(const FieldCtx& ctx, int index, const TracePoly& g) {
  Analysis a{ctx.m(), index, g};
  const WalshSpectrum spec = fwht(truth_table(ctx, g));
  a.sigma_spectrum = l4_fourth(spec);
  a.linf = linf(spec);
  a.div = divisibility_check(spec, binary_degree(g));
  const XAlphaTable table = x_alpha_all(ctx, g);
  a.sigma_autocorr = table.sigma4();
  try {
    a.brute = sigma_decomposition(table);
  } catch (const TrichotomyViolation&) {
    a.trichotomy = false;
  }
  for (std::uint64_t v = 1; v < ctx.q(); ++v) {
    const FieldElem alpha(static_cast<std::uint32_t>(v));
    a.mismatches += classify_alpha(ctx, g, alpha).predicted != table.x_alpha(alpha);
  }
  a.predicted = count_n0_n(ctx, g);
  return a;
}

void report(const Criterion& c) {
  std::printf("criterion %2d: %s  %s  [%llu cases", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(),
              static_cast<unsigned long long>(c.cases));
  if (c.failures) std::printf(", %llu failed", static_cast<unsigned long long>(c.failures));
  if (c.warnings) std::printf(", %llu warnings", static_cast<unsigned long long>(c.warnings));
  std::printf("]");
  if (!c.detail.empty()) std::printf(" %s", c.detail.c_str());
  if (!c.first_failure.empty()) std::printf(" first failure: %s", c.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  auto finish = [&](Criterion c) {
    report(c);
    results.push_back(std::move(c));
  };

  // Shared corpus for m in {5, 7, 9, 11}.
  std::vector<Analysis> corpus;
  double seconds_m11 = 0;
  for (int m : {5, 7, 9, 11}) {
    const FieldCtx ctx(m);
    const Clock clock;
    for (int i = 0; i < kCorpusSize; ++i)
      corpus.push_back(analyze_one(ctx, i, corpus_poly(ctx, i % 4, kCorpusSeed + m, static_cast<std::uint64_t>(i))));
    if (m == 11) seconds_m11 = clock.seconds();
  }

  // Bound corpus for m in {9, 11, 13}, s in {0, 1, 2}: spectrum only.
  struct SpectrumRow {
    int m;
    int index;
    TracePoly g;
    std::uint64_t sigma;
    std::uint64_t linf;
    DivisibilityReport div;
  };
  std::vector<SpectrumRow> bound_corpus;
  for (int m : {9, 11, 13}) {
    const FieldCtx ctx(m);
    for (int s : {0, 1, 2})
      for (int i = 0; i < kBoundCorpusSize; ++i) {
        const TracePoly g = corpus_poly(ctx, s, kBoundSeed + static_cast<std::uint64_t>(16 * m + s),
                                        static_cast<std::uint64_t>(i));
        const WalshSpectrum spec = fwht(truth_table(ctx, g));
        bound_corpus.push_back({m, i, g, l4_fourth(spec), linf(spec), divisibility_check(spec, binary_degree(g))});
      }
  }

  {
    Criterion c{1, "sigma on both paths: q^2 + sum X_alpha = (1/q) sum W^4"};
    for (const auto& a : corpus)
      c.expect(a.sigma_autocorr == a.sigma_spectrum, where(a.m, a.index, a.g) + " sigma " +
                                                         std::to_string(a.sigma_autocorr) + " vs " +
                                                         std::to_string(a.sigma_spectrum));
    c.expect(seconds_m11 < 60.0, "m=11 corpus took " + std::to_string(seconds_m11) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "(m=11 corpus %.2f s, limit 60 s)", seconds_m11);
    c.detail = buf;
    finish(std::move(c));
  }

  {
    Criterion c{2, "X_alpha in {0, 2q, 8q} for every alpha"};
    for (const auto& a : corpus) c.expect(a.trichotomy, where(a.m, a.index, a.g));
    finish(std::move(c));
  }

  {
    Criterion c{3, "predicted X_alpha equals brute-force X_alpha"};
    std::uint64_t pairs = 0;
    for (const auto& a : corpus) {
      pairs += (std::uint64_t{1} << a.m) - 1;
      c.expect(a.mismatches == 0, where(a.m, a.index, a.g) + " " + std::to_string(a.mismatches) + " mismatches");
    }
    c.detail = "(" + std::to_string(pairs) + " (G, alpha) pairs)";
    finish(std::move(c));
  }

  {
    Criterion c{4, "4 (sigma - 3q^2)^2 <= 185^2 4^s q^3, m in {9,11,13}, s in {0,1,2}"};
    for (const auto& r : bound_corpus)
      c.expect(check_sigma_bound(FieldCtx(r.m), r.g.s(), r.sigma).pass, where(r.m, r.index, r.g));
    finish(std::move(c));
  }

  {
    Criterion c{5, "linf^2 <= 36q and 2^ceil(m/3) divides linf"};
    auto one = [&](int m, int index, const TracePoly& g, std::uint64_t li, const DivisibilityReport& d) {
      c.expect(check_linf_upper(FieldCtx(m), li).pass, where(m, index, g) + " linf " + std::to_string(li));
      c.expect(d.divides && d.divisor == (std::uint64_t{1} << ((m + 2) / 3)), where(m, index, g) + " divisibility");
    };
    for (const auto& a : corpus) one(a.m, a.index, a.g, a.linf, a.div);
    for (const auto& r : bound_corpus) one(r.m, r.index, r.g, r.linf, r.div);
    finish(std::move(c));
  }

  {
    Criterion c{6, "linf^2 >= 2q (odd m 5..13) and linf >= 2^8 + 2^5 at m = 15, s = 0"};
    auto first = [&](int m, int index, const TracePoly& g, std::uint64_t li) {
      const BoundCheck b = check_linf_lower(FieldCtx(m), g.s(), li)[0];
      if (b.hard)
        c.expect(b.pass, where(m, index, g) + " linf " + std::to_string(li));
      else
        c.warn(b.pass);
    };
    for (const auto& a : corpus) first(a.m, a.index, a.g, a.linf);
    for (const auto& r : bound_corpus)
      if (r.m == 13) first(r.m, r.index, r.g, r.linf);

    const Clock clock;
    const FieldCtx ctx(15);
    std::uint64_t min_linf = ~std::uint64_t{0};
    for (int i = 0; i < 4; ++i) {
      const TracePoly g = corpus_poly(ctx, 0, kCorpusSeed + 15, static_cast<std::uint64_t>(i));
      const WalshSpectrum spec = fwht(truth_table(ctx, g));
      const std::uint64_t li = linf(spec);
      min_linf = std::min(min_linf, li);
      const auto checks = check_linf_lower(ctx, 0, li);
      c.expect(checks.size() == 2 && checks[1].pass, where(15, i, g) + " linf " + std::to_string(li));
      if (i == 0) {
        // Full-alpha verification for one G: predictor against brute force,
        // and sigma on both paths.
        const XAlphaTable table = x_alpha_all(ctx, g);
        std::uint64_t mismatches = 0;
        for (std::uint64_t v = 1; v < ctx.q(); ++v) {
          const FieldElem alpha(static_cast<std::uint32_t>(v));
          mismatches += classify_alpha(ctx, g, alpha).predicted != table.x_alpha(alpha);
        }
        c.expect(mismatches == 0, where(15, i, g) + " " + std::to_string(mismatches) + " predictor mismatches");
        c.expect(table.sigma4() == l4_fourth(spec), where(15, i, g) + " sigma paths differ");
      }
    }
    const double secs = clock.seconds();
    c.expect(secs < 1800.0, "m=15 suite took " + std::to_string(secs) + " s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "(m=15 min linf %llu >= 288, %.2f s)", static_cast<unsigned long long>(min_linf),
                  secs);
    c.detail = buf;
    finish(std::move(c));
  }

  {
    Criterion c{7, "genus-2 count in predicted set, w = m mod 2, E = x P (1 + x^5 P)"};
    for (int m : {5, 7, 9}) {
      const FieldCtx ctx(m);
      SplitMix64 rng(kCurveSeed + static_cast<std::uint64_t>(m));
      for (int i = 0; i < 1000; ++i) {
        QuinticCurve curve = random_curve(ctx, rng);
        if (curve.a.is_zero()) curve.a = kOne;
        const SymplecticData d = classify(ctx, curve);
        const std::int64_t n = count_points(ctx, curve);
        const std::string at = "m=" + std::to_string(m) + " curve#" + std::to_string(i);
        c.expect(std::find(d.predicted_counts.begin(), d.predicted_counts.end(), n) != d.predicted_counts.end(),
                 at + " count " + std::to_string(n));
        c.expect(d.w % 2 == m % 2, at + " w " + std::to_string(d.w));
      }
    }
    SplitMix64 rng(kCurveSeed);
    const FieldCtx fields[] = {FieldCtx(5), FieldCtx(7), FieldCtx(9)};
    for (int i = 0; i < 10000; ++i) {
      const FieldCtx& ctx = fields[i % 3];
      const FieldElem a(static_cast<std::uint32_t>(1 + rng.below(ctx.q() - 1)));
      const FieldElem b(static_cast<std::uint32_t>(rng.below(ctx.q())));
      const FieldElem x(static_cast<std::uint32_t>(rng.below(ctx.q())));
      const FieldElem p = ctx.mul(ctx.square(a), ctx.pow(x, 5)) + ctx.mul(ctx.square(b), x) + a;
      const FieldElem rhs = ctx.mul(ctx.mul(x, p), kOne + ctx.mul(ctx.pow(x, 5), p));
      c.expect(e_poly(ctx, a, b, x) == rhs, "factorization at evaluation " + std::to_string(i));
    }
    finish(std::move(c));
  }

  {
    Criterion c{8, "N0 and N bounds; sigma = 3q^2 + 8q(N - q/8) + 2q(N0 - q/2)"};
    for (const auto& a : corpus) {
      const FieldCtx ctx(a.m);
      const std::string at = where(a.m, a.index, a.g);
      c.expect(a.predicted.n0 == a.brute.n0 && a.predicted.n == a.brute.n, at + " counts differ from brute force");
      c.expect(check_n0_bound(ctx, a.predicted.n0)[0].pass, at + " N0 " + std::to_string(a.predicted.n0));
      const BoundCheck nb = check_n_bound(ctx, a.g.s(), a.predicted.n);
      c.expect(nb.pass, at + " N " + std::to_string(a.predicted.n));
      c.expect(check_sigma_identity(ctx, a.sigma_spectrum, a.predicted.n0, a.predicted.n).pass, at + " identity");
    }
    finish(std::move(c));
  }

  {
    Criterion c{9, "auxiliary curve: #C = S7 + q + 1, S7^2 <= 36q, N1/N2/N3 bounds, assembled N"};
    for (int m : {7, 9, 11}) {
      const FieldCtx ctx(m);
      for (int s : {2, 3})
        for (int i = 0; i < kAuxCorpusSize; ++i) {
          const TracePoly g = corpus_poly(ctx, s, kAuxSeed + static_cast<std::uint64_t>(16 * m + s),
                                          static_cast<std::uint64_t>(i));
          const std::string at = where(m, i, g);
          const FieldElem gamma = aux_gamma(ctx, g);
          const AuxCurvePoints pts = enumerate_points(ctx, gamma);
          const std::int64_t s7 = s7_sum(ctx, gamma);
          c.expect(pts.count_total == s7 + static_cast<std::int64_t>(ctx.q()) + 1, at + " #C");
          c.expect(static_cast<std::uint64_t>(s7 * s7) <= 36 * ctx.q(), at + " S7 " + std::to_string(s7));
          const N123Report r = count_n123(ctx, g, pts);
          c.expect(r.bounds_applicable && r.bounds.size() == 3, at + " bounds not evaluated");
          for (const auto& b : r.bounds) c.expect(b.pass, at + " " + b.name);
          c.expect(r.n == count_n0_n(ctx, g).n, at + " assembled N " + std::to_string(r.n));
        }
    }
    finish(std::move(c));
  }

  {
    Criterion c{10, "cmd_verify report hash independent of --threads"};
    RunConfig cfg;
    cfg.m = 9;
    cfg.s = 2;
    cfg.count = 3;
    cfg.seed = 2026;
    std::vector<std::string> hashes;
    for (int threads : {1, 4, 1}) {
      cfg.threads = threads;
      const Report r = cmd_verify(cfg);
      c.expect(r.exit_code == 0, "verify exit code " + std::to_string(r.exit_code));
      hashes.push_back(r.determinism_hash());
    }
    c.expect(hashes[0] == hashes[1] && hashes[1] == hashes[2], "hashes " + hashes[0] + " " + hashes[1] + " " + hashes[2]);
    c.detail = "(hash " + hashes[0] + ")";
    finish(std::move(c));
  }

  int failed = 0;
  for (const auto& c : results) failed += !c.pass;
  std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
