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

#include "walshforge/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "walshforge/autocorr.hpp"
#include "walshforge/auxcurve.hpp"
#include "walshforge/classify7.hpp"
#include "walshforge/genus2.hpp"
#include "walshforge/parallel.hpp"
#include "walshforge/rng.hpp"
#include "walshforge/spectrum.hpp"

namespace wf {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedMismatches = 20;

const std::vector<std::pair<Check, const char*>> kCheckNames = {
    {Check::kSpectrum, "spectrum"}, {Check::kAutocorr, "autocorr"}, {Check::kPredictor, "predictor"},
    {Check::kBounds, "bounds"},     {Check::kAuxcurve, "auxcurve"}, {Check::kGenus2, "genus2"},
};

bool needs_odd_m(Check c) { return c == Check::kPredictor || c == Check::kBounds || c == Check::kAuxcurve; }

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

FieldCtx make_ctx(const RunConfig& config) {
  try {
    return FieldCtx(config.m, config.modulus);
  } catch (const std::exception& e) {
    throw UsageError(std::string("field: ") + e.what());
  }
}

std::set<Check> resolve_checks(const RunConfig& config, const FieldCtx& ctx, std::set<Check> defaults) {
  std::set<Check> checks = config.checks.value_or(defaults);
  for (Check c : checks)
    if (needs_odd_m(c) && !ctx.odd_degree()) {
      if (config.checks) throw UsageError("check '" + to_string(c) + "' requires odd m");
    }
  if (!ctx.odd_degree()) std::erase_if(checks, needs_odd_m);
  return checks;
}

void validate_common(const RunConfig& config) {
  if (config.count < 1) throw UsageError("--count must be at least 1");
  if (config.s < 0 || config.s > 62) throw UsageError("--s must lie in [0, 62]");
  if (config.threads < 1) throw UsageError("--threads must be at least 1");
  if (config.format != "json" && config.format != "csv") throw UsageError("--format must be json or csv");
}

std::vector<TracePoly> corpus(const RunConfig& config, const FieldCtx& ctx) {
  if (config.g) return {trace_poly_from_json(ctx, *config.g)};
  std::vector<TracePoly> out;
  for (int i = 0; i < config.count; ++i)
    out.push_back(corpus_poly(ctx, config.s, config.seed, static_cast<std::uint64_t>(i)));
  return out;
}

json config_echo(const RunConfig& config, const FieldCtx& ctx, const std::set<Check>& checks) {
  json c = {{"m", ctx.m()}, {"modulus", format_hex(ctx.modulus())}, {"s", config.s},
            {"count", config.count}, {"slow", config.slow}};
  json names = json::array();
  for (Check k : checks) names.push_back(to_string(k));
  c["checks"] = names;
  if (config.g) c["g"] = *config.g;
  return c;
}

json header(const std::string& command, const RunConfig& config) {
  return {{"schema", kSchema}, {"tool", "walsh-forge"}, {"version", kVersion}, {"command", command},
          {"seed", config.seed}};
}

struct Tally {
  std::uint64_t hard = 0, hard_failed = 0, warnings = 0;

  void add(const BoundCheck& c) {
    if (c.hard) {
      ++hard;
      if (!c.pass) ++hard_failed;
    } else if (!c.pass) {
      ++warnings;
    }
  }
  json to_json() const { return {{"hard_checks", hard}, {"hard_failures", hard_failed}, {"warnings", warnings}}; }
};

BoundCheck count_check(std::string name, std::uint64_t failures) {
  return equality_check(std::move(name), BigInt(failures), BigInt(0));
}

// Everything we know how to compute for one G.
struct Evaluation {
  json record;
  std::vector<BoundCheck> checks;
  json timing = json::object();
  std::vector<std::uint64_t> x_alpha;  // index alpha; empty unless autocorr ran
};

Evaluation evaluate(const FieldCtx& ctx, const TracePoly& g, const std::set<Check>& checks, int threads,
                    bool negative) {
  const std::uint64_t q = ctx.q();
  Evaluation ev;
  ev.record["g"] = to_json(g);
  ev.record["binary_degree"] = binary_degree(g);

  std::optional<WalshSpectrum> spectrum;
  std::optional<std::uint64_t> sigma;
  const bool want_spectrum = checks.contains(Check::kSpectrum) || checks.contains(Check::kBounds);
  if (want_spectrum) {
    Stopwatch sw;
    spectrum = fwht(truth_table(ctx, g));
    const std::uint64_t li = linf(*spectrum);
    sigma = l4_fourth(*spectrum);
    const auto div = divisibility_check(*spectrum, binary_degree(g));
    const bool parseval = l2_squared_sum(*spectrum) == q * q;
    ev.record["spectrum"] = {{"linf", li},
                             {"nl", nonlinearity(*spectrum)},
                             {"sigma4", *sigma},
                             {"parseval_ok", parseval},
                             {"divisibility_ok", div.divides},
                             {"divisor", div.divisor},
                             {"every_value_divisible", div.every_value_divides}};
    ev.checks.push_back(equality_check("parseval sum f^(v)^2 = q^2", l2_squared_sum(*spectrum), BigInt(q) * q));
    BoundCheck d;
    d.name = "2^ceil(m/d) divides linf";
    d.lhs = std::to_string(li % div.divisor);
    d.relation = "==";
    d.rhs = "0";
    d.pass = div.divides;
    ev.checks.push_back(d);
    BoundCheck upper;
    upper.name = "sigma <= q linf^2";
    upper.lhs = std::to_string(*sigma);
    upper.relation = "<=";
    upper.rhs = to_string(BigInt(q) * li * li);
    upper.pass = BigInt(*sigma) <= BigInt(q) * li * li;
    ev.checks.push_back(upper);
    if (ctx.odd_degree()) {
      BoundCheck lower;
      lower.name = "sigma > q^2 (no bent functions for odd m)";
      lower.lhs = std::to_string(*sigma);
      lower.relation = ">";
      lower.rhs = std::to_string(q * q);
      lower.pass = *sigma > q * q;
      ev.checks.push_back(lower);
    }
    ev.timing["spectrum"] = sw.ms();
  }

  std::optional<SigmaDecomposition> decomposition;
  if (checks.contains(Check::kAutocorr)) {
    Stopwatch sw;
    const XAlphaTable table = x_alpha_all(ctx, g, threads);
    ev.x_alpha.assign(q, 0);
    for (std::uint64_t a = 1; a < q; ++a) ev.x_alpha[a] = table.x_alpha(FieldElem(static_cast<std::uint32_t>(a)));
    json section = {{"sigma4_autocorr", table.sigma4()}};
    if (spectrum) {
      section["sigma4_spectrum"] = *sigma;
      section["match"] = *sigma == table.sigma4();
      ev.checks.push_back(equality_check("q^2 + sum X_alpha = sigma (spectrum)", table.sigma4(), *sigma));
    } else {
      sigma = table.sigma4();
    }
    if (ctx.odd_degree()) {
      try {
        decomposition = sigma_decomposition(table);
        section["N0"] = decomposition->n0;
        section["N"] = decomposition->n;
        section["Z"] = decomposition->z;
        ev.checks.push_back(count_check("trichotomy X_alpha in {0, 2q, 8q}", 0));
        ev.checks.push_back(check_sigma_identity(ctx, table.sigma4(), decomposition->n0, decomposition->n));
      } catch (const TrichotomyViolation& e) {
        section["violation"] = {{"alpha", e.alpha().value}, {"x_alpha", e.value()}};
        ev.checks.push_back(count_check("trichotomy X_alpha in {0, 2q, 8q}", 1));
      }
    }
    ev.record["autocorr"] = section;
    ev.timing["autocorr"] = sw.ms();
  }

  std::optional<std::uint64_t> predicted_n;
  if (checks.contains(Check::kPredictor)) {
    Stopwatch sw;
    std::vector<AlphaClassification> cls(q);
    parallel_for(q - 1, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        cls[i + 1] = classify_alpha(ctx, g, FieldElem(static_cast<std::uint32_t>(i + 1)));
    });
    if (negative) cls[1].predicted = cls[1].predicted == 0 ? 2 * q : 0;

    std::uint64_t n0 = 0, n = 0, z = 0, lambda_zero = 0;
    for (std::uint64_t a = 1; a < q; ++a) {
      if (cls[a].predicted == 2 * q) ++n0;
      else if (cls[a].predicted == 8 * q) ++n;
      else ++z;
      lambda_zero += cls[a].lambda_zero;
    }
    predicted_n = n;
    json section = {{"N0", n0}, {"N", n}, {"Z", z}, {"lambda_zero", lambda_zero}};

    const bool three_divides_m = ctx.m() % 3 == 0;
    BoundCheck lz;
    lz.name = three_divides_m ? "lambda = 0 shifts in {0, 7}" : "exactly one lambda = 0 shift";
    lz.lhs = std::to_string(lambda_zero);
    lz.relation = three_divides_m ? "in" : "==";
    lz.rhs = three_divides_m ? "{0,7}" : "1";
    lz.pass = three_divides_m ? (lambda_zero == 0 || lambda_zero == 7) : lambda_zero == 1;
    ev.checks.push_back(lz);

    if (!ev.x_alpha.empty()) {
      std::uint64_t mismatches = 0;
      json listed = json::array();
      for (std::uint64_t a = 1; a < q; ++a) {
        if (cls[a].predicted == ev.x_alpha[a]) continue;
        ++mismatches;
        if (listed.size() < kMaxListedMismatches)
          listed.push_back({{"alpha", a}, {"predicted", cls[a].predicted}, {"measured", ev.x_alpha[a]}});
      }
      section["agreement"] = {{"alphas", q - 1}, {"mismatches", mismatches}, {"listed", listed}};
      ev.checks.push_back(count_check("predictor = brute-force X_alpha for every alpha", mismatches));
    }
    if (decomposition) {
      ev.checks.push_back(equality_check("predicted N0 = counted N0", n0, decomposition->n0));
      ev.checks.push_back(equality_check("predicted N = counted N", n, decomposition->n));
    }
    for (auto& c : check_n0_bound(ctx, n0)) ev.checks.push_back(c);
    ev.checks.push_back(check_n_bound(ctx, g.s(), n));
    ev.record["predictor"] = section;
    ev.timing["predictor"] = sw.ms();
  }

  if (checks.contains(Check::kBounds)) {
    const std::uint64_t li = linf(*spectrum);
    ev.checks.push_back(check_sigma_bound(ctx, g.s(), *sigma));
    for (auto& c : check_linf_lower(ctx, g.s(), li)) ev.checks.push_back(c);
    ev.checks.push_back(check_linf_upper(ctx, li));
  }

  if (checks.contains(Check::kAuxcurve)) {
    Stopwatch sw;
    const FieldElem gamma = aux_gamma(ctx, g);
    const auto points = enumerate_points(ctx, gamma);
    const std::int64_t s7 = s7_sum(ctx, gamma);
    const auto n123 = count_n123(ctx, g, points);
    ev.checks.push_back(equality_check("#C = S7 + q + 1", BigInt(points.count_total), BigInt(s7) + q + 1));
    BoundCheck weil;
    weil.name = "|S7| <= 6 sqrt(q)";
    weil.lhs = to_string(BigInt(s7) * s7);
    weil.relation = "<=";
    weil.rhs = to_string(36 * BigInt(q));
    weil.pass = BigInt(s7) * s7 <= 36 * BigInt(q);
    ev.checks.push_back(weil);
    for (const auto& c : n123.bounds) ev.checks.push_back(c);
    if (predicted_n) ev.checks.push_back(equality_check("aux-curve N = predictor N", n123.n, *predicted_n));
    json section = {{"gamma", format_hex(gamma.value)}, {"S7", s7},
                    {"count_total", points.count_total}, {"N1", n123.n1},
                    {"N2", n123.n2}, {"N3", n123.n3},
                    {"ground", n123.ground}, {"N_prime", n123.n_prime},
                    {"N", n123.n}, {"bounds_applicable", n123.bounds_applicable}};
    if (!n123.bounds_applicable) section["note"] = "N1/N2/N3 bound constants need s >= 2";
    ev.record["auxcurve"] = section;
    ev.timing["auxcurve"] = sw.ms();
  }

  if (checks.contains(Check::kGenus2)) {
    Stopwatch sw;
    std::vector<std::uint8_t> count_ok(q, 1), square_ok(q, 1), mn_ok(q, 1);
    std::vector<std::uint8_t> w_of(q, 0);
    parallel_for(q - 1, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const FieldElem alpha(static_cast<std::uint32_t>(i + 1));
        const QuinticCurve curve = reduce_difference(ctx, g, alpha);
        const SymplecticData d = classify(ctx, curve);
        const std::int64_t count = count_points(ctx, curve);
        const std::int64_t dev = count - static_cast<std::int64_t>(q) - 1;
        w_of[i + 1] = static_cast<std::uint8_t>(d.w);
        count_ok[i + 1] = std::binary_search(d.predicted_counts.begin(), d.predicted_counts.end(), count);
        if (!ev.x_alpha.empty()) square_ok[i + 1] = static_cast<std::uint64_t>(dev * dev) == ev.x_alpha[i + 1];
        if (ctx.odd_degree()) {
          const auto norm = normalize_ab(ctx, curve);
          const auto roots = p_roots(ctx, norm.curve);
          mn_ok[i + 1] = !roots.empty() && maisner_nart_w(ctx, norm.curve, roots.front()).w == d.w;
        }
      }
    });
    auto failures = [&](const std::vector<std::uint8_t>& ok) {
      return static_cast<std::uint64_t>(std::count(ok.begin() + 1, ok.end(), 0));
    };
    json w_hist = json::object();
    for (std::uint64_t a = 1; a < q; ++a) {
      const std::string key = std::to_string(w_of[a]);
      w_hist[key] = w_hist.value(key, 0) + 1;
    }
    ev.checks.push_back(count_check("brute count in classify prediction", failures(count_ok)));
    if (!ev.x_alpha.empty()) ev.checks.push_back(count_check("(#C1 - q - 1)^2 = X_alpha", failures(square_ok)));
    if (ctx.odd_degree()) ev.checks.push_back(count_check("Maisner-Nart w = radical w", failures(mn_ok)));
    ev.record["genus2"] = {{"w_histogram", w_hist}};
    ev.timing["genus2"] = sw.ms();
  }

  json list = json::array();
  for (const auto& c : ev.checks) list.push_back(to_json(c));
  ev.record["checks"] = list;
  return ev;
}

Report finish(json body, json metadata, const Tally& tally) {
  body["summary"] = tally.to_json();
  Report r;
  r.body = std::move(body);
  r.metadata = std::move(metadata);
  r.exit_code = tally.hard_failed == 0 ? 0 : 1;
  return r;
}

Report run_functions(const std::string& command, const RunConfig& config, std::set<Check> defaults,
                     bool single) {
  validate_common(config);
  Stopwatch total;
  const FieldCtx ctx = make_ctx(config);
  const auto checks = resolve_checks(config, ctx, std::move(defaults));
  auto polys = corpus(config, ctx);
  if (single) polys.erase(polys.begin() + 1, polys.end());

  json body = header(command, config);
  body["config"] = config_echo(config, ctx, checks);
  json functions = json::array();
  json timings = json::array();
  Tally tally;
  std::string csv;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    Evaluation ev = evaluate(ctx, polys[i], checks, config.threads, config.selftest_negative && i == 0);
    for (const auto& c : ev.checks) tally.add(c);
    ev.record["index"] = i;
    functions.push_back(std::move(ev.record));
    timings.push_back(std::move(ev.timing));
    if (config.format == "csv" && i == 0) {
      std::ostringstream out;
      if (command == "analyze") {
        write_spectrum_csv(out, fwht(truth_table(ctx, polys[0])));
      } else {
        out << "alpha,x_alpha\n";
        for (std::uint64_t a = 1; a < ev.x_alpha.size(); ++a) out << a << ',' << ev.x_alpha[a] << '\n';
      }
      csv = out.str();
    }
  }
  body["functions"] = std::move(functions);
  json metadata = {{"threads", config.threads}, {"elapsed_ms", total.ms()}, {"per_function_ms", timings}};
  Report r = finish(std::move(body), std::move(metadata), tally);
  r.csv = std::move(csv);
  return r;
}

}  // namespace

std::string to_string(Check c) {
  for (const auto& [k, name] : kCheckNames)
    if (k == c) return name;
  return "?";
}

std::set<Check> parse_checks(const std::string& list) {
  std::set<Check> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    auto it = std::find_if(kCheckNames.begin(), kCheckNames.end(), [&](const auto& p) { return item == p.second; });
    if (it == kCheckNames.end()) throw UsageError("unknown check '" + item + "'");
    out.insert(it->first);
  }
  if (out.empty()) throw UsageError("--checks needs at least one check");
  return out;
}

std::string Report::determinism_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : body.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json Report::to_json() const {
  json j = body;
  j["determinism_hash"] = determinism_hash();
  j["metadata"] = metadata;
  return j;
}

std::string Report::render(const std::string& format) const {
  if (format == "csv") return csv;
  return to_json().dump(2) + "\n";
}

Report cmd_analyze(const RunConfig& config) {
  return run_functions("analyze", config,
                       {Check::kSpectrum, Check::kAutocorr, Check::kPredictor, Check::kBounds}, true);
}

Report cmd_verify(const RunConfig& config) {
  if (config.m % 2 == 0) throw UsageError("verify requires odd m");
  if (config.format == "csv" && !config.g && config.count != 1)
    throw UsageError("csv export of X_alpha needs a single G (--g or --count 1)");
  return run_functions("verify", config,
                       {Check::kSpectrum, Check::kAutocorr, Check::kPredictor, Check::kBounds, Check::kAuxcurve,
                        Check::kGenus2},
                       false);
}

Report cmd_scan(const RunConfig& config) {
  validate_common(config);
  Stopwatch total;
  const FieldCtx ctx = make_ctx(config);
  const auto checks = resolve_checks(config, ctx, {Check::kSpectrum, Check::kBounds});
  for (Check c : checks)
    if (c != Check::kSpectrum && c != Check::kBounds)
      throw UsageError("scan supports only the spectrum and bounds checks");
  const auto polys = corpus(config, ctx);
  const std::uint64_t q = ctx.q();

  std::vector<Evaluation> evals(polys.size());
  parallel_for(polys.size(), config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) evals[i] = evaluate(ctx, polys[i], checks, 1, false);
  });

  json body = header("scan", config);
  body["config"] = config_echo(config, ctx, checks);
  json rows = json::array();
  Tally tally;
  std::uint64_t min_linf = q, max_linf = 0, min_nl = q, max_nl = 0;
  std::ostringstream csv;
  csv << "index,a7,s,linf,nl,sigma4,hard_pass\n";
  for (std::size_t i = 0; i < evals.size(); ++i) {
    bool ok = true;
    for (const auto& c : evals[i].checks) {
      tally.add(c);
      if (c.hard && !c.pass) ok = false;
    }
    const auto& sp = evals[i].record["spectrum"];
    const auto li = sp["linf"].get<std::uint64_t>(), nl = sp["nl"].get<std::uint64_t>();
    min_linf = std::min(min_linf, li);
    max_linf = std::max(max_linf, li);
    min_nl = std::min(min_nl, nl);
    max_nl = std::max(max_nl, nl);
    rows.push_back({{"index", i},  {"g", evals[i].record["g"]}, {"linf", li},   {"nl", nl},
                    {"sigma4", sp["sigma4"]}, {"hard_pass", ok}, {"checks", evals[i].record["checks"]}});
    csv << i << ',' << format_hex(polys[i].a7().value) << ',' << polys[i].s() << ',' << li << ',' << nl << ','
        << sp["sigma4"].get<std::uint64_t>() << ',' << (ok ? 1 : 0) << '\n';
  }
  // floor(6 sqrt(q)) and the smallest multiple of 2^ceil(m/3) whose square is >= 2q.
  std::uint64_t weil_cap = static_cast<std::uint64_t>(std::sqrt(36.0 * static_cast<double>(q)));
  while ((weil_cap + 1) * (weil_cap + 1) <= 36 * q) ++weil_cap;
  while (weil_cap * weil_cap > 36 * q) --weil_cap;
  const std::uint64_t grid = std::uint64_t{1} << ((ctx.m() + 2) / 3);
  std::uint64_t floor_linf = grid;
  while (floor_linf * floor_linf < 2 * q) floor_linf += grid;
  body["rows"] = rows;
  body["aggregate"] = {{"count", polys.size()},      {"min_linf", min_linf}, {"max_linf", max_linf},
                       {"min_nl", min_nl},           {"max_nl", max_nl},     {"linf_cap", weil_cap},
                       {"linf_floor", floor_linf},   {"max_linf_within_cap", max_linf <= weil_cap},
                       {"min_linf_above_floor", min_linf >= floor_linf}};
  Report r = finish(std::move(body), {{"threads", config.threads}, {"elapsed_ms", total.ms()}}, tally);
  r.csv = csv.str();
  return r;
}

Report cmd_curve(const RunConfig& config) {
  validate_common(config);
  Stopwatch total;
  const FieldCtx ctx = make_ctx(config);
  QuinticCurve curve;
  if (config.curve) {
    curve = curve_from_json(ctx, *config.curve);
  } else {
    SplitMix64 rng = SplitMix64::stream(config.seed, 0);
    curve = random_curve(ctx, rng);
  }
  const SymplecticData d = classify(ctx, curve);
  const std::int64_t count = count_points(ctx, curve);
  const bool member = std::binary_search(d.predicted_counts.begin(), d.predicted_counts.end(), count);

  json basis = json::array();
  for (auto e : d.w_basis) basis.push_back(format_hex(e.value));
  json body = header("curve", config);
  body["config"] = {{"m", ctx.m()}, {"modulus", format_hex(ctx.modulus())}};
  body["curve"] = to_json(curve);
  body["w"] = d.w;
  body["w_basis"] = basis;
  body["q_on_basis"] = d.q_on_basis;
  body["v_equals_w"] = d.v_equals_w;
  body["predicted_counts"] = d.predicted_counts;
  body["count"] = count;
  body["member"] = member;

  Tally tally;
  std::vector<BoundCheck> checks;
  BoundCheck m;
  m.name = "brute count in predicted set";
  m.lhs = std::to_string(count);
  m.relation = "in";
  json preds = d.predicted_counts;
  m.rhs = preds.dump();
  m.pass = member;
  checks.push_back(m);
  checks.push_back(equality_check("w = m (mod 2)", d.w % 2, ctx.m() % 2));
  if (ctx.odd_degree()) {
    const auto norm = normalize_ab(ctx, curve);
    const auto roots = p_roots(ctx, norm.curve);
    if (!roots.empty()) {
      const auto mn = maisner_nart_w(ctx, norm.curve, roots.front());
      body["maisner_nart"] = {{"w", mn.w}, {"ell", format_hex(mn.ell.value)}};
      checks.push_back(equality_check("Maisner-Nart w = radical w", mn.w, d.w));
    }
  }
  json list = json::array();
  for (const auto& c : checks) {
    tally.add(c);
    list.push_back(to_json(c));
  }
  body["checks"] = list;
  return finish(std::move(body), {{"elapsed_ms", total.ms()}}, tally);
}

}  // namespace wf
