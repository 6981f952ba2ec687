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

// walsh-forge: Walsh spectra, autocorrelation sums and curve counts for
// f(x) = Tr(a7 x^7 + sum b_i x^(2^i+1)) over GF(2^m).
//
// Exit status: 0 all hard checks pass, 1 a mathematical check failed,
// 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "walshforge/commands.hpp"

namespace {

constexpr int kUsageExit = 2;

void add_common(CLI::App* cmd, wf::RunConfig& cfg, std::string& modulus, std::string& out) {
  cmd->add_option("--m", cfg.m, "field degree m (GF(2^m))")->required();
  cmd->add_option("--modulus", modulus, "irreducible modulus as hex bitmask, e.g. 0x25");
  cmd->add_option("--seed", cfg.seed, "64-bit seed for generated inputs");
  cmd->add_option("--out", out, "write the report here instead of stdout");
  cmd->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", cfg.threads, "worker threads (results do not depend on it)");
}

void add_function_opts(CLI::App* cmd, wf::RunConfig& cfg, std::string& g, std::string& checks) {
  cmd->add_option("--g", g, "G as JSON: inline {...} or a file path");
  cmd->add_option("--s", cfg.s, "largest b index for generated G");
  cmd->add_option("--count", cfg.count, "number of generated G");
  cmd->add_option("--checks", checks, "comma list of spectrum,autocorr,predictor,bounds,auxcurve,genus2");
  cmd->add_flag("--slow", cfg.slow, "enable the m >= 13 suites");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walsh-forge: nonlinearity of Tr(G(x)) for binary-degree-3 G over GF(2^m)"};
  app.require_subcommand(1);

  wf::RunConfig cfg;
  std::string modulus, out, g, checks, curve;

  auto* analyze = app.add_subcommand("analyze", "spectrum, sigma on both paths, counts and bounds for one G");
  auto* scan = app.add_subcommand("scan", "spectra and bounds over a seeded corpus of G");
  auto* verify = app.add_subcommand("verify", "predictor against brute-force X_alpha, auxiliary curve bounds");
  auto* curve_cmd = app.add_subcommand("curve", "classify one curve y^2 + y = ax^5 + bx^3 + cx + d");
  for (auto* cmd : {analyze, scan, verify, curve_cmd}) add_common(cmd, cfg, modulus, out);
  for (auto* cmd : {analyze, scan, verify}) add_function_opts(cmd, cfg, g, checks);
  verify->add_flag("--selftest-negative", cfg.selftest_negative, "flip one prediction; the run must fail");
  curve_cmd->add_option("--curve", curve, "curve as JSON: inline {...} or a file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageExit;
  }

  try {
    if (!modulus.empty()) cfg.modulus = wf::parse_hex(modulus);
    if (!g.empty()) cfg.g = wf::load_json_arg(g);
    if (!curve.empty()) cfg.curve = wf::load_json_arg(curve);
    if (!checks.empty()) cfg.checks = wf::parse_checks(checks);
    if (cfg.m >= 13 && !cfg.slow && !curve_cmd->parsed())
      throw wf::UsageError("m >= 13 runs are slow; pass --slow to enable them");

    wf::Report report;
    if (analyze->parsed()) report = wf::cmd_analyze(cfg);
    if (scan->parsed()) report = wf::cmd_scan(cfg);
    if (verify->parsed()) report = wf::cmd_verify(cfg);
    if (curve_cmd->parsed()) report = wf::cmd_curve(cfg);

    const std::string text = report.render(cfg.format);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out);
      if (!file) throw wf::UsageError("cannot write '" + out + "'");
      file << text;
    }
    return report.exit_code;
  } catch (const wf::UsageError& e) {
    std::cerr << "walsh-forge: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "walsh-forge: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::out_of_range& e) {
    std::cerr << "walsh-forge: " << e.what() << '\n';
    return kUsageExit;
  }
}
