// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// fermicorr command-line driver.
//
// Exit status: 0 success, 1 a check failed (verify-wick), 2 bad input or
// usage, 3 numerical validation error.

#include "fermicorr/fermicorr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace fermicorr;
using nlohmann::json;

struct GlobalFlags {
  std::string base = "2";
  double tol = default_tol;
  double zero_threshold = default_zero_threshold;
  std::string entropy_convention = "normalized";
  bool json = false;
};

std::string fmt(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string units(LogBase base) { return base == LogBase::two ? "bits" : "nats"; }

json to_json(const RVector& v) {
  json arr = json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

void emit_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

json corr_json(const CorrResult& r) {
  return json{{"corr", r.corr},
              {"overlap", r.overlap},
              {"fidelity", r.fidelity},
              {"base", std::string(to_string(r.base))},
              {"lambda", to_json(r.lambda)},
              {"entropy_normalized", r.entropy},
              {"entropy_raw", r.entropy_raw},
              {"degree", r.degree},
              {"underflow", r.underflow}};
}

void print_corr_table(const CorrResult& r) {
  std::cout << "Corr                    " << fmt(r.corr) << ' ' << units(r.base) << '\n';
  std::cout << "overlap                 " << fmt(r.overlap) << '\n';
  std::cout << "occupations            ";
  for (double l : r.lambda) std::cout << ' ' << fmt(l, 8);
  std::cout << '\n';
  std::cout << "entropy (normalized)    " << fmt(r.entropy) << '\n';
  std::cout << "entropy (raw)           " << fmt(r.entropy_raw) << '\n';
  std::cout << "degree of correlation   " << fmt(r.degree) << '\n';
  if (r.underflow) std::cout << "WARNING: overlap underflow; Corr is -log of the accumulated sum\n";
}

int report_corr(const CorrResult& r, const GlobalFlags& flags) {
  if (flags.json)
    std::cout << corr_json(r).dump(2) << '\n';
  else
    print_corr_table(r);
  return 0;
}

template <class F>
int with_underflow_report(F&& compute, const GlobalFlags& flags) {
  try {
    return report_corr(compute(), flags);
  } catch (const OverlapUnderflow& e) {
    report_corr(e.partial(), flags);
    throw;
  }
}

int cmd_corr(const std::string& file, const GlobalFlags& flags) {
  const auto parsed = load_wavefunction(file);
  emit_warnings(parsed.warnings);
  const SpectrumOptions opts{flags.tol, flags.zero_threshold};
  return with_underflow_report([&] { return corr_pure(parsed.psi, parse_log_base(flags.base), opts); }, flags);
}

int cmd_corr2(const std::string& file, const GlobalFlags& flags) {
  const auto parsed = load_wavefunction(file);
  emit_warnings(parsed.warnings);
  if (parsed.psi.particles() != 2)
    throw Error(ErrorKind::invalid_argument,
                "corr2 requires a 2-electron wavefunction, got nelec=" + std::to_string(parsed.psi.particles()));
  const auto base = parse_log_base(flags.base);
  const auto form = schmidt_2e(parsed.psi);
  const auto result = corr_two_particle(parsed.psi, base);
  if (flags.json) {
    json j = corr_json(result);
    j["schmidt_weights"] = to_json(form.weights());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "Schmidt weights        ";
    for (const auto& pair : form.pairs) std::cout << ' ' << fmt(pair.weight, 8);
    std::cout << '\n';
    std::cout << "Corr (closed form)      " << fmt(result.corr) << ' ' << units(base) << '\n';
    std::cout << "overlap                 " << fmt(result.overlap) << '\n';
  }
  return 0;
}

int cmd_mixed(const std::string& file, const GlobalFlags& flags) {
  const auto loaded = load_mixture(file);
  emit_warnings(loaded.warnings);
  const SpectrumOptions opts{flags.tol, flags.zero_threshold};
  const auto base = parse_log_base(flags.base);
  const auto compute = [&] { return corr_mixed(loaded.state, base, opts); };
  if (flags.json) return with_underflow_report(compute, flags);
  const auto r = compute();
  std::cout << "Corr(D)                 " << fmt(r.corr) << ' ' << units(base) << '\n';
  std::cout << "fidelity                " << fmt(r.fidelity) << '\n';
  std::cout << "occupations            ";
  for (double l : r.lambda) std::cout << ' ' << fmt(l, 8);
  std::cout << '\n';
  return 0;
}

struct SweepFlags {
  double u_min = 0.0;
  double u_max = 20.0;
  int steps = 80;
  double t = 1.0;
  std::string out;
};

int cmd_hubbard_sweep(const SweepFlags& sf, const GlobalFlags& flags) {
  if (sf.steps < 0) throw Error(ErrorKind::invalid_argument, "--steps must be non-negative");
  if (!(sf.u_max >= sf.u_min)) throw Error(ErrorKind::invalid_argument, "--u-max must not be below --u-min");
  std::vector<double> grid;
  for (int i = 0; i <= sf.steps; ++i)
    grid.push_back(sf.steps == 0 ? sf.u_min : sf.u_min + (sf.u_max - sf.u_min) * i / sf.steps);
  const auto rows =
      sweep(grid, parse_log_base(flags.base), parse_entropy_convention(flags.entropy_convention), sf.t);

  std::ofstream file;
  if (!sf.out.empty()) {
    file.open(sf.out);
    if (!file) throw Error(ErrorKind::invalid_argument, "cannot write " + sf.out);
  }
  std::ostream& os = sf.out.empty() ? std::cout : file;
  os << "u,energy,corr,entropy,entropy_normalized,degree\n";
  for (const auto& r : rows)
    os << fmt(r.u, 12) << ',' << fmt(r.energy, 12) << ',' << fmt(r.corr, 12) << ',' << fmt(r.entropy, 12) << ','
       << fmt(r.entropy_normalized, 12) << ',' << fmt(r.degree, 12) << '\n';
  return 0;
}

int cmd_oracle(const std::string& file, const GlobalFlags& flags) {
  const auto parsed = load_wavefunction(file);
  emit_warnings(parsed.warnings);
  const SpectrumOptions opts{flags.tol, flags.zero_threshold};
  const auto recipe = corr_pure(parsed.psi, parse_log_base(flags.base), opts);
  const double brute = overlap_oracle(parsed.psi);
  const double diff = std::abs(recipe.overlap - brute);
  if (flags.json) {
    std::cout << json{{"recipe_overlap", recipe.overlap}, {"oracle_overlap", brute}, {"difference", diff}}.dump(2)
              << '\n';
  } else {
    std::cout << "recipe overlap          " << fmt(recipe.overlap, 15) << '\n';
    std::cout << "brute-force overlap     " << fmt(brute, 15) << '\n';
    std::cout << "difference              " << fmt(diff, 3) << '\n';
  }
  return 0;
}

struct WickFlags {
  int dim = 6;
  std::uint64_t seed = 1;
  int trials = 50;
};

int cmd_verify_wick(const WickFlags& wf, const GlobalFlags& flags) {
  if (wf.dim < 1) throw Error(ErrorKind::invalid_argument, "--dim must be positive");
  constexpr double threshold = 1e-10;
  const auto result = run_wick_trials(wf.dim, wf.seed, wf.trials, threshold);
  if (flags.json) {
    json trials = json::array();
    for (const auto& t : result.trials)
      trials.push_back({{"m", t.m}, {"n", t.n}, {"deviation", t.report.deviation}});
    std::cout << json{{"dim", wf.dim},
                      {"seed", wf.seed},
                      {"trials", trials},
                      {"max_deviation", result.max_deviation},
                      {"failures", result.failures}}
                     .dump(2)
              << '\n';
  } else {
    for (std::size_t k = 0; k < result.trials.size(); ++k) {
      const auto& t = result.trials[k];
      std::cout << "trial " << k << " m=" << t.m << " n=" << t.n << " lhs=" << fmt(t.report.lhs.real(), 8) << "+"
                << fmt(t.report.lhs.imag(), 8) << "i deviation=" << fmt(t.report.deviation, 3)
                << (t.report.deviation < threshold ? "" : "  FAIL") << '\n';
    }
    std::cout << "max deviation " << fmt(result.max_deviation, 3) << ", failures " << result.failures << '/'
              << result.trials.size() << '\n';
  }
  return result.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasifree-reference correlation measure for many-fermion states"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--base", flags.base, "Logarithm base: 2 (bits) or e (nats)")
      ->check(CLI::IsMember({"2", "e"}))
      ->capture_default_str();
  app.add_option("--tol", flags.tol, "Tolerance for occupation-number validation")->capture_default_str();
  app.add_option("--zero-threshold", flags.zero_threshold, "Occupation below which a natural orbital counts as empty")
      ->capture_default_str();
  app.add_option("--entropy-convention", flags.entropy_convention, "normalized (lambda/N) or raw (lambda)")
      ->check(CLI::IsMember({"normalized", "raw"}))
      ->capture_default_str();
  app.add_flag("--json", flags.json, "Emit machine-readable JSON");

  std::string file;
  auto* corr = app.add_subcommand("corr", "Corr of a pure state from a wavefunction file");
  corr->add_option("file", file, "Wavefunction file")->required();
  auto* corr2 = app.add_subcommand("corr2", "Two-electron closed form from the Schmidt weights");
  corr2->add_option("file", file, "Wavefunction file")->required();
  auto* mixed = app.add_subcommand("mixed", "Corr of a mixture of fixed-particle-number states");
  mixed->add_option("file", file, "Mixture file")->required();
  auto* oracle = app.add_subcommand("oracle", "Compare the recipe overlap with the brute-force Fock-space overlap");
  oracle->add_option("file", file, "Wavefunction file")->required();

  SweepFlags sweep_flags;
  auto* hubbard = app.add_subcommand("hubbard-sweep", "Two-site Hubbard ground-state measures over a u grid (CSV)");
  hubbard->add_option("--u-min", sweep_flags.u_min)->capture_default_str();
  hubbard->add_option("--u-max", sweep_flags.u_max)->capture_default_str();
  hubbard->add_option("--steps", sweep_flags.steps, "Number of grid intervals (steps + 1 points)")
      ->capture_default_str();
  hubbard->add_option("--t", sweep_flags.t, "Hopping energy")->capture_default_str();
  hubbard->add_option("--out", sweep_flags.out, "Output CSV path (default stdout)");

  WickFlags wick_flags;
  auto* wick = app.add_subcommand("verify-wick", "Randomized checks of the quasifree Wick factorization");
  wick->add_option("--dim", wick_flags.dim)->capture_default_str();
  wick->add_option("--seed", wick_flags.seed)->capture_default_str();
  wick->add_option("--trials", wick_flags.trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*corr) return cmd_corr(file, flags);
    if (*corr2) return cmd_corr2(file, flags);
    if (*mixed) return cmd_mixed(file, flags);
    if (*oracle) return cmd_oracle(file, flags);
    if (*hubbard) return cmd_hubbard_sweep(sweep_flags, flags);
    if (*wick) return cmd_verify_wick(wick_flags, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::invalid_argument ? 2 : 3;
  }
  return 2;
}
