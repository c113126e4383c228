// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Uses the C interface only.
//
// Exit status: 0 success, 1 numerical failure or failed check, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpcode/mpcode.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Environment variable naming the directory for relative output paths.
constexpr const char* kOutputDirEnv = "MPCODE_OUTPUT_DIR";

struct CliFailure {
  int exit_code;
  std::string message;
};

void check(mpc_status status) {
  if (status == MPC_OK) return;
  const int code = status == MPC_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
  throw CliFailure{code, mpc_last_error()};
}

std::string take_string(char* raw) {
  std::string out = raw != nullptr ? raw : "";
  mpc_string_free(raw);
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

// Writes to the named file, or stdout when path is empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const auto target = resolve_output(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::ofstream out(target, std::ios::binary);
  if (!out) throw CliFailure{kExitFailure, "cannot open " + target.string() + " for writing"};
  out << content;
}

using CodePtr = std::unique_ptr<mpc_code, decltype(&mpc_code_free)>;
using SpectrumPtr = std::unique_ptr<mpc_spectrum, decltype(&mpc_spectrum_free)>;
using OraclePtr = std::unique_ptr<mpc_oracle, decltype(&mpc_oracle_free)>;

struct FamilyFlags {
  std::string family = "apn";
  int m = 5;
  int exponent = 3;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "apn, rm1 or iid")->check(CLI::IsMember({"apn", "rm1", "iid"}));
    cmd->add_option("--m", m, "field degree (code length about 2^m)")->check(CLI::Range(2, 16));
    cmd->add_option("--exponent", exponent, "APN exponent e in f(x) = x^e")->check(CLI::Range(2, 1 << 20));
  }

  mpc_family parsed() const {
    mpc_family f{};
    check(mpc_family_parse(family.c_str(), &f));
    return f;
  }

  CodePtr code() const {
    mpc_code* raw = nullptr;
    if (family == "apn") {
      check(mpc_code_apn(m, exponent, &raw));
    } else if (family == "rm1") {
      check(mpc_code_rm1(m, &raw));
    } else {
      throw CliFailure{kExitUsage, "family '" + family + "' has no code"};
    }
    return CodePtr(raw, &mpc_code_free);
  }
};

struct SampleFlags : FamilyFlags {
  double y = 0.5;
  std::uint64_t seed = 1;

  void add_to(CLI::App* cmd) {
    FamilyFlags::add_to(cmd);
    cmd->add_option("--y", y, "aspect ratio p/n in (0, 1)")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", seed, "master seed");
  }

  SpectrumPtr spectrum() const {
    mpc_spectrum* raw = nullptr;
    check(mpc_spectrum_sample(parsed(), m, exponent, y, seed, &raw));
    return SpectrumPtr(raw, &mpc_spectrum_free);
  }
};

struct SweepFlags {
  FamilyFlags family;
  std::vector<int> m_values{5, 6, 7, 8, 9, 10};
  double y = 0.5;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  double tau = 0.05;

  void add_to(CLI::App* cmd, bool with_m_list = true) {
    cmd->add_option("--family", family.family, "apn, rm1 or iid")->check(CLI::IsMember({"apn", "rm1", "iid"}));
    cmd->add_option("--exponent", family.exponent, "APN exponent");
    if (with_m_list) {
      cmd->add_option("--m", m_values, "field degrees")->delimiter(',')->check(CLI::Range(2, 16));
    }
    cmd->add_option("--y", y, "aspect ratio p/n")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--trials", trials, "Monte Carlo trials per m")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--tau", tau, "spectral-domain constant")->check(CLI::PositiveNumber);
  }

  mpc_experiment_config config(unsigned threads) const {
    mpc_experiment_config c{};
    c.family = family.parsed();
    c.exponent = family.exponent;
    c.m_values = m_values.data();
    c.m_count = m_values.size();
    c.y = y;
    c.trials = trials;
    c.master_seed = seed;
    c.tau = tau;
    c.threads = threads;
    return c;
  }
};

// ---- subcommands ----

int run_code_info(const FamilyFlags& flags, int cap, const std::string& out) {
  CodePtr code = flags.code();
  auto descriptor = nlohmann::ordered_json::parse(take_string([&] {
    char* raw = nullptr;
    check(mpc_code_descriptor_json(code.get(), &raw));
    return raw;
  }()));
  int value = 0;
  int lower = 0;
  mpc_status status = mpc_code_dual_distance(code.get(), cap, &value, &lower);
  if (status == MPC_ERR_LIMIT && cap > 4) {
    status = mpc_code_dual_distance(code.get(), 4, &value, &lower);
  }
  check(status);
  descriptor["dual_distance"] = value;
  descriptor["dual_distance_is_lower_bound"] = lower != 0;
  emit(out, descriptor.dump(2) + "\n");
  return kExitOk;
}

int run_check_dual_distance(const FamilyFlags& flags, int at_least) {
  if (at_least < 2 || at_least > 7) throw CliFailure{kExitUsage, "--at-least must lie in [2, 7]"};
  CodePtr code = flags.code();
  int value = 0;
  int lower = 0;
  check(mpc_code_dual_distance(code.get(), at_least - 1, &value, &lower));
  const bool ok = lower != 0;
  std::cout << "dual_distance " << (ok ? ">= " : "= ") << value << (ok ? " (pass)" : " (fail)") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int run_spectrum(const SampleFlags& flags, const std::string& out) {
  SpectrumPtr spec = flags.spectrum();
  std::ostringstream csv;
  csv << "eigenvalue\n";
  const double* ev = mpc_spectrum_eigenvalues(spec.get());
  for (std::size_t i = 0; i < mpc_spectrum_size(spec.get()); ++i) csv << fmt(ev[i]) << "\n";
  emit(out, csv.str());
  return kExitOk;
}

int run_mp_compare(const SampleFlags& flags, std::size_t grid, const std::string& out) {
  if (grid < 2) throw CliFailure{kExitUsage, "--grid needs at least 2 points"};
  SpectrumPtr spec = flags.spectrum();
  const std::size_t p = mpc_spectrum_size(spec.get());
  const double* ev = mpc_spectrum_eigenvalues(spec.get());
  const double y = mpc_spectrum_ratio(spec.get());
  double a = 0.0;
  double b = 0.0;
  check(mpc_mp_edges(y, &a, &b));
  const double lo = std::min(a, ev[0]);
  const double hi = std::max(b, ev[p - 1]);

  std::ostringstream csv;
  csv << "x,F_emp,F_mp,delta,density\n";
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
    double f_emp = 0.0;
    double f_mp = 0.0;
    double dens = 0.0;
    check(mpc_esd_cdf(ev, p, x, &f_emp));
    check(mpc_mp_cdf(y, x, &f_mp));
    check(mpc_mp_density(y, x, &dens));
    csv << fmt(x) << ',' << fmt(f_emp) << ',' << fmt(f_mp) << ',' << fmt(f_emp - f_mp) << ',' << fmt(dens)
        << "\n";
  }
  double distance = 0.0;
  check(mpc_interval_sup_distance(ev, p, y, &distance));
  csv << "interval_sup_distance," << fmt(distance) << "\n";
  emit(out, csv.str());
  return kExitOk;
}

int run_rate_fit(const SweepFlags& flags, unsigned threads, const std::string& json_path,
                 const std::string& csv_path) {
  const auto cfg = flags.config(threads);
  mpc_rate_summary summary{};
  char* json = nullptr;
  char* csv = nullptr;
  check(mpc_run_rate_fit(&cfg, &summary, &json, &csv));
  const std::string json_text = take_string(json);
  const std::string csv_text = take_string(csv);
  if (!json_path.empty()) emit(json_path, json_text);
  if (!csv_path.empty()) emit(csv_path, csv_text);

  const auto doc = nlohmann::json::parse(json_text);
  std::cout << "m,n,p,median_distance,iqr\n";
  for (const auto& pt : doc["points"]) {
    std::cout << pt["m"].get<int>() << ',' << pt["n"].get<std::size_t>() << ',' << pt["p"].get<std::size_t>()
              << ',' << fmt(pt["median"].get<double>())
              << ',' << fmt(pt["q3"].get<double>() - pt["q1"].get<double>()) << "\n";
  }
  if (flags.m_values.size() >= 3) {
    std::cout << "slope " << fmt(summary.slope) << "\n"
              << "r_squared " << fmt(summary.r_squared) << "\n"
              << "median_inversions " << summary.median_inversions << "\n";
  } else {
    std::cout << "slope n/a (need at least 3 values of m)\n";
  }
  return kExitOk;
}

int run_verify_identities(std::uint64_t seed, std::size_t instances, double tau) {
  constexpr double kTolerance = 1e-8;
  mpc_identity_report report{};
  check(mpc_run_identity_suite(seed, instances, tau, &report));
  std::cout << "instances " << report.instances << "\n"
            << "max_diagonal_residual " << fmt(report.max_diagonal_residual) << "\n"
            << "max_trace_residual " << fmt(report.max_trace_residual) << "\n"
            << "max_wald_residual " << fmt(report.max_wald_residual) << "\n"
            << "interlacing_violations " << report.interlacing_violations << "\n"
            << "max_interlacing_ratio " << fmt(report.max_interlacing_ratio) << "\n";
  const bool ok = report.max_diagonal_residual < kTolerance && report.max_trace_residual < kTolerance &&
                  report.max_wald_residual < kTolerance && report.interlacing_violations == 0;
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFailure;
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t expected) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::size_t>(std::stoull(item)));
    } catch (const std::exception&) {
      throw CliFailure{kExitUsage, "bad index list '" + text + "'"};
    }
  }
  if (out.size() != expected) {
    throw CliFailure{kExitUsage, "index list '" + text + "' needs " + std::to_string(expected) + " entries"};
  }
  return out;
}

bool pairs_up(std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  return idx[0] == idx[1] && idx[2] == idx[3];
}

int run_moments_oracle(const FamilyFlags& flags, const std::vector<std::string>& pair_specs, bool all_pairs,
                       const std::vector<std::string>& quad_specs, std::size_t random_quads,
                       std::uint64_t seed, const std::vector<std::string>& vectors) {
  CodePtr code = flags.code();
  std::size_t n = 0;
  std::size_t k = 0;
  check(mpc_code_shape(code.get(), &n, &k));
  int dual = 0;
  int dual_lower = 0;
  check(mpc_code_dual_distance(code.get(), 4, &dual, &dual_lower));
  const bool corollary_applies = dual_lower != 0;  // d >= 5
  mpc_oracle* raw = nullptr;
  check(mpc_oracle_create(code.get(), &raw));
  OraclePtr oracle(raw, &mpc_oracle_free);

  std::cout << "code n=" << n << " k=" << k << " dual_distance" << (corollary_applies ? ">=5" : "=")
            << (corollary_applies ? "" : std::to_string(dual)) << "\n";
  std::size_t violations = 0;
  const auto n64 = static_cast<std::int64_t>(n);

  auto report_pair = [&](std::size_t j, std::size_t kk) {
    std::int64_t num = 0;
    std::int64_t den = 1;
    check(mpc_oracle_pair(oracle.get(), j, kk, &num, &den));
    bool bad = false;
    if (j == kk) {
      bad = !(num == 1 && den == n64);
    } else if (corollary_applies) {
      bad = num != 0;
    }
    if (bad) ++violations;
    std::cout << "pair " << j << ' ' << kk << ' ' << num << '/' << den << (bad ? " VIOLATION" : "") << "\n";
  };
  auto report_quad = [&](const std::vector<std::size_t>& q) {
    std::int64_t num = 0;
    std::int64_t den = 1;
    check(mpc_oracle_quad(oracle.get(), q[0], q[1], q[2], q[3], &num, &den));
    bool bad = false;
    if (corollary_applies) {
      if (pairs_up(q)) {
        // |num/den| <= 1/n^2  <=>  |num| n^2 <= den
        bad = std::llabs(num) * n64 * n64 > den;
      } else {
        bad = num != 0;
      }
    }
    if (bad) ++violations;
    std::cout << "quad " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << ' ' << num << '/' << den
              << (bad ? " VIOLATION" : "") << "\n";
  };

  if (all_pairs) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t kk = j; kk < n; ++kk) report_pair(j, kk);
    }
  }
  for (const auto& spec : pair_specs) {
    const auto idx = parse_indices(spec, 2);
    report_pair(idx[0], idx[1]);
  }
  for (const auto& spec : quad_specs) report_quad(parse_indices(spec, 4));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < random_quads; ++i) report_quad({pick(rng), pick(rng), pick(rng), pick(rng)});
  for (const auto& bits : vectors) {
    std::int64_t num = 0;
    std::int64_t den = 1;
    int in_dual = 0;
    check(mpc_oracle_character_sum(oracle.get(), bits.c_str(), &num, &den, &in_dual));
    const bool bad = (num == den) != (in_dual != 0) || (num != 0 && num != den);
    if (bad) ++violations;
    std::cout << "character_sum " << bits << ' ' << num << '/' << den << " in_dual=" << in_dual
              << (bad ? " VIOLATION" : "") << "\n";
  }
  std::cout << "violations " << violations << "\n";
  return violations == 0 ? kExitOk : kExitFailure;
}

int run_concentration(const SweepFlags& flags, unsigned threads, double re, double im,
                      const std::vector<double>& r_grid, const std::string& out) {
  const auto cfg = flags.config(threads);
  char* json = nullptr;
  int within = 0;
  check(mpc_run_concentration(&cfg, re, im, r_grid.data(), r_grid.size(), &json, &within));
  const std::string text = take_string(json);
  emit(out, text);
  if (!out.empty()) {
    const auto doc = nlohmann::json::parse(text);
    std::cout << "m,r,frequency,bound,slack,within\n";
    for (const auto& res : doc["results"]) {
      for (const auto& row : res["rows"]) {
        std::cout << res["m"].get<int>() << ',' << fmt(row["r"].get<double>()) << ','
                  << fmt(row["frequency"].get<double>()) << ',' << fmt(row["bound"].get<double>()) << ','
                  << fmt(row["slack"].get<double>()) << ',' << row["within"].get<bool>() << "\n";
      }
    }
  }
  return within != 0 ? kExitOk : kExitFailure;
}

int run_delta_scaling(const SweepFlags& flags, unsigned threads, double re, double im, bool self_test,
                      const std::string& out) {
  const auto cfg = flags.config(threads);
  char* json = nullptr;
  check(mpc_run_delta_scaling(&cfg, re, im, self_test ? 1 : 0, &json));
  const std::string text = take_string(json);
  emit(out, text);
  if (!out.empty()) {
    const auto doc = nlohmann::json::parse(text);
    std::cout << "m,n,p,delta_abs,delta_std_err\n";
    for (const auto& row : doc["rows"]) {
      std::cout << row["m"].get<int>() << ',' << row["n"].get<std::size_t>() << ','
                << row["p"].get<std::size_t>() << ',' << fmt(row["delta_abs"].get<double>()) << ','
                << fmt(row["delta_std_err"].get<double>()) << "\n";
    }
  }
  return kExitOk;
}

int run_plot(const SampleFlags& flags, double bin_width, std::size_t curve_points, const std::string& out) {
  SpectrumPtr spec = flags.spectrum();
  const std::size_t p = mpc_spectrum_size(spec.get());
  const double* ev = mpc_spectrum_eigenvalues(spec.get());
  const double y = mpc_spectrum_ratio(spec.get());
  double a = 0.0;
  double b = 0.0;
  check(mpc_mp_edges(y, &a, &b));
  if (bin_width <= 0.0) bin_width = (b - a) / 50.0;

  const double lo = std::min(a, ev[0]);
  const double hi = std::max(b, ev[p - 1]);
  const auto bins = static_cast<std::size_t>(std::floor((hi - lo) / bin_width)) + 1;
  std::vector<std::size_t> counts(bins, 0);
  for (std::size_t i = 0; i < p; ++i) {
    const auto idx = std::min(bins - 1, static_cast<std::size_t>(std::floor((ev[i] - lo) / bin_width)));
    ++counts[idx];
  }
  std::vector<double> heights(bins);
  double max_height = 0.0;
  for (std::size_t i = 0; i < bins; ++i) {
    heights[i] = static_cast<double>(counts[i]) / (static_cast<double>(p) * bin_width);
    max_height = std::max(max_height, heights[i]);
  }
  std::vector<double> curve_x(curve_points);
  std::vector<double> curve_y(curve_points);
  for (std::size_t i = 0; i < curve_points; ++i) {
    curve_x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(curve_points - 1);
    check(mpc_mp_density(y, curve_x[i], &curve_y[i]));
    max_height = std::max(max_height, curve_y[i]);
  }

  constexpr double kWidth = 800.0;
  constexpr double kHeight = 500.0;
  constexpr double kMargin = 50.0;
  const double x_hi = lo + bin_width * static_cast<double>(bins);
  auto sx = [&](double x) { return kMargin + (x - lo) / (x_hi - lo) * (kWidth - 2 * kMargin); };
  auto sy = [&](double h) { return kHeight - kMargin - h / (1.05 * max_height) * (kHeight - 2 * kMargin); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "  <title>ESD histogram vs Marchenko-Pastur density (y=" << fmt(y) << ", p=" << p << ")</title>\n"
      << "  <g id=\"histogram\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < bins; ++i) {
    if (counts[i] == 0) continue;
    const double left = lo + bin_width * static_cast<double>(i);
    svg << "    <rect x=\"" << fmt(sx(left)) << "\" y=\"" << fmt(sy(heights[i])) << "\" width=\""
        << fmt(sx(left + bin_width) - sx(left)) << "\" height=\"" << fmt(sy(0.0) - sy(heights[i]))
        << "\" data-left=\"" << fmt(left) << "\" data-width=\"" << fmt(bin_width) << "\" data-density=\""
        << fmt(heights[i]) << "\"/>\n";
  }
  svg << "  </g>\n  <path id=\"mp-density\" fill=\"none\" stroke=\"#de2d26\" stroke-width=\"2\" d=\"";
  for (std::size_t i = 0; i < curve_points; ++i) {
    svg << (i == 0 ? "M" : " L") << fmt(sx(curve_x[i])) << ',' << fmt(sy(curve_y[i]));
  }
  svg << "\"/>\n"
      << "  <line x1=\"" << kMargin << "\" y1=\"" << fmt(sy(0.0)) << "\" x2=\"" << kWidth - kMargin
      << "\" y2=\"" << fmt(sy(0.0)) << "\" stroke=\"black\"/>\n"
      << "  <text x=\"" << kMargin << "\" y=\"" << kHeight - 15 << "\" font-size=\"12\">" << fmt(lo)
      << "</text>\n"
      << "  <text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - 15
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(x_hi) << "</text>\n"
      << "</svg>\n";
  emit(out, svg.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of random matrices built from binary linear codes"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = machine parallelism)");
  app.set_version_flag("--version", std::string(mpc_version()));

  // code-info
  FamilyFlags info_flags;
  int info_cap = 6;
  std::string info_out;
  auto* info = app.add_subcommand("code-info", "print the code descriptor as JSON");
  info_flags.add_to(info);
  info->add_option("--cap", info_cap, "largest dual-distance weight to search")->check(CLI::Range(1, 6));
  info->add_option("--out", info_out, "output file (default stdout)");

  // check-dual-distance
  FamilyFlags dd_flags;
  int at_least = 5;
  auto* dd = app.add_subcommand("check-dual-distance", "exit 0 iff the dual distance is at least a threshold");
  dd_flags.add_to(dd);
  dd->add_option("--at-least", at_least, "threshold")->required();

  // spectrum
  SampleFlags spec_flags;
  std::string spec_out;
  auto* spectrum = app.add_subcommand("spectrum", "Gram eigenvalues of one sample matrix as CSV");
  spec_flags.add_to(spectrum);
  spectrum->add_option("--out", spec_out, "output file (default stdout)");

  // mp-compare
  SampleFlags cmp_flags;
  std::size_t cmp_grid = 201;
  std::string cmp_out;
  auto* compare = app.add_subcommand("mp-compare", "empirical vs Marchenko-Pastur CDF table");
  cmp_flags.add_to(compare);
  compare->add_option("--grid", cmp_grid, "number of grid points");
  compare->add_option("--out", cmp_out, "output file (default stdout)");

  // rate-fit
  SweepFlags rate_flags;
  std::string rate_json;
  std::string rate_csv;
  auto* rate = app.add_subcommand("rate-fit", "distance sweep over m and log-log slope fit");
  rate_flags.add_to(rate);
  rate->add_option("--json", rate_json, "write the full JSON result here");
  rate->add_option("--csv", rate_csv, "write the flat trial table here");

  // verify-identities
  std::uint64_t ident_seed = 1;
  std::size_t ident_instances = 100;
  double ident_tau = 0.05;
  auto* ident = app.add_subcommand("verify-identities", "randomized resolvent identity checks");
  ident->add_option("--seed", ident_seed, "seed");
  ident->add_option("--instances", ident_instances, "number of random instances");
  ident->add_option("--tau", ident_tau, "spectral-domain constant")->check(CLI::Range(1e-6, 0.25));

  // moments-oracle
  FamilyFlags mom_flags;
  std::vector<std::string> mom_pairs;
  std::vector<std::string> mom_quads;
  std::vector<std::string> mom_vectors;
  bool mom_all_pairs = false;
  std::size_t mom_random_quads = 0;
  std::uint64_t mom_seed = 1;
  auto* moments = app.add_subcommand("moments-oracle", "exact character-sum moments of a code");
  mom_flags.add_to(moments);
  moments->add_flag("--all-pairs", mom_all_pairs, "every pair j <= k");
  moments->add_option("--pair", mom_pairs, "pair moment at \"j,k\" (repeatable)");
  moments->add_option("--quad", mom_quads, "fourth moment at \"j,t,k,s\" (repeatable)");
  moments->add_option("--random-quads", mom_random_quads, "number of random index quadruples");
  moments->add_option("--seed", mom_seed, "seed for random quadruples");
  moments->add_option("--vector", mom_vectors, "character sum at a 0/1 string (repeatable)");

  // concentration
  SweepFlags conc_flags;
  conc_flags.m_values = {9};
  conc_flags.trials = 500;
  double conc_re = 1.0;
  double conc_im = 0.5;
  std::vector<double> conc_r{0.01, 0.02, 0.05};
  std::string conc_out;
  auto* conc = app.add_subcommand("concentration", "deviation frequencies of the Stieltjes transform");
  conc_flags.add_to(conc);
  conc->add_option("--re", conc_re, "Re z");
  conc->add_option("--im", conc_im, "Im z")->check(CLI::PositiveNumber);
  conc->add_option("--r", conc_r, "deviation radii")->delimiter(',');
  conc->add_option("--out", conc_out, "output JSON file (default stdout)");

  // delta-scaling
  SweepFlags delta_flags;
  delta_flags.m_values = {8, 9, 10};
  delta_flags.trials = 800;
  double delta_re = 1.0;
  double delta_im = 1.0;
  bool delta_self_test = false;
  std::string delta_out;
  auto* delta = app.add_subcommand("delta-scaling", "perturbation of the self-consistent equation vs n");
  delta_flags.add_to(delta);
  delta->add_option("--re", delta_re, "Re z");
  delta->add_option("--im", delta_im, "Im z (at least 0.5)");
  delta->add_flag("--self-test", delta_self_test, "use the exact MP transform instead of Monte Carlo");
  delta->add_option("--out", delta_out, "output JSON file (default stdout)");

  // plot
  SampleFlags plot_flags;
  double plot_bin_width = 0.0;
  std::size_t plot_curve_points = 400;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "SVG of the ESD histogram over the MP density");
  plot_flags.add_to(plot);
  plot->add_option("--bin-width", plot_bin_width, "histogram bin width (default (b - a) / 50)");
  plot->add_option("--curve-points", plot_curve_points, "density curve resolution")->check(CLI::Range(2, 100000));
  plot->add_option("--out", plot_out, "output SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info) return run_code_info(info_flags, info_cap, info_out);
    if (*dd) return run_check_dual_distance(dd_flags, at_least);
    if (*spectrum) return run_spectrum(spec_flags, spec_out);
    if (*compare) return run_mp_compare(cmp_flags, cmp_grid, cmp_out);
    if (*rate) return run_rate_fit(rate_flags, threads, rate_json, rate_csv);
    if (*ident) return run_verify_identities(ident_seed, ident_instances, ident_tau);
    if (*moments) {
      return run_moments_oracle(mom_flags, mom_pairs, mom_all_pairs, mom_quads, mom_random_quads, mom_seed,
                                mom_vectors);
    }
    if (*conc) return run_concentration(conc_flags, threads, conc_re, conc_im, conc_r, conc_out);
    if (*delta) return run_delta_scaling(delta_flags, threads, delta_re, delta_im, delta_self_test, delta_out);
    if (*plot) return run_plot(plot_flags, plot_bin_width, plot_curve_points, plot_out);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
