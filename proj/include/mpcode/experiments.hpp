// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mpcode/metrics.hpp"
#include "mpcode/specmat.hpp"

namespace mpcode {

enum class FamilyKind { kApn, kRm1, kIidSigns };

struct Family {
  FamilyKind kind = FamilyKind::kApn;
  int exponent = 3;  // only used by kApn

  /// "apn3", "rm1" or "iid".
  std::string name() const;
};

/// Accepts "apn", "rm1", "iid" (alias "iid_signs").
Family parse_family(const std::string& name, int exponent = 3);

/// Code length at field degree m: 2^m - 1 for apn and iid, 2^m for rm1.
std::size_t family_length(const Family& family, int m);

RowSource make_source(const Family& family, int m);

/// round(y n) with ties rounded down.
std::size_t rows_for_ratio(std::size_t n, double y);

/// Seed of trial t at degree m: mix_seed(mix_seed(master, m), t).
std::uint64_t trial_seed(std::uint64_t master_seed, int m, std::size_t trial);

struct ExperimentConfig {
  Family family;
  std::vector<int> m_values;
  double y = 0.5;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  double tau = 0.05;
  std::vector<Complex> z_grid;
  unsigned threads = 0;  // 0 = machine parallelism
};

/// Throws kInvalidArgument when the config cannot be run.
void validate_config(const ExperimentConfig& config);

/// One Monte Carlo trial of the distance sweep.
struct ExperimentRecord {
  std::string family;
  int m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double distance = 0.0;  // interval-sup distance to the MP law
};

struct SweepPoint {
  int m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr() const { return q3 - q1; }
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<SweepPoint> points;        // one per m, in config order
  std::vector<ExperimentRecord> trials;  // ordered by (m, trial)
};

/// For every m: `trials` seeded sample matrices, each reduced to its
/// interval-sup distance against MP(p/n). Deterministic given the config.
SweepResult run_distance_sweep(const ExperimentConfig& config);

/// Median of the values (mean of the middle two for even counts).
double median_of(std::vector<double> values);

/// Linear-interpolated quantile, q in [0, 1].
double quantile_of(std::vector<double> values, double q);

struct RatePoint {
  double n = 0.0;
  double distance = 0.0;
  double iqr = 0.0;
};

struct RateFitResult {
  std::vector<RatePoint> points;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares of log D on log n. Needs >= 3 points with D > 0.
RateFitResult fit_loglog_slope(const std::vector<RatePoint>& points);

/// fit_loglog_slope on the per-m medians of a sweep.
RateFitResult fit_sweep(const SweepResult& sweep);

/// Number of adjacent pairs where the median rises.
std::size_t count_median_inversions(const SweepResult& sweep);

struct DeltaScalingRow {
  int m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  TransformSample s_n;
  Complex delta;
  double delta_abs = 0.0;
  double delta_std_err = 0.0;  // first-order propagation of s_n's error
};

/// Monte Carlo s_n(z) per m, turned into Delta(z) with y = p/n. With
/// self_test set, s_n is replaced by the exact MP transform. Needs Im z >= 0.5.
std::vector<DeltaScalingRow> run_delta_scaling(const ExperimentConfig& config, Complex z,
                                               bool self_test = false);

struct ConcentrationRow {
  double r = 0.0;
  std::size_t exceedances = 0;
  double frequency = 0.0;
  double bound = 0.0;  // 2 exp(-n^2 eta^2 r^2 / (8 p))
  double slack = 0.0;  // 3 sqrt(q (1 - q) / trials), q = min(bound, 1)
  bool within() const { return frequency <= bound + slack; }
};

struct ConcentrationResult {
  int m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  TransformSample mean;
  std::vector<ConcentrationRow> rows;
};

/// Exceedance frequencies of |s_{G_n}(z) - mean| >= r. Needs trials >= 200.
std::vector<ConcentrationResult> run_concentration(const ExperimentConfig& config, Complex z,
                                                   const std::vector<double>& r_grid);

struct IdentitySuiteReport {
  std::size_t instances = 0;
  double max_diagonal_residual = 0.0;
  double max_trace_residual = 0.0;
  double max_wald_residual = 0.0;
  std::size_t interlacing_violations = 0;  // delta > |T| / eta
  double max_interlacing_ratio = 0.0;      // max delta / bound over |T| >= 1
};

/// Resolvent identity checks on randomized small instances: a random family
/// (apn3 or rm1 with m in [3, 6], or iid signs with n in [4, 64]), p in
/// [2, min(32, n - 1)], z drawn from S_tau at the instance's n, and a random
/// removal set of size 0..3.
IdentitySuiteReport run_identity_suite(std::uint64_t seed, std::size_t instances, double tau = 0.05);

/// Persistence: JSON documents carry "schema" and "schema_version" keys; the
/// schemas live in schemas/ at the repository root.
inline constexpr int kResultSchemaVersion = 1;

std::string sweep_to_json(const SweepResult& sweep, const RateFitResult* fit);
/// Header: family,m,n,p,trial,seed,distance. Reals with 17 significant digits.
std::string sweep_to_csv(const SweepResult& sweep);
std::string delta_scaling_to_json(const ExperimentConfig& config, Complex z,
                                  const std::vector<DeltaScalingRow>& rows);
std::string concentration_to_json(const ExperimentConfig& config, Complex z,
                                  const std::vector<ConcentrationResult>& results);

/// printf("%.17g").
std::string format_real(double value);

}  // namespace mpcode
