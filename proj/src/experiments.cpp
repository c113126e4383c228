// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "mpcode/error.hpp"
#include "mpcode/gf.hpp"
#include "mpcode/rng.hpp"
#include "parallel.hpp"

namespace mpcode {

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::kApn:
      return "apn" + std::to_string(exponent);
    case FamilyKind::kRm1:
      return "rm1";
    case FamilyKind::kIidSigns:
      return "iid";
  }
  return "unknown";
}

Family parse_family(const std::string& name, int exponent) {
  if (name == "apn") return Family{FamilyKind::kApn, exponent};
  if (name == "rm1") return Family{FamilyKind::kRm1, exponent};
  if (name == "iid" || name == "iid_signs") return Family{FamilyKind::kIidSigns, exponent};
  throw_invalid("unknown family '" + name + "' (expected apn, rm1 or iid)");
}

std::size_t family_length(const Family& family, int m) {
  if (m < kMinFieldDegree || m > kMaxFieldDegree) throw_invalid("m must lie in [2, 16]");
  const std::size_t full = std::size_t{1} << m;
  return family.kind == FamilyKind::kRm1 ? full : full - 1;
}

RowSource make_source(const Family& family, int m) {
  switch (family.kind) {
    case FamilyKind::kApn:
      return build_apn_code(m, family.exponent);
    case FamilyKind::kRm1:
      return build_rm1(m);
    case FamilyKind::kIidSigns:
      return IidSignSource{family_length(family, m)};
  }
  throw_invalid("unknown family");
}

std::size_t rows_for_ratio(std::size_t n, double y) {
  const double exact = y * static_cast<double>(n);
  // Ties go down: ceil(x - 1/2).
  return static_cast<std::size_t>(std::ceil(exact - 0.5));
}

std::uint64_t trial_seed(std::uint64_t master_seed, int m, std::size_t trial) {
  return mix_seed(mix_seed(master_seed, static_cast<std::uint64_t>(m)), trial);
}

void validate_config(const ExperimentConfig& config) {
  if (config.m_values.empty()) throw_invalid("experiment needs at least one m");
  if (!(config.y > 0.0 && config.y < 1.0)) throw_invalid("y must lie in (0, 1)");
  if (config.trials < 1) throw_invalid("trials must be at least 1");
  if (!(config.tau > 0.0)) throw_invalid("tau must be positive");
  for (int m : config.m_values) {
    const std::size_t n = family_length(config.family, m);
    const std::size_t p = rows_for_ratio(n, config.y);
    if (p < 1 || p >= n) {
      throw_invalid("m = " + std::to_string(m) + " gives p outside [1, n)");
    }
  }
}

double quantile_of(std::vector<double> values, double q) {
  if (values.empty()) throw_invalid("quantile of an empty list");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

double median_of(std::vector<double> values) { return quantile_of(std::move(values), 0.5); }

SweepResult run_distance_sweep(const ExperimentConfig& config) {
  validate_config(config);
  SweepResult result;
  result.config = config;
  for (int m : config.m_values) {
    const RowSource source = make_source(config.family, m);
    const std::size_t n = source_length(source);
    const std::size_t p = rows_for_ratio(n, config.y);
    const MPParams mp(static_cast<double>(p) / static_cast<double>(n));

    std::vector<double> distances(config.trials);
    detail::parallel_for(config.trials, config.threads, [&](std::size_t t) {
      const SampleMatrix phi = build_sample_matrix(source, p, trial_seed(config.master_seed, m, t));
      distances[t] = interval_sup_distance(ESD(spectrum_of(phi)), mp);
    });

    for (std::size_t t = 0; t < config.trials; ++t) {
      result.trials.push_back(ExperimentRecord{config.family.name(), m, n, p, t,
                                               trial_seed(config.master_seed, m, t), distances[t]});
    }
    SweepPoint point;
    point.m = m;
    point.n = n;
    point.p = p;
    point.median = median_of(distances);
    point.q1 = quantile_of(distances, 0.25);
    point.q3 = quantile_of(distances, 0.75);
    result.points.push_back(point);
  }
  return result;
}

RateFitResult fit_loglog_slope(const std::vector<RatePoint>& points) {
  if (points.size() < 3) throw_invalid("a log-log fit needs at least 3 points");
  RateFitResult fit;
  fit.points = points;
  const auto count = static_cast<double>(points.size());
  double sx = 0.0;
  double sy = 0.0;
  for (const auto& pt : points) {
    if (!(pt.distance > 0.0) || !(pt.n > 0.0)) throw_invalid("log-log fit needs positive values");
    sx += std::log(pt.n);
    sy += std::log(pt.distance);
  }
  const double mx = sx / count;
  const double my = sy / count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& pt : points) {
    const double dx = std::log(pt.n) - mx;
    const double dy = std::log(pt.distance) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw_invalid("log-log fit needs distinct n values");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // Constant data is fitted exactly.
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

RateFitResult fit_sweep(const SweepResult& sweep) {
  std::vector<RatePoint> pts;
  for (const auto& point : sweep.points) {
    pts.push_back(RatePoint{static_cast<double>(point.n), point.median, point.iqr()});
  }
  return fit_loglog_slope(pts);
}

std::size_t count_median_inversions(const SweepResult& sweep) {
  std::size_t inversions = 0;
  for (std::size_t i = 1; i < sweep.points.size(); ++i) {
    if (sweep.points[i].median > sweep.points[i - 1].median) ++inversions;
  }
  return inversions;
}

std::vector<DeltaScalingRow> run_delta_scaling(const ExperimentConfig& config, Complex z, bool self_test) {
  validate_config(config);
  if (z.imag() < 0.5) throw_invalid("delta scaling needs Im z >= 0.5");
  std::vector<DeltaScalingRow> rows;
  for (int m : config.m_values) {
    DeltaScalingRow row;
    row.m = m;
    row.n = family_length(config.family, m);
    row.p = rows_for_ratio(row.n, config.y);
    const MPParams mp(static_cast<double>(row.p) / static_cast<double>(row.n));
    if (self_test) {
      row.s_n = TransformSample{z, mp_stieltjes(z, mp), 0, 0.0, 0.0, 0.0};
    } else {
      const RowSource source = make_source(config.family, m);
      row.s_n = estimate_expected_stieltjes(source, row.p, z, config.trials,
                                            mix_seed(config.master_seed, static_cast<std::uint64_t>(m)),
                                            config.threads);
    }
    row.delta = delta_perturbation(row.s_n.value, z, mp);
    row.delta_abs = std::abs(row.delta);
    // dDelta/ds = -1/s^2 + y z.
    const Complex slope = -1.0 / (row.s_n.value * row.s_n.value) + mp.y() * z;
    row.delta_std_err = std::abs(slope) * std::hypot(row.s_n.std_err_re, row.s_n.std_err_im);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConcentrationResult> run_concentration(const ExperimentConfig& config, Complex z,
                                                   const std::vector<double>& r_grid) {
  validate_config(config);
  if (config.trials < 200) throw_invalid("concentration runs need at least 200 trials");
  if (!(z.imag() > 0.0)) throw_invalid("concentration needs Im z > 0");
  std::vector<ConcentrationResult> results;
  for (int m : config.m_values) {
    ConcentrationResult res;
    res.m = m;
    const RowSource source = make_source(config.family, m);
    res.n = source_length(source);
    res.p = rows_for_ratio(res.n, config.y);
    const auto values = sample_stieltjes_values(
        source, res.p, z, config.trials, mix_seed(config.master_seed, static_cast<std::uint64_t>(m)),
        config.threads);
    res.mean = summarize_transform(z, values);
    const double n = static_cast<double>(res.n);
    const double eta = z.imag();
    const auto trials = static_cast<double>(values.size());
    for (double r : r_grid) {
      ConcentrationRow row;
      row.r = r;
      for (const Complex& v : values) {
        if (std::abs(v - res.mean.value) >= r) ++row.exceedances;
      }
      row.frequency = static_cast<double>(row.exceedances) / trials;
      row.bound = 2.0 * std::exp(-n * n * eta * eta * r * r / (8.0 * static_cast<double>(res.p)));
      const double q = std::min(row.bound, 1.0);
      row.slack = 3.0 * std::sqrt(q * (1.0 - q) / trials);
      res.rows.push_back(row);
    }
    results.push_back(res);
  }
  return results;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace mpcode

namespace mpcode {

IdentitySuiteReport run_identity_suite(std::uint64_t seed, std::size_t instances, double tau) {
  if (!(tau > 0.0 && tau < 0.25)) throw_invalid("tau must lie in (0, 1/4)");
  IdentitySuiteReport report;
  report.instances = instances;
  RandomStream rng = make_stream(mix_seed(seed, 0x1DE57u));
  auto uniform_int = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto uniform_real = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };

  for (std::size_t inst = 0; inst < instances; ++inst) {
    RowSource source = IidSignSource{0};
    switch (uniform_int(0, 2)) {
      case 0:
        source = build_apn_code(static_cast<int>(uniform_int(3, 6)), 3);
        break;
      case 1:
        source = build_rm1(static_cast<int>(uniform_int(3, 6)));
        break;
      default:
        source = IidSignSource{uniform_int(4, 64)};
        break;
    }
    const std::size_t n = source_length(source);
    const std::size_t p = uniform_int(2, std::min<std::size_t>(32, n - 1));
    const SampleMatrix phi = build_sample_matrix(source, p, rng());
    const MPParams mp(static_cast<double>(p) / static_cast<double>(n));

    // z in S_tau: eta in [n^(-1/4 + tau), 1/tau], kappa(E) <= 1/tau.
    const double eta_lo = std::pow(static_cast<double>(n), -0.25 + tau);
    const double eta = std::exp(uniform_real(std::log(eta_lo), std::log(1.0 / tau)));
    const double energy = uniform_real(mp.a() - 1.0 / tau, mp.b() + 1.0 / tau);
    const Complex z(energy, eta);

    std::vector<std::size_t> rows(p);
    for (std::size_t i = 0; i < p; ++i) rows[i] = i;
    std::shuffle(rows.begin(), rows.end(), rng);
    const std::size_t removed_count = uniform_int(0, std::min<std::size_t>(3, p - 1));
    const std::vector<std::size_t> removed(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(removed_count));

    const std::size_t ell = uniform_int(0, p - 1);
    const std::size_t column = uniform_int(0, n - 1);
    report.max_diagonal_residual =
        std::max(report.max_diagonal_residual, verify_diagonal_identity(phi, ell, z).residual);
    report.max_trace_residual =
        std::max(report.max_trace_residual, verify_trace_relation(phi, removed, z).residual);
    report.max_wald_residual =
        std::max(report.max_wald_residual, verify_wald(phi, removed, column, z).residual);
    const InterlacingCheck inter = verify_interlacing(phi, removed, z);
    if (!inter.holds()) ++report.interlacing_violations;
    if (inter.bound > 0.0) {
      report.max_interlacing_ratio = std::max(report.max_interlacing_ratio, inter.delta / inter.bound);
    }
  }
  return report;
}

}  // namespace mpcode
