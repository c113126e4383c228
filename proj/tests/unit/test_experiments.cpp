// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "mpcode/error.hpp"
#include "mpcode/experiments.hpp"
#include "mpcode/rng.hpp"

using namespace mpcode;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.family = parse_family("apn");
  c.m_values = {4, 5, 6};
  c.trials = 6;
  c.master_seed = 17;
  c.threads = 2;
  return c;
}

}  // namespace

TEST_CASE("families") {
  CHECK(parse_family("apn").name() == "apn3");
  CHECK(parse_family("apn", 5).name() == "apn5");
  CHECK(parse_family("rm1").name() == "rm1");
  CHECK(parse_family("iid_signs").name() == "iid");
  CHECK_THROWS_AS(parse_family("bch"), Error);
  CHECK(family_length(parse_family("apn"), 5) == 31);
  CHECK(family_length(parse_family("iid"), 5) == 31);
  CHECK(family_length(parse_family("rm1"), 5) == 32);
  CHECK(source_length(make_source(parse_family("rm1"), 4)) == 16);
}

TEST_CASE("rows_for_ratio rounds ties down") {
  CHECK(rows_for_ratio(31, 0.5) == 15);
  CHECK(rows_for_ratio(32, 0.5) == 16);
  CHECK(rows_for_ratio(1023, 0.5) == 511);
  CHECK(rows_for_ratio(10, 0.26) == 3);
  CHECK(rows_for_ratio(10, 0.25) == 2);
}

TEST_CASE("trial_seed derivation") {
  CHECK(trial_seed(9, 5, 3) == mix_seed(mix_seed(9, 5), 3));
}

TEST_CASE("validate_config") {
  auto c = small_config();
  CHECK_NOTHROW(validate_config(c));
  c.y = 1.0;
  CHECK_THROWS_AS(validate_config(c), Error);
  c = small_config();
  c.m_values.clear();
  CHECK_THROWS_AS(validate_config(c), Error);
  c = small_config();
  c.trials = 0;
  CHECK_THROWS_AS(validate_config(c), Error);
  c = small_config();
  c.m_values = {1};
  CHECK_THROWS_AS(validate_config(c), Error);
}

TEST_CASE("distance sweep") {
  auto single = small_config();
  single.m_values = {5};
  single.trials = 1;
  const auto one = run_distance_sweep(single);
  REQUIRE(one.trials.size() == 1);
  CHECK(one.points.size() == 1);
  CHECK(one.points[0].median == one.trials[0].distance);
  CHECK(one.trials[0].seed == trial_seed(17, 5, 0));

  const auto a = run_distance_sweep(small_config());
  auto serial = small_config();
  serial.threads = 1;
  const auto b = run_distance_sweep(serial);
  REQUIRE(a.trials.size() == 18);
  for (std::size_t i = 0; i < a.trials.size(); ++i) CHECK(a.trials[i].distance == b.trials[i].distance);
  CHECK(sweep_to_csv(a) == sweep_to_csv(b));
  for (const auto& pt : a.points) {
    CHECK(pt.q1 <= pt.median);
    CHECK(pt.median <= pt.q3);
    CHECK(pt.p == rows_for_ratio(pt.n, 0.5));
  }
}

TEST_CASE("median and quantile") {
  CHECK(median_of({3, 1, 2}) == 2);
  CHECK(median_of({4, 1, 2, 3}) == 2.5);
  CHECK(quantile_of({0, 10}, 0.25) == 2.5);
  CHECK(quantile_of({5}, 0.75) == 5);
  CHECK_THROWS_AS(median_of({}), Error);
}

TEST_CASE("fit_loglog_slope") {
  std::vector<RatePoint> exact;
  for (double n : {31.0, 63.0, 127.0, 255.0}) exact.push_back({n, 3.0 / std::sqrt(n), 0.0});
  const auto fit = fit_loglog_slope(exact);
  CHECK(std::abs(fit.slope + 0.5) < 1e-12);
  CHECK(std::abs(fit.intercept - std::log(3.0)) < 1e-12);
  CHECK(fit.r_squared == doctest::Approx(1.0));

  const auto flat = fit_loglog_slope({{10, 0.2, 0}, {20, 0.2, 0}, {40, 0.2, 0}});
  CHECK(std::abs(flat.slope) < 1e-15);

  CHECK_THROWS_AS(fit_loglog_slope({{10, 0.2, 0}, {20, 0.1, 0}}), Error);
  CHECK_THROWS_AS(fit_loglog_slope({{10, 0.2, 0}, {20, 0.0, 0}, {40, 0.1, 0}}), Error);
}

TEST_CASE("median inversions") {
  SweepResult s;
  for (double d : {0.5, 0.4, 0.45, 0.3, 0.35}) s.points.push_back({0, 0, 0, d, d, d});
  CHECK(count_median_inversions(s) == 2);
}

TEST_CASE("delta scaling self-test is exact") {
  ExperimentConfig c = small_config();
  c.m_values = {8, 9, 10};
  const auto rows = run_delta_scaling(c, Complex(1, 1), true);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.delta_abs < 1e-10);
  CHECK_THROWS_AS(run_delta_scaling(c, Complex(1, 0.2), true), Error);
}

TEST_CASE("delta scaling is deterministic") {
  ExperimentConfig c = small_config();
  c.m_values = {5};
  c.trials = 8;
  const auto a = run_delta_scaling(c, Complex(1, 1));
  c.threads = 1;
  const auto b = run_delta_scaling(c, Complex(1, 1));
  CHECK(a[0].delta == b[0].delta);
  CHECK(a[0].delta_std_err > 0);
  CHECK(delta_scaling_to_json(c, Complex(1, 1), a) == delta_scaling_to_json(c, Complex(1, 1), b));
}

TEST_CASE("concentration table edge radii") {
  ExperimentConfig c = small_config();
  c.m_values = {5};
  c.trials = 200;
  const auto res = run_concentration(c, Complex(1, 0.5), {0.0, 100.0});
  REQUIRE(res.size() == 1);
  const auto& rows = res[0].rows;
  CHECK(rows[0].frequency == 1.0);
  CHECK(rows[0].bound == 2.0);
  CHECK(rows[1].frequency == 0.0);
  CHECK(rows[0].within());
  c.trials = 50;
  CHECK_THROWS_AS(run_concentration(c, Complex(1, 0.5), {0.1}), Error);
}

TEST_CASE("identity suite") {
  const auto report = run_identity_suite(3, 30);
  CHECK(report.instances == 30);
  CHECK(report.max_diagonal_residual < 1e-8);
  CHECK(report.max_trace_residual < 1e-8);
  CHECK(report.max_wald_residual < 1e-8);
  CHECK(report.interlacing_violations == 0);
  CHECK(report.max_interlacing_ratio <= 1.0);
  const auto again = run_identity_suite(3, 30);
  CHECK(again.max_wald_residual == report.max_wald_residual);
}

TEST_CASE("result JSON documents") {
  const auto sweep = run_distance_sweep(small_config());
  const auto fit = fit_sweep(sweep);
  const auto doc = nlohmann::json::parse(sweep_to_json(sweep, &fit));
  CHECK(doc["schema"] == "mpcode.distance_sweep");
  CHECK(doc["schema_version"] == kResultSchemaVersion);
  CHECK(doc["points"].size() == 3);
  CHECK(doc["trials"].size() == 18);
  CHECK(doc["fit"]["slope"].get<double>() == fit.slope);
  const auto csv = sweep_to_csv(sweep);
  CHECK(csv.rfind("family,m,n,p,trial,seed,distance\n", 0) == 0);
  CHECK(format_real(0.1) == "0.10000000000000001");
}
