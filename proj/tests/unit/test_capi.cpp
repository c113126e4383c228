// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C interface only.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "mpcode/mpcode.h"

TEST_CASE("version and errors") {
  CHECK(std::string(mpc_version()).size() > 0);
  mpc_code* code = nullptr;
  CHECK(mpc_code_apn(1, 3, &code) == MPC_ERR_INVALID_ARGUMENT);
  CHECK(code == nullptr);
  CHECK(std::string(mpc_last_error()).size() > 0);
  CHECK(mpc_code_apn(5, 2, &code) == MPC_ERR_CONSTRUCTION);
  CHECK(mpc_code_apn(5, 3, nullptr) == MPC_ERR_INVALID_ARGUMENT);
  mpc_family f{};
  CHECK(mpc_family_parse("nope", &f) == MPC_ERR_INVALID_ARGUMENT);
  CHECK(mpc_family_parse("rm1", &f) == MPC_OK);
  CHECK(f == MPC_FAMILY_RM1);
  mpc_code_free(nullptr);
  mpc_spectrum_free(nullptr);
  mpc_oracle_free(nullptr);
  mpc_string_free(nullptr);
}

TEST_CASE("codes through the C interface") {
  mpc_code* code = nullptr;
  REQUIRE(mpc_code_apn(5, 3, &code) == MPC_OK);
  size_t n = 0;
  size_t k = 0;
  CHECK(mpc_code_shape(code, &n, &k) == MPC_OK);
  CHECK(n == 31);
  CHECK(k == 10);
  int value = 0;
  int lower = 0;
  CHECK(mpc_code_dual_distance(code, 6, &value, &lower) == MPC_OK);
  CHECK(value == 5);
  CHECK(lower == 0);
  CHECK(mpc_code_dual_distance(code, 9, &value, &lower) == MPC_ERR_INVALID_ARGUMENT);
  char* json = nullptr;
  REQUIRE(mpc_code_descriptor_json(code, &json) == MPC_OK);
  const auto doc = nlohmann::json::parse(json);
  mpc_string_free(json);
  CHECK(doc["label"] == "apn-cube-m5");

  mpc_oracle* oracle = nullptr;
  REQUIRE(mpc_oracle_create(code, &oracle) == MPC_OK);
  int64_t num = 0;
  int64_t den = 0;
  CHECK(mpc_oracle_pair(oracle, 2, 2, &num, &den) == MPC_OK);
  CHECK(num == 1);
  CHECK(den == 31);
  CHECK(mpc_oracle_pair(oracle, 2, 9, &num, &den) == MPC_OK);
  CHECK(num == 0);
  CHECK(mpc_oracle_pair(oracle, 2, 31, &num, &den) == MPC_ERR_INVALID_ARGUMENT);
  CHECK(mpc_oracle_quad(oracle, 1, 2, 1, 2, &num, &den) == MPC_OK);
  CHECK(num == 1);
  CHECK(den == 961);
  int in_dual = -1;
  const std::string zero(31, '0');
  CHECK(mpc_oracle_character_sum(oracle, zero.c_str(), &num, &den, &in_dual) == MPC_OK);
  CHECK(num == 1);
  CHECK(in_dual == 1);
  CHECK(mpc_oracle_character_sum(oracle, "0101", &num, &den, &in_dual) == MPC_ERR_INVALID_ARGUMENT);
  mpc_oracle_free(oracle);
  mpc_code_free(code);

  const char* rows[] = {"110", "011"};
  REQUIRE(mpc_code_from_rows("manual", rows, 2, &code) == MPC_OK);
  CHECK(mpc_code_dual_distance(code, 6, &value, &lower) == MPC_OK);
  CHECK(value == 3);  // column 1 = column 0 + column 2, no repeats
  mpc_code_free(code);
  const char* dependent[] = {"1101", "1101"};
  CHECK(mpc_code_from_rows("dep", dependent, 2, &code) == MPC_ERR_CONSTRUCTION);
}

TEST_CASE("spectra and MP law through the C interface") {
  mpc_spectrum* spec = nullptr;
  REQUIRE(mpc_spectrum_sample(MPC_FAMILY_APN, 5, 3, 0.5, 1, &spec) == MPC_OK);
  CHECK(mpc_spectrum_size(spec) == 15);
  CHECK(mpc_spectrum_columns(spec) == 31);
  CHECK(mpc_spectrum_ratio(spec) == doctest::Approx(15.0 / 31.0));
  double sum = 0.0;
  for (size_t i = 0; i < 15; ++i) sum += mpc_spectrum_eigenvalues(spec)[i];
  CHECK(std::abs(sum - 15.0) < 1e-8);
  double re = 0.0;
  double im = 0.0;
  CHECK(mpc_spectrum_stieltjes(spec, 1.0, 1.0, &re, &im) == MPC_OK);
  CHECK(im > 0);
  double distance = 0.0;
  CHECK(mpc_interval_sup_distance(mpc_spectrum_eigenvalues(spec), 15, mpc_spectrum_ratio(spec), &distance) ==
        MPC_OK);
  CHECK(distance > 0.0);
  CHECK(distance < 1.0);
  mpc_spectrum_free(spec);

  CHECK(mpc_spectrum_sample(MPC_FAMILY_APN, 5, 3, 1.5, 1, &spec) == MPC_ERR_INVALID_ARGUMENT);

  double a = 0.0;
  double b = 0.0;
  CHECK(mpc_mp_edges(0.25, &a, &b) == MPC_OK);
  CHECK(a == doctest::Approx(0.25));
  CHECK(b == doctest::Approx(2.25));
  double v = 0.0;
  CHECK(mpc_mp_cdf(0.25, b, &v) == MPC_OK);
  CHECK(v == 1.0);
  CHECK(mpc_mp_density(0.25, 1.0, &v) == MPC_OK);
  CHECK(v > 0.0);
  CHECK(mpc_mp_stieltjes(0.25, 1.0, 0.0, &re, &im) == MPC_ERR_INVALID_ARGUMENT);
  const double atoms[] = {1.0, 2.0, 3.0};
  CHECK(mpc_esd_cdf(atoms, 3, 2.0, &v) == MPC_OK);
  CHECK(v == doctest::Approx(2.0 / 3.0));
  CHECK(mpc_esd_cdf(atoms, 0, 2.0, &v) == MPC_ERR_INVALID_ARGUMENT);

  size_t n = 0;
  size_t p = 0;
  CHECK(mpc_family_shape(MPC_FAMILY_RM1, 6, 0.5, &n, &p) == MPC_OK);
  CHECK(n == 64);
  CHECK(p == 32);
}

TEST_CASE("experiments through the C interface") {
  const int ms[] = {4, 5, 6};
  mpc_experiment_config cfg{MPC_FAMILY_APN, 3, ms, 3, 0.5, 4, 5, 0.05, 2};
  mpc_rate_summary summary{};
  char* json = nullptr;
  char* csv = nullptr;
  REQUIRE(mpc_run_rate_fit(&cfg, &summary, &json, &csv) == MPC_OK);
  CHECK(summary.slope < 0);
  CHECK(std::string(csv).rfind("family,m,n,p,trial,seed,distance", 0) == 0);
  const std::string first_json = json;
  mpc_string_free(json);
  mpc_string_free(csv);
  cfg.threads = 1;
  REQUIRE(mpc_run_rate_fit(&cfg, &summary, &json, nullptr) == MPC_OK);
  CHECK(first_json == json);
  mpc_string_free(json);

  REQUIRE(mpc_run_delta_scaling(&cfg, 1.0, 1.0, 1, &json) == MPC_OK);
  const auto doc = nlohmann::json::parse(json);
  mpc_string_free(json);
  for (const auto& row : doc["rows"]) CHECK(row["delta_abs"].get<double>() < 1e-10);

  cfg.trials = 10;
  const double r[] = {0.1};
  int within = 0;
  CHECK(mpc_run_concentration(&cfg, 1.0, 0.5, r, 1, &json, &within) == MPC_ERR_INVALID_ARGUMENT);

  mpc_identity_report report{};
  REQUIRE(mpc_run_identity_suite(3, 10, 0.05, &report) == MPC_OK);
  CHECK(report.instances == 10);
  CHECK(report.interlacing_violations == 0);
  CHECK(mpc_run_identity_suite(3, 10, 0.05, nullptr) == MPC_ERR_INVALID_ARGUMENT);
}
