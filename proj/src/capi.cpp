// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "mpcode/codes.hpp"
#include "mpcode/error.hpp"
#include "mpcode/experiments.hpp"
#include "mpcode/metrics.hpp"
#include "mpcode/mpcode.h"
#include "mpcode/mplaw.hpp"
#include "mpcode/specmat.hpp"

struct mpc_code {
  mpcode::LinearCode code;
};

struct mpc_spectrum {
  std::size_t columns = 0;
  mpcode::GramSpectrum spectrum;
};

struct mpc_oracle {
  mpcode::LinearCode code;
  mpcode::MomentOracle oracle;
};

namespace {

thread_local std::string g_last_error;

mpc_status fail(mpc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body and converts exceptions into status codes.
template <typename Body>
mpc_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return MPC_OK;
  } catch (const mpcode::Error& e) {
    return fail(static_cast<mpc_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MPC_ERR_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(MPC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MPC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* what) {
  if (!condition) mpcode::throw_invalid(what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mpcode::Family to_family(mpc_family family, int exponent) {
  switch (family) {
    case MPC_FAMILY_APN:
      return {mpcode::FamilyKind::kApn, exponent};
    case MPC_FAMILY_RM1:
      return {mpcode::FamilyKind::kRm1, exponent};
    case MPC_FAMILY_IID:
      return {mpcode::FamilyKind::kIidSigns, exponent};
  }
  mpcode::throw_invalid("unknown family");
}

mpcode::ExperimentConfig to_config(const mpc_experiment_config* c) {
  require(c != nullptr, "null experiment config");
  require(c->m_values != nullptr || c->m_count == 0, "null m_values");
  mpcode::ExperimentConfig config;
  config.family = to_family(c->family, c->exponent);
  config.m_values.assign(c->m_values, c->m_values + c->m_count);
  config.y = c->y;
  config.trials = c->trials;
  config.master_seed = c->master_seed;
  config.tau = c->tau;
  config.threads = c->threads;
  return config;
}

}  // namespace

extern "C" {

const char* mpc_version(void) { return "1.0.0"; }

const char* mpc_last_error(void) { return g_last_error.c_str(); }

void mpc_string_free(char* str) { delete[] str; }

mpc_status mpc_family_parse(const char* name, mpc_family* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    switch (mpcode::parse_family(name).kind) {
      case mpcode::FamilyKind::kApn:
        *out = MPC_FAMILY_APN;
        break;
      case mpcode::FamilyKind::kRm1:
        *out = MPC_FAMILY_RM1;
        break;
      case mpcode::FamilyKind::kIidSigns:
        *out = MPC_FAMILY_IID;
        break;
    }
  });
}

mpc_status mpc_family_shape(mpc_family family, int m, double y, size_t* n, size_t* p) {
  return guarded([&] {
    require(n != nullptr && p != nullptr, "null argument");
    *n = mpcode::family_length(to_family(family, 3), m);
    *p = mpcode::rows_for_ratio(*n, y);
  });
}

mpc_status mpc_code_apn(int m, int exponent, mpc_code** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new mpc_code{mpcode::build_apn_code(m, exponent)};
  });
}

mpc_status mpc_code_rm1(int m, mpc_code** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new mpc_code{mpcode::build_rm1(m)};
  });
}

mpc_status mpc_code_from_rows(const char* label, const char* const* rows, size_t k, mpc_code** out) {
  return guarded([&] {
    require(rows != nullptr && out != nullptr && k > 0, "null argument");
    std::vector<mpcode::BitVector> generator;
    for (size_t i = 0; i < k; ++i) {
      require(rows[i] != nullptr, "null generator row");
      generator.push_back(mpcode::BitVector::from_string(rows[i]));
    }
    const std::size_t n = generator.front().size();
    *out = new mpc_code{mpcode::LinearCode(label != nullptr ? label : "custom", n, std::move(generator))};
  });
}

void mpc_code_free(mpc_code* code) { delete code; }

mpc_status mpc_code_shape(const mpc_code* code, size_t* n, size_t* k) {
  return guarded([&] {
    require(code != nullptr && n != nullptr && k != nullptr, "null argument");
    *n = code->code.length();
    *k = code->code.dimension();
  });
}

mpc_status mpc_code_dual_distance(const mpc_code* code, int cap, int* value, int* lower_bound) {
  return guarded([&] {
    require(code != nullptr && value != nullptr && lower_bound != nullptr, "null argument");
    const auto d = mpcode::dual_distance(code->code, cap);
    *value = d.value;
    *lower_bound = d.lower_bound ? 1 : 0;
  });
}

mpc_status mpc_code_descriptor_json(const mpc_code* code, char** out) {
  return guarded([&] {
    require(code != nullptr && out != nullptr, "null argument");
    *out = copy_string(mpcode::code_descriptor_json(code->code));
  });
}

mpc_status mpc_spectrum_sample(mpc_family family, int m, int exponent, double y, uint64_t seed,
                               mpc_spectrum** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(y > 0.0 && y < 1.0, "y must lie in (0, 1)");
    const auto fam = to_family(family, exponent);
    const auto source = mpcode::make_source(fam, m);
    const std::size_t n = mpcode::source_length(source);
    const std::size_t p = mpcode::rows_for_ratio(n, y);
    const auto phi = mpcode::build_sample_matrix(source, p, seed);
    *out = new mpc_spectrum{n, mpcode::spectrum_of(phi)};
  });
}

void mpc_spectrum_free(mpc_spectrum* spectrum) { delete spectrum; }

size_t mpc_spectrum_size(const mpc_spectrum* spectrum) {
  return spectrum != nullptr ? spectrum->spectrum.eigenvalues.size() : 0;
}

size_t mpc_spectrum_columns(const mpc_spectrum* spectrum) {
  return spectrum != nullptr ? spectrum->columns : 0;
}

double mpc_spectrum_ratio(const mpc_spectrum* spectrum) {
  return spectrum != nullptr ? spectrum->spectrum.y : 0.0;
}

const double* mpc_spectrum_eigenvalues(const mpc_spectrum* spectrum) {
  return spectrum != nullptr ? spectrum->spectrum.eigenvalues.data() : nullptr;
}

mpc_status mpc_spectrum_stieltjes(const mpc_spectrum* spectrum, double re, double im, double* out_re,
                                  double* out_im) {
  return guarded([&] {
    require(spectrum != nullptr && out_re != nullptr && out_im != nullptr, "null argument");
    const auto s = mpcode::empirical_stieltjes(mpcode::ESD(spectrum->spectrum), {re, im});
    *out_re = s.real();
    *out_im = s.imag();
  });
}

mpc_status mpc_mp_edges(double y, double* a, double* b) {
  return guarded([&] {
    require(a != nullptr && b != nullptr, "null argument");
    const mpcode::MPParams mp(y);
    *a = mp.a();
    *b = mp.b();
  });
}

mpc_status mpc_mp_density(double y, double x, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = mpcode::mp_density(x, mpcode::MPParams(y));
  });
}

mpc_status mpc_mp_cdf(double y, double x, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = mpcode::mp_cdf(x, mpcode::MPParams(y));
  });
}

mpc_status mpc_mp_stieltjes(double y, double re, double im, double* out_re, double* out_im) {
  return guarded([&] {
    require(out_re != nullptr && out_im != nullptr, "null argument");
    const auto s = mpcode::mp_stieltjes({re, im}, mpcode::MPParams(y));
    *out_re = s.real();
    *out_im = s.imag();
  });
}

mpc_status mpc_esd_cdf(const double* atoms, size_t count, double x, double* out) {
  return guarded([&] {
    require(atoms != nullptr && out != nullptr, "null argument");
    *out = mpcode::esd_cdf(mpcode::ESD(std::vector<double>(atoms, atoms + count)), x);
  });
}

mpc_status mpc_interval_sup_distance(const double* atoms, size_t count, double y, double* out) {
  return guarded([&] {
    require(atoms != nullptr && out != nullptr, "null argument");
    *out = mpcode::interval_sup_distance(mpcode::ESD(std::vector<double>(atoms, atoms + count)),
                                         mpcode::MPParams(y));
  });
}

mpc_status mpc_oracle_create(const mpc_code* code, mpc_oracle** out) {
  return guarded([&] {
    require(code != nullptr && out != nullptr, "null argument");
    *out = new mpc_oracle{code->code, mpcode::MomentOracle(code->code)};
  });
}

void mpc_oracle_free(mpc_oracle* oracle) { delete oracle; }

mpc_status mpc_oracle_pair(const mpc_oracle* oracle, size_t j, size_t k, int64_t* num, int64_t* den) {
  return guarded([&] {
    require(oracle != nullptr && num != nullptr && den != nullptr, "null argument");
    const auto q = oracle->oracle.pair(j, k);
    *num = q.num;
    *den = q.den;
  });
}

mpc_status mpc_oracle_quad(const mpc_oracle* oracle, size_t j, size_t t, size_t k, size_t s, int64_t* num,
                           int64_t* den) {
  return guarded([&] {
    require(oracle != nullptr && num != nullptr && den != nullptr, "null argument");
    const auto q = oracle->oracle.quad(j, t, k, s);
    *num = q.num;
    *den = q.den;
  });
}

mpc_status mpc_oracle_character_sum(const mpc_oracle* oracle, const char* a, int64_t* num, int64_t* den,
                                    int* in_dual) {
  return guarded([&] {
    require(oracle != nullptr && a != nullptr && num != nullptr && den != nullptr && in_dual != nullptr,
            "null argument");
    const auto vec = mpcode::BitVector::from_string(a);
    const auto q = oracle->oracle.character_sum(vec);
    *num = q.num;
    *den = q.den;
    *in_dual = mpcode::in_dual(oracle->code, vec) ? 1 : 0;
  });
}

mpc_status mpc_run_rate_fit(const mpc_experiment_config* config, mpc_rate_summary* summary, char** json,
                            char** csv) {
  return guarded([&] {
    const auto cfg = to_config(config);
    const auto sweep = mpcode::run_distance_sweep(cfg);
    mpcode::RateFitResult fit;
    const bool fitted = sweep.points.size() >= 3;
    if (fitted) fit = mpcode::fit_sweep(sweep);
    if (summary != nullptr) {
      summary->slope = fit.slope;
      summary->intercept = fit.intercept;
      summary->r_squared = fit.r_squared;
      summary->median_inversions = mpcode::count_median_inversions(sweep);
    }
    if (json != nullptr) *json = copy_string(mpcode::sweep_to_json(sweep, fitted ? &fit : nullptr));
    if (csv != nullptr) *csv = copy_string(mpcode::sweep_to_csv(sweep));
  });
}

mpc_status mpc_run_delta_scaling(const mpc_experiment_config* config, double re, double im, int self_test,
                                 char** json) {
  return guarded([&] {
    require(json != nullptr, "null argument");
    const auto cfg = to_config(config);
    const auto rows = mpcode::run_delta_scaling(cfg, {re, im}, self_test != 0);
    *json = copy_string(mpcode::delta_scaling_to_json(cfg, {re, im}, rows));
  });
}

mpc_status mpc_run_concentration(const mpc_experiment_config* config, double re, double im,
                                 const double* r_grid, size_t r_count, char** json, int* all_within) {
  return guarded([&] {
    require(json != nullptr && (r_grid != nullptr || r_count == 0), "null argument");
    const auto cfg = to_config(config);
    const auto results =
        mpcode::run_concentration(cfg, {re, im}, std::vector<double>(r_grid, r_grid + r_count));
    bool ok = true;
    for (const auto& res : results) {
      for (const auto& row : res.rows) ok = ok && row.within();
    }
    if (all_within != nullptr) *all_within = ok ? 1 : 0;
    *json = copy_string(mpcode::concentration_to_json(cfg, {re, im}, results));
  });
}

mpc_status mpc_run_identity_suite(uint64_t seed, size_t instances, double tau, mpc_identity_report* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto r = mpcode::run_identity_suite(seed, instances, tau);
    *out = mpc_identity_report{r.instances,           r.max_diagonal_residual, r.max_trace_residual,
                               r.max_wald_residual,   r.interlacing_violations, r.max_interlacing_ratio};
  });
}

}  // extern "C"
