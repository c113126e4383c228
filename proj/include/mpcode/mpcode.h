/*
 * Copyright 2026 The mpcode Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the mpcode library. Objects are opaque handles created by
 * mpc_*_create / mpc_*_build functions and released with the matching
 * mpc_*_free. Every fallible call returns an mpc_status; on failure the
 * message for the calling thread is available from mpc_last_error().
 * Strings returned through char** are owned by the caller and released with
 * mpc_string_free.
 */
#ifndef MPCODE_MPCODE_H
#define MPCODE_MPCODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MPCODE_BUILDING_LIBRARY)
#    define MPC_API __declspec(dllexport)
#  else
#    define MPC_API __declspec(dllimport)
#  endif
#else
#  define MPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpc_status {
  MPC_OK = 0,
  MPC_ERR_INVALID_ARGUMENT = 1,
  MPC_ERR_CONSTRUCTION = 2,
  MPC_ERR_NUMERICAL = 3,
  MPC_ERR_LIMIT = 4,
  MPC_ERR_IO = 5,
  MPC_ERR_INTERNAL = 6
} mpc_status;

typedef enum mpc_family {
  MPC_FAMILY_APN = 0,
  MPC_FAMILY_RM1 = 1,
  MPC_FAMILY_IID = 2
} mpc_family;

typedef struct mpc_code mpc_code;
typedef struct mpc_spectrum mpc_spectrum;
typedef struct mpc_oracle mpc_oracle;

MPC_API const char* mpc_version(void);
MPC_API const char* mpc_last_error(void);
MPC_API void mpc_string_free(char* str);

/* Families by name: "apn", "rm1", "iid". */
MPC_API mpc_status mpc_family_parse(const char* name, mpc_family* out);
/* Code length at degree m and p = round(y n) with ties rounded down. */
MPC_API mpc_status mpc_family_shape(mpc_family family, int m, double y, size_t* n, size_t* p);

/* ---- codes ---- */
MPC_API mpc_status mpc_code_apn(int m, int exponent, mpc_code** out);
MPC_API mpc_status mpc_code_rm1(int m, mpc_code** out);
/* rows: k strings of '0'/'1' characters, each of length n. */
MPC_API mpc_status mpc_code_from_rows(const char* label, const char* const* rows, size_t k, mpc_code** out);
MPC_API void mpc_code_free(mpc_code* code);
MPC_API mpc_status mpc_code_shape(const mpc_code* code, size_t* n, size_t* k);
/* *lower_bound is set to 1 when no dependency of weight <= cap exists and
 * *value is then cap + 1. */
MPC_API mpc_status mpc_code_dual_distance(const mpc_code* code, int cap, int* value, int* lower_bound);
MPC_API mpc_status mpc_code_descriptor_json(const mpc_code* code, char** out);

/* ---- spectra ---- */
/* One sample matrix from the family at degree m with p = round(y n); its
 * Gram eigenvalues in ascending order. */
MPC_API mpc_status mpc_spectrum_sample(mpc_family family, int m, int exponent, double y, uint64_t seed,
                                       mpc_spectrum** out);
MPC_API void mpc_spectrum_free(mpc_spectrum* spectrum);
MPC_API size_t mpc_spectrum_size(const mpc_spectrum* spectrum);
MPC_API size_t mpc_spectrum_columns(const mpc_spectrum* spectrum);
MPC_API double mpc_spectrum_ratio(const mpc_spectrum* spectrum);
MPC_API const double* mpc_spectrum_eigenvalues(const mpc_spectrum* spectrum);
MPC_API mpc_status mpc_spectrum_stieltjes(const mpc_spectrum* spectrum, double re, double im,
                                          double* out_re, double* out_im);

/* ---- Marchenko-Pastur law ---- */
MPC_API mpc_status mpc_mp_edges(double y, double* a, double* b);
MPC_API mpc_status mpc_mp_density(double y, double x, double* out);
MPC_API mpc_status mpc_mp_cdf(double y, double x, double* out);
MPC_API mpc_status mpc_mp_stieltjes(double y, double re, double im, double* out_re, double* out_im);

/* ---- distances ---- */
MPC_API mpc_status mpc_esd_cdf(const double* atoms, size_t count, double x, double* out);
MPC_API mpc_status mpc_interval_sup_distance(const double* atoms, size_t count, double y, double* out);

/* ---- exact moment oracles ---- */
MPC_API mpc_status mpc_oracle_create(const mpc_code* code, mpc_oracle** out);
MPC_API void mpc_oracle_free(mpc_oracle* oracle);
MPC_API mpc_status mpc_oracle_pair(const mpc_oracle* oracle, size_t j, size_t k, int64_t* num, int64_t* den);
MPC_API mpc_status mpc_oracle_quad(const mpc_oracle* oracle, size_t j, size_t t, size_t k, size_t s,
                                   int64_t* num, int64_t* den);
/* a: string of '0'/'1' characters of length n. *in_dual reports G a^T = 0. */
MPC_API mpc_status mpc_oracle_character_sum(const mpc_oracle* oracle, const char* a,
                                            int64_t* num, int64_t* den, int* in_dual);

/* ---- experiments ---- */
typedef struct mpc_experiment_config {
  mpc_family family;
  int exponent;
  const int* m_values;
  size_t m_count;
  double y;
  size_t trials;
  uint64_t master_seed;
  double tau;
  unsigned threads; /* 0 = machine parallelism */
} mpc_experiment_config;

typedef struct mpc_identity_report {
  size_t instances;
  double max_diagonal_residual;
  double max_trace_residual;
  double max_wald_residual;
  size_t interlacing_violations;
  double max_interlacing_ratio;
} mpc_identity_report;

typedef struct mpc_rate_summary {
  double slope;
  double intercept;
  double r_squared;
  size_t median_inversions;
} mpc_rate_summary;

/* Distance sweep plus log-log fit. json/csv receive the persisted documents
 * (either may be NULL). The fit needs at least three m values; with fewer,
 * summary fields are zero and the JSON "fit" is null. */
MPC_API mpc_status mpc_run_rate_fit(const mpc_experiment_config* config, mpc_rate_summary* summary,
                                    char** json, char** csv);
MPC_API mpc_status mpc_run_delta_scaling(const mpc_experiment_config* config, double re, double im,
                                         int self_test, char** json);
MPC_API mpc_status mpc_run_concentration(const mpc_experiment_config* config, double re, double im,
                                         const double* r_grid, size_t r_count, char** json,
                                         int* all_within);
MPC_API mpc_status mpc_run_identity_suite(uint64_t seed, size_t instances, double tau,
                                          mpc_identity_report* out);

#ifdef __cplusplus
}
#endif

#endif /* MPCODE_MPCODE_H */
