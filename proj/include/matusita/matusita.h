/*
 * Copyright 2026 The matusita authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libmatusita: exact and estimated Matusita overlap between
 * two normal populations, and the seeded Monte Carlo study built on it.
 *
 * Every function returns an mt_status. On failure a human readable message
 * is available from mt_last_error() until the next call on the same thread.
 * Objects are opaque handles released with the matching *_destroy function.
 * Strings returned through char** are owned by the caller and released with
 * mt_string_free().
 */
#ifndef MATUSITA_H
#define MATUSITA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MT_API __declspec(dllexport)
#elif defined(__GNUC__)
#define MT_API __attribute__((visibility("default")))
#else
#define MT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mt_status {
  MT_OK = 0,
  MT_ERR_INVALID_PARAMS = 1,
  MT_ERR_DEGENERATE_SAMPLE = 2,
  MT_ERR_QUADRATURE_FAILURE = 3,
  MT_ERR_EMPTY_INPUT = 4,
  MT_ERR_MISSING_CELL = 5,
  MT_ERR_PARSE = 6,
  MT_ERR_TOO_FEW_OBSERVATIONS = 7,
  MT_ERR_IO = 8,
  MT_ERR_NULL_ARGUMENT = 9,
  MT_ERR_INTERNAL = 10
} mt_status;

typedef enum mt_estimator {
  MT_EST_RHO1_EQUAL_VARIANCE = 0,
  MT_EST_RHO2_EQUAL_MEANS = 1,
  MT_EST_PROPOSED_X = 2,
  MT_EST_PROPOSED_Y = 3,
  MT_EST_PROPOSED_AVG = 4,
  MT_EST_KERNEL = 5
} mt_estimator;

#define MT_ESTIMATOR_COUNT 6
#define MT_DEFAULT_SEED 20240001ULL

typedef enum mt_format { MT_FORMAT_TEXT = 0, MT_FORMAT_CSV = 1 } mt_format;

/* One normal population; sigma is the standard deviation. */
typedef struct mt_normal {
  double mu;
  double sigma;
} mt_normal;

typedef struct mt_samples mt_samples;
typedef struct mt_scenario mt_scenario;
typedef struct mt_results mt_results;
typedef struct mt_diff mt_diff;

/* One row of a simulation result. table_id points into the results handle. */
typedef struct mt_metric_cell {
  const char* table_id;
  unsigned scenario;
  mt_normal f1;
  mt_normal f2;
  mt_estimator estimator;
  size_t n1;
  size_t n2;
  double exact_rho;
  double mean_estimate;
  double rb;
  double rmse_truth;
  double rmse_mean;
  size_t failures;
} mt_metric_cell;

typedef struct mt_diff_summary {
  size_t checked;
  size_t rb_passed;
  size_t rmse_passed;
  size_t passed;
  int systematic; /* nonzero when a column fails in more than half its cells */
} mt_diff_summary;

MT_API const char* mt_status_string(mt_status status);
MT_API const char* mt_last_error(void);
MT_API const char* mt_version(void);
MT_API void mt_string_free(char* s);

MT_API const char* mt_estimator_name(mt_estimator e);
MT_API mt_status mt_estimator_from_name(const char* name, mt_estimator* out);

/* Exact overlap. */
MT_API mt_status mt_rho_equal_variance(double mu1, double mu2, double sigma, double* out);
MT_API mt_status mt_rho_equal_means(double c, double* out);
MT_API mt_status mt_rho_general(mt_normal p1, mt_normal p2, double* out);
MT_API mt_status mt_rho_quadrature(mt_normal p1, mt_normal p2, double tol, double* out);

/* Samples and estimators. */
MT_API mt_status mt_samples_create(const double* x, size_t n1, const double* y, size_t n2,
                                   mt_samples** out);
MT_API mt_status mt_samples_read_files(const char* path_x, const char* path_y,
                                       mt_samples** out);
MT_API void mt_samples_destroy(mt_samples* s);
MT_API size_t mt_samples_n1(const mt_samples* s);
MT_API size_t mt_samples_n2(const mt_samples* s);

MT_API mt_status mt_estimate(const mt_samples* s, mt_estimator e, double* out);
/* Writes MT_ESTIMATOR_COUNT values in mt_estimator order. */
MT_API mt_status mt_estimate_all(const mt_samples* s, double* out);
/* Grid integral of sqrt(f1 f2) for the two kernel density estimates. */
MT_API mt_status mt_kernel_overlap_integral(const mt_samples* s, double* out);

/* Scenarios and simulation. */
MT_API mt_status mt_scenario_create(mt_normal f1, mt_normal f2, size_t replications,
                                    uint64_t seed, mt_scenario** out);
MT_API mt_status mt_scenario_add_size(mt_scenario* sc, size_t n1, size_t n2);
MT_API mt_status mt_scenario_set_estimators(mt_scenario* sc, const mt_estimator* tags,
                                            size_t count);
MT_API mt_status mt_scenario_set_seed(mt_scenario* sc, uint64_t seed);
MT_API mt_status mt_scenario_load_config(const char* path, mt_scenario** out);
MT_API uint64_t mt_scenario_seed(const mt_scenario* sc);
MT_API void mt_scenario_destroy(mt_scenario* sc);

/* workers == 0 selects the hardware concurrency; results do not depend on it. */
MT_API mt_status mt_simulate(const mt_scenario* sc, unsigned workers, mt_results** out);
MT_API mt_status mt_reproduce(uint64_t seed, size_t replications, unsigned workers,
                              mt_results** out);
MT_API size_t mt_results_count(const mt_results* r);
MT_API mt_status mt_results_get(const mt_results* r, size_t index, mt_metric_cell* out);
MT_API mt_status mt_results_render(const mt_results* r, mt_format format, char** out);
MT_API mt_status mt_results_parse_csv(const char* csv, mt_results** out);
MT_API void mt_results_destroy(mt_results* r);

/* Golden-table diff. replications scales the calibrated tolerances by
 * sqrt(1000 / replications). */
MT_API mt_status mt_diff_golden(const mt_results* r, size_t replications, mt_diff** out);
MT_API mt_status mt_diff_golden_fixed(const mt_results* r, double tol_rb, double tol_rmse,
                                      mt_diff** out);
MT_API mt_status mt_diff_summary_get(const mt_diff* d, mt_diff_summary* out);
MT_API mt_status mt_diff_render(const mt_diff* d, mt_format format, char** out);
MT_API void mt_diff_destroy(mt_diff* d);

/* Density profile csv with header x,f1,f2,sqrt_f1f2. */
MT_API mt_status mt_profile_csv(mt_normal p1, mt_normal p2, size_t points, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MATUSITA_H */
