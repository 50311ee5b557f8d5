/* Copyright 2026 The llscond Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to llscond: condition numbers of full-column-rank linear
 * least-squares problems min ||b - A x||_2.
 *
 * Every fallible call returns an llscond_status. On failure the thread-local
 * message is available from llscond_last_error(). Handles are opaque and must
 * be released with the matching *_destroy function. Matrices are column-major.
 */
#ifndef LLSCOND_LLSCOND_H
#define LLSCOND_LLSCOND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LLSCOND_API __declspec(dllexport)
#else
#define LLSCOND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum llscond_status {
  LLSCOND_OK = 0,
  LLSCOND_E_INVALID_ARGUMENT = 1,
  LLSCOND_E_IO = 2,
  LLSCOND_E_PARSE = 3,
  LLSCOND_E_DIMENSION_MISMATCH = 4,
  LLSCOND_E_NON_FINITE = 5,
  LLSCOND_E_RANK_DEFICIENT = 6,
  LLSCOND_E_ZERO_RHS = 7,
  LLSCOND_E_ZERO_SOLUTION = 8,
  LLSCOND_E_FACTORIZATION_FAILURE = 9,
  LLSCOND_E_INTERNAL = 10
} llscond_status;

typedef struct llscond_problem llscond_problem;
typedef struct llscond_report llscond_report;

LLSCOND_API const char* llscond_version(void);
/* Message of the last failed call on this thread, "" if none. */
LLSCOND_API const char* llscond_last_error(void);
/* snake_case name, e.g. "rank_deficient". */
LLSCOND_API const char* llscond_status_name(llscond_status s);

/* ---- problems ---------------------------------------------------------- */

LLSCOND_API llscond_status llscond_problem_create(size_t rows, size_t cols, const double* a,
                                                  const double* b, llscond_problem** out);
/* MatrixMarket (array or coordinate, real general) or headered CSV matrix;
 * rhs as one-column plain text, CSV or MatrixMarket. */
LLSCOND_API llscond_status llscond_problem_load(const char* matrix_path, const char* rhs_path,
                                                llscond_problem** out);
LLSCOND_API void llscond_problem_destroy(llscond_problem* p);
LLSCOND_API size_t llscond_problem_rows(const llscond_problem* p);
LLSCOND_API size_t llscond_problem_cols(const llscond_problem* p);
/* Copies A (rows*cols, column-major) and b (rows). Either pointer may be NULL. */
LLSCOND_API llscond_status llscond_problem_data(const llscond_problem* p, double* a, double* b);

/* ---- analysis ---------------------------------------------------------- */

typedef struct llscond_analysis_options {
  int default_scales; /* nonzero: (||A||_2, ||b||_2, ||x||_2) */
  double phi_A;
  double phi_B;
  double phi_X;
  int compute_exact;
  size_t restarts;
  size_t max_iterations;
  double step_tolerance;
  double value_tolerance;
  uint64_t seed;
  double gratton_alpha;
  double gratton_beta;
  double eps; /* perturbation level recorded with the catalog */
} llscond_analysis_options;

LLSCOND_API void llscond_analysis_options_init(llscond_analysis_options* o);
LLSCOND_API llscond_status llscond_analyze(const llscond_problem* p,
                                           const llscond_analysis_options* o,
                                           llscond_report** out);
LLSCOND_API void llscond_report_destroy(llscond_report* r);

typedef struct llscond_summary {
  size_t rows;
  size_t cols;
  double kappa;
  double nu;
  double tan_theta;
  double sec_theta;
  double sigma_min;
  double sigma_max;
  double norm_x;
  double norm_r;
  double norm_b;
  double phi_A;
  double phi_B;
  double phi_X;
  double chi_b;
  double chi_A_lower;
  double chi_A_upper;
  int has_exact;
  double chi_A_exact;
  int exact_certified;
  size_t exact_restart;
  size_t exact_iterations;
  double overestimate_ratio; /* textbook bound / attainable reference */
  double catalog_eps;
} llscond_summary;

LLSCOND_API llscond_status llscond_report_summary(const llscond_report* r, llscond_summary* out);
/* x has cols entries, residual has rows entries. Either may be NULL. */
LLSCOND_API llscond_status llscond_report_solution(const llscond_report* r, double* x,
                                                   double* residual);
/* Unit maximizing direction (cols entries); LLSCOND_E_INVALID_ARGUMENT if the
 * exact value was not computed. */
LLSCOND_API llscond_status llscond_report_maximizer(const llscond_report* r, double* dx);

typedef struct llscond_catalog_entry {
  const char* name;        /* static string */
  double value;
  const char* norm_regime; /* "spectral", "frobenius", "joint-frobenius" */
  const char* status;      /* "exact", "approx", "overestimate" */
} llscond_catalog_entry;

LLSCOND_API size_t llscond_report_catalog_size(const llscond_report* r);
LLSCOND_API llscond_status llscond_report_catalog_entry(const llscond_report* r, size_t i,
                                                        llscond_catalog_entry* out);

/* ---- perturbation experiments ----------------------------------------- */

typedef struct llscond_perturb_options {
  int default_scales;
  double phi_A;
  double phi_B;
  double phi_X;
  size_t trials;
  double eps;
  uint64_t seed;
  double slack;
} llscond_perturb_options;

typedef struct llscond_trial_summary {
  size_t trials;
  double max_ratio;
  double mean_ratio;
  double eps_used;
  double slack;
  size_t violations;
  size_t failures;
  int first_order_regime;
} llscond_trial_summary;

LLSCOND_API void llscond_perturb_options_init(llscond_perturb_options* o);
LLSCOND_API llscond_status llscond_perturb(const llscond_problem* p,
                                           const llscond_perturb_options* o,
                                           llscond_trial_summary* out);

/* Perturbation of spectral norm eps*||A||_2 aligned with the unit direction
 * dx (cols entries; NULL selects the sigma_min right singular vector).
 * Writes the achieved (||dx||/||x||)/eps and, if dA is not NULL, the
 * perturbation (rows*cols, column-major). */
LLSCOND_API llscond_status llscond_worst_case(const llscond_problem* p, double eps,
                                              const double* direction, double* dA,
                                              double* achieved_ratio);

/* Largest scaled ||dx||/||db|| over singular-vector and random probes. */
LLSCOND_API llscond_status llscond_finite_difference_chi_b(const llscond_problem* p,
                                                           const llscond_perturb_options* o,
                                                           size_t random_probes, double* out);

/* ---- built-in example family ------------------------------------------
 * A = [1 0; 0 alpha; 0 0], b = (beta cos phi, beta sin phi, 1) and the
 * perturbation epsilon in entry (3, 2). */

typedef struct llscond_example_spec {
  double alpha;
  double beta;
  double phi;
  double epsilon;
} llscond_example_spec;

typedef struct llscond_example_info {
  double kappa;
  double nu;
  double tan_theta;
  double sec_theta;
  double x[2];
  double bjorck_upper;
  double malyshev_lower;
  double chi_b;
  double predicted_relative_change;
  double observed_relative_change;
  double perturbed_x2;
  size_t warning_count;
} llscond_example_info;

LLSCOND_API void llscond_example_spec_init(llscond_example_spec* s);
/* "alpha=0.1,beta=1,phi=pi/10[,eps=1e-8]" applied on top of *s. */
LLSCOND_API llscond_status llscond_example_spec_parse(const char* text, llscond_example_spec* s);
LLSCOND_API llscond_status llscond_example_problem(const llscond_example_spec* s,
                                                   llscond_problem** out);
LLSCOND_API llscond_status llscond_example_info_get(const llscond_example_spec* s,
                                                    llscond_example_info* out);
/* i-th warning for *s, or NULL. Static storage. */
LLSCOND_API const char* llscond_example_warning(const llscond_example_spec* s, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* LLSCOND_LLSCOND_H */
