/*
 * Copyright 2026 The qudit-eet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * qudit_eet: excitation energy transfer and entanglement between two coupled
 * four-level chromophores.
 *
 * Conventions:
 *  - Every function returns a qeet_status. On failure the output arguments are
 *    left untouched and qeet_last_error() describes the problem (per thread).
 *  - Objects are opaque handles created by qeet_*_create / compute functions
 *    and released with the matching qeet_*_destroy. Destroy accepts NULL.
 *  - Handles are immutable once created and may be read from several threads.
 *  - Array outputs follow (buffer, capacity, *count): *count always receives
 *    the required length; QEET_BUFFER_TOO_SMALL is returned when capacity is
 *    insufficient. Pass buffer = NULL, capacity = 0 to query the length.
 */

#ifndef QUDIT_EET_H
#define QUDIT_EET_H

#include <stddef.h>

#if defined(QEET_BUILDING_LIBRARY)
#define QEET_API __attribute__((visibility("default")))
#else
#define QEET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qeet_status {
  QEET_OK = 0,
  QEET_INVALID_ARGUMENT = 1,
  QEET_NULL_POINTER = 2,
  QEET_BUFFER_TOO_SMALL = 3,
  QEET_OUT_OF_RANGE = 4,
  QEET_NUMERICAL_ERROR = 5,
  QEET_INTERNAL_ERROR = 6
} qeet_status;

typedef enum qeet_truncation {
  QEET_FOUR_LEVEL = 0,
  QEET_THREE_LEVEL = 1,
  QEET_TWO_LEVEL = 2,
  QEET_SINGLE_EXCITON = 3
} qeet_truncation;

/* Dimensionless drive and coupling parameters. */
typedef struct qeet_params {
  double gamma;       /* E0 d T / hbar, >= 0 */
  double delta;       /* omega T */
  double gamma2_max;  /* end of the |J| t / hbar axis, >= 0 */
  double r;           /* omega hbar / |J|, >= 0 */
  double drive_ratio; /* omega_L / omega */
} qeet_params;

typedef struct qeet_max_entanglement {
  double e_max;
  double gamma2;
  double coarse_e_max;
  double coarse_gamma2;
  double max_neighbour_step;
  int grid_resolved;
  int converged;
  size_t densifications; /* midpoint insertions applied to the grid */
  size_t grid_samples;   /* samples in the grid the maximum came from */
} qeet_max_entanglement;

typedef struct qeet_sweep_row {
  double gamma;
  double populations[4];
  double e_max;
  double e_max_gamma2;
  qeet_max_entanglement detail;
} qeet_sweep_row;

typedef struct qeet_surface_cell {
  double gamma;
  double gamma2;
  double entropy;
} qeet_surface_cell;

/* Laser pulse in SI units. */
typedef struct qeet_pulse {
  double energy;        /* J */
  double duration;      /* s */
  double cross_section; /* m^2 */
  double dipole;        /* C m */
} qeet_pulse;

/* Four-site Frenkel inputs: cm^-1 and Debye. */
typedef struct qeet_estimation_inputs {
  double block_a[3];           /* e1, e2, v */
  double block_b[3];           /* e1, e2, v */
  double site_coupling[16];    /* 4x4 row-major, sites A1 A2 B1 B2 */
  double site_dipoles[4][3];   /* A1, A2, B1, B2 */
  double level3_ratio;         /* assigned omega3 / omega1 */
  double dipole31_ratio;       /* assigned |d31| / |d10| */
  double assigned_couplings[4];/* J13_31, J11_30, J11_03, J12_30 over J */
} qeet_estimation_inputs;

typedef struct qeet_model qeet_model;
typedef struct qeet_trace qeet_trace;
typedef struct qeet_sweep qeet_sweep;
typedef struct qeet_surface qeet_surface;
typedef struct qeet_comparison qeet_comparison;
typedef struct qeet_estimation qeet_estimation;

QEET_API const char* qeet_version(void);
/* Message for the last failure on the calling thread; "" if none. */
QEET_API const char* qeet_last_error(void);
QEET_API const char* qeet_status_string(qeet_status status);
QEET_API const char* qeet_truncation_name(qeet_truncation mode);
QEET_API size_t qeet_truncation_dimension(qeet_truncation mode);

/* ---- model ------------------------------------------------------------ */

QEET_API qeet_status qeet_model_default(qeet_model** out);
/* Array lengths must match the dimension of `mode` (levels d; dipoles 3/2/1;
 * couplings 8/4/1). */
QEET_API qeet_status qeet_model_create(const double* level_ratios, size_t level_count,
                                       const double* dipole_ratios, size_t dipole_count,
                                       const double* coupling_ratios, size_t coupling_count,
                                       double coupling_sign, qeet_truncation mode,
                                       qeet_model** out);
/* `model` must be four-level. */
QEET_API qeet_status qeet_model_truncate(const qeet_model* model, qeet_truncation mode,
                                         qeet_model** out);
QEET_API void qeet_model_destroy(qeet_model* model);
QEET_API qeet_status qeet_model_truncation(const qeet_model* model, qeet_truncation* out);
QEET_API qeet_status qeet_model_dimension(const qeet_model* model, size_t* out);
QEET_API qeet_status qeet_model_coupling_sign(const qeet_model* model, double* out);
QEET_API qeet_status qeet_model_level_ratios(const qeet_model* model, double* buffer,
                                             size_t capacity, size_t* count);
QEET_API qeet_status qeet_model_dipole_ratios(const qeet_model* model, double* buffer,
                                              size_t capacity, size_t* count);
QEET_API qeet_status qeet_model_coupling_ratios(const qeet_model* model, double* buffer,
                                                size_t capacity, size_t* count);

/* ---- params ----------------------------------------------------------- */

QEET_API qeet_status qeet_params_default(qeet_params* out);
QEET_API qeet_status qeet_params_validate(const qeet_params* params);

/* ---- excitation ------------------------------------------------------- */

/* Post-pulse state of qudit A as separate real/imaginary parts. */
QEET_API qeet_status qeet_prepare_initial_state(const qeet_model* model, const qeet_params* params,
                                                double* re, double* im, size_t capacity,
                                                size_t* count);
QEET_API qeet_status qeet_initial_populations(const qeet_model* model, const qeet_params* params,
                                              double* buffer, size_t capacity, size_t* count);

/* ---- dynamics and entanglement ----------------------------------------- */

/* Entropy trace on `samples` uniform points over [0, params->gamma2_max].
 * threads = 0 uses all hardware threads; results do not depend on it. */
QEET_API qeet_status qeet_trace_compute(const qeet_model* model, const qeet_params* params,
                                        size_t samples, unsigned threads, qeet_trace** out);
QEET_API void qeet_trace_destroy(qeet_trace* trace);
QEET_API size_t qeet_trace_size(const qeet_trace* trace);
QEET_API double qeet_trace_gamma(const qeet_trace* trace);
QEET_API qeet_status qeet_trace_sample(const qeet_trace* trace, size_t index, double* gamma2,
                                       double* entropy);

QEET_API qeet_status qeet_max_entanglement_compute(const qeet_model* model,
                                                   const qeet_params* params, size_t samples,
                                                   unsigned threads, qeet_max_entanglement* out);

/* Largest |<psi|H|psi> - E0| / max(|E0|, 1) and | |psi| - 1 | over the grid. */
QEET_API qeet_status qeet_conservation_check(const qeet_model* model, const qeet_params* params,
                                             size_t samples, double* max_energy_drift,
                                             double* max_norm_drift);

/* ---- experiments ------------------------------------------------------ */

QEET_API qeet_status qeet_sweep_gamma(const qeet_model* model, const qeet_params* params,
                                      const double* gammas, size_t gamma_count, size_t samples,
                                      unsigned threads, qeet_sweep** out);
QEET_API void qeet_sweep_destroy(qeet_sweep* sweep);
QEET_API size_t qeet_sweep_size(const qeet_sweep* sweep);
QEET_API qeet_status qeet_sweep_get(const qeet_sweep* sweep, size_t index, qeet_sweep_row* out);
QEET_API qeet_status qeet_sweep_largest_drop(const qeet_sweep* sweep, double* drop,
                                             size_t* index);

QEET_API qeet_status qeet_surface_compute(const qeet_model* model, const qeet_params* params,
                                          const double* gammas, size_t gamma_count,
                                          size_t samples, unsigned threads, qeet_surface** out);
QEET_API void qeet_surface_destroy(qeet_surface* surface);
QEET_API size_t qeet_surface_size(const qeet_surface* surface);
QEET_API qeet_status qeet_surface_get(const qeet_surface* surface, size_t index,
                                      qeet_surface_cell* out);

/* `model` must be four-level; traces cover all four qeet_truncation modes. */
QEET_API qeet_status qeet_compare_truncations(const qeet_model* model, const qeet_params* params,
                                              size_t samples, unsigned threads,
                                              qeet_comparison** out);
QEET_API void qeet_comparison_destroy(qeet_comparison* comparison);
/* Borrowed; valid until the comparison is destroyed. */
QEET_API qeet_status qeet_comparison_trace(const qeet_comparison* comparison,
                                           qeet_truncation mode, const qeet_trace** out);
QEET_API qeet_status qeet_comparison_maximum(const qeet_comparison* comparison,
                                             qeet_truncation mode, qeet_max_entanglement* out);
QEET_API qeet_status qeet_comparison_max_deviation(const qeet_comparison* comparison,
                                                   double* out);

/* ---- estimation ------------------------------------------------------- */

QEET_API qeet_status qeet_estimation_inputs_default(qeet_estimation_inputs* out);
QEET_API qeet_status qeet_estimate(const qeet_estimation_inputs* inputs, qeet_estimation** out);
QEET_API void qeet_estimation_destroy(qeet_estimation* estimation);
/* New four-level model carrying the computed ratios. */
QEET_API qeet_status qeet_estimation_model(const qeet_estimation* estimation, qeet_model** out);
QEET_API size_t qeet_estimation_entry_count(const qeet_estimation* estimation);
/* `key` is borrowed; valid until the estimation is destroyed. */
QEET_API qeet_status qeet_estimation_entry(const qeet_estimation* estimation, size_t index,
                                           const char** key, double* value);

QEET_API qeet_status qeet_pulse_default(qeet_pulse* out);
QEET_API qeet_status qeet_gamma_from_pulse(const qeet_pulse* pulse, double* gamma);
QEET_API double qeet_wavenumber_to_angular(double wavenumber);
QEET_API double qeet_debye(void);

#ifdef __cplusplus
}
#endif

#endif /* QUDIT_EET_H */
