// Copyright 2026 The narrowband Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the narrowband composite-pulse library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_destroy call. Every fallible function returns an nb_status;
 * on failure nb_last_error_message() describes the problem for the calling
 * thread. Angles are radians throughout. A pulse (theta, phi) rotates the
 * addressed qubit by theta about the in-plane axis (cos phi, sin phi, 0);
 * pulse 0 is applied first.
 */

#ifndef NARROWBAND_NARROWBAND_H
#define NARROWBAND_NARROWBAND_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(NB_BUILDING_LIBRARY)
#define NB_API __declspec(dllexport)
#else
#define NB_API __declspec(dllimport)
#endif
#else
#define NB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nb_status {
  NB_OK = 0,
  NB_INVALID_ARGUMENT = 1,
  NB_NOT_NARROWBAND = 2,
  NB_DEGENERATE_AXIS = 3,
  NB_INVALID_PARAMS = 4,
  NB_NO_SOLUTION = 5,
  NB_RANGE_ERROR = 6,
  NB_IO_ERROR = 7,
  NB_PARSE_ERROR = 8,
  NB_BUFFER_TOO_SMALL = 9,
  NB_INTERNAL_ERROR = 10
} nb_status;

typedef enum nb_format { NB_FORMAT_JSON = 0, NB_FORMAT_CSV = 1 } nb_format;

typedef enum nb_objective {
  NB_OBJECTIVE_AREA = 0,
  NB_OBJECTIVE_INFIDELITY = 1
} nb_objective;

typedef enum nb_subfamily {
  NB_SUBFAMILY_T_MIN = 0,
  NB_SUBFAMILY_E_MIN = 1
} nb_subfamily;

typedef struct nb_sequence nb_sequence;
typedef struct nb_sweep nb_sweep;

typedef struct nb_vector3 {
  double x, y, z;
} nb_vector3;

typedef struct nb_complex {
  double re, im;
} nb_complex;

/* Row-major 2x2 matrix. */
typedef struct nb_unitary2 {
  nb_complex m[2][2];
} nb_unitary2;

typedef struct nb_axis_angle {
  nb_vector3 axis; /* unit vector unless degenerate */
  double angle;    /* [0, 2pi] */
  int degenerate;
} nb_axis_angle;

typedef struct nb_task1_params {
  double lambda_x, lambda_y;
  double theta_t, phi_t;
  double delta; /* signed tilt, |delta| <= pi/2 */
  double beta;  /* phase advance of the inner pulses */
} nb_task1_params;

typedef struct nb_optimization_result {
  nb_task1_params params;
  nb_objective objective;
  double objective_value;
  int iterations;
  int converged;
} nb_optimization_result;

typedef struct nb_table_row {
  nb_subfamily subfamily;
  double net_rotation;
  double lambda_x, lambda_y;
  double thetas[5];
  double phis[5];
  double pulse_area;
  double infidelity_coeff;
} nb_table_row;

typedef struct nb_verify_report {
  size_t index;
  int pass;
  double max_delta;
  char worst_field[32];
  char message[256]; /* empty unless synthesis failed */
} nb_verify_report;

typedef struct nb_contour_point {
  double lambda_x, lambda_y;
  double net_angle;
  double pulse_area;
  double infidelity_coeff;
} nb_contour_point;

typedef struct nb_beam {
  double waist_radius_um; /* 1/e^2 intensity radius */
  double center_um;
} nb_beam;

/* --- diagnostics ------------------------------------------------------- */

NB_API const char *nb_version(void);
NB_API const char *nb_status_string(nb_status status);
NB_API const char *nb_last_error_message(void);

/* --- su(2) ------------------------------------------------------------- */

NB_API nb_status nb_expm(nb_vector3 generator, nb_unitary2 *out);
NB_API nb_status nb_unitary_axis_angle(const nb_unitary2 *u, nb_axis_angle *out);
NB_API nb_status nb_trace_fidelity(const nb_unitary2 *u, const nb_unitary2 *v,
                                   double *out);

/* --- sequences --------------------------------------------------------- */

NB_API nb_status nb_sequence_create(const char *name, nb_sequence **out);
NB_API void nb_sequence_destroy(nb_sequence *seq);
NB_API nb_status nb_sequence_clone(const nb_sequence *seq, nb_sequence **out);
NB_API nb_status nb_sequence_append(nb_sequence *seq, double theta, double phi);
NB_API size_t nb_sequence_length(const nb_sequence *seq);
NB_API nb_status nb_sequence_pulse(const nb_sequence *seq, size_t index,
                                   double *theta, double *phi);
/* Valid until the sequence is modified or destroyed. */
NB_API const char *nb_sequence_name(const nb_sequence *seq);
NB_API nb_status nb_sequence_set_name(nb_sequence *seq, const char *name);
NB_API nb_status nb_sequence_set_target(nb_sequence *seq, double theta,
                                        double phi);
/* *has_target is 0 when no target is attached; theta/phi may be NULL. */
NB_API nb_status nb_sequence_target(const nb_sequence *seq, int *has_target,
                                    double *theta, double *phi);

/* Propagator with every generator scaled by eps; eps = 1 is the addressed
 * qubit. */
NB_API nb_status nb_sequence_propagator(const nb_sequence *seq, double eps,
                                        nb_unitary2 *out);
NB_API nb_status nb_sequence_net_axis(const nb_sequence *seq,
                                      nb_axis_angle *out);
NB_API nb_status nb_sequence_f1(const nb_sequence *seq, nb_vector3 *out);
NB_API nb_status nb_sequence_f2(const nb_sequence *seq, nb_vector3 *out);
NB_API nb_status nb_sequence_total_area(const nb_sequence *seq, double *out);
NB_API nb_status nb_sequence_infidelity(const nb_sequence *seq, double eps,
                                        double *out);
NB_API nb_status nb_sequence_infidelity_coefficient(const nb_sequence *seq,
                                                    double *out);
NB_API nb_status nb_sequence_suppression_order(const nb_sequence *seq,
                                               double eps_lo, double eps_hi,
                                               double *out);
NB_API nb_status nb_sequence_phase_advance(const nb_sequence *seq, double beta,
                                           nb_sequence **out);
NB_API nb_status nb_sequence_dilate(const nb_sequence *seq, double lx,
                                    double ly, nb_sequence **out);

/* --- sequence files ---------------------------------------------------- */

NB_API nb_status nb_sequence_write(const nb_sequence *seq, const char *path,
                                   nb_format format);
/* Format taken from the extension: ".csv" or JSON otherwise. */
NB_API nb_status nb_sequence_read(const char *path, nb_sequence **out);
/* Writes at most `capacity` bytes including the terminator; *needed gets the
 * full size including the terminator. Returns NB_BUFFER_TOO_SMALL when
 * truncated. buf may be NULL when capacity is 0. */
NB_API nb_status nb_sequence_serialize(const nb_sequence *seq, nb_format format,
                                       char *buf, size_t capacity,
                                       size_t *needed);
NB_API nb_status nb_sequence_deserialize(const char *text, nb_format format,
                                         nb_sequence **out);

/* --- families ---------------------------------------------------------- */

NB_API nb_status nb_sk1(double theta_t, double phi_t, nb_sequence **out);
NB_API nb_status nb_ask1(double lambda_x, double lambda_y, nb_sequence **out);
NB_API nb_status nb_task1_params_for(double lambda_x, double lambda_y,
                                     double theta_t, double phi_t,
                                     nb_task1_params *out);
NB_API nb_status nb_task1(const nb_task1_params *params, nb_sequence **out);

/* --- optimizer --------------------------------------------------------- */

NB_API nb_status nb_solve_constraint(double lambda_x, double theta_t,
                                     double *lambda_y);
NB_API nb_status nb_optimize(nb_objective objective, double theta_t,
                             double phi_t, nb_optimization_result *out);
/* Fills up to `capacity` points of the n x n grid; *count gets n*n. */
NB_API nb_status nb_contour_grid(int n, nb_contour_point *out, size_t capacity,
                                 size_t *count);

/* --- reference table --------------------------------------------------- */

NB_API size_t nb_reference_row_count(void);
NB_API nb_status nb_reference_row(size_t index, nb_table_row *out);
/* Recomputes the row at full precision with the subfamily's optimizer. */
NB_API nb_status nb_reproduce_row(size_t index, nb_table_row *out);
NB_API nb_status nb_verify_row(size_t index, nb_verify_report *out);

/* --- addressing simulation --------------------------------------------- */

NB_API nb_status nb_inversion(const nb_sequence *seq, double eps,
                              double detection_fidelity, double *out);
NB_API nb_status nb_beam_epsilon(const nb_beam *beam, double x_um, double *out);
NB_API nb_status nb_epsilon_sweep(const nb_sequence *const *seqs, size_t count,
                                  double lo, double hi, int points,
                                  double detection_fidelity, nb_sweep **out);
NB_API nb_status nb_position_sweep(const nb_sequence *const *seqs,
                                   size_t count, const nb_beam *beam,
                                   double lo_um, double hi_um, int points,
                                   double detection_fidelity, nb_sweep **out);
NB_API void nb_sweep_destroy(nb_sweep *sweep);
NB_API size_t nb_sweep_rows(const nb_sweep *sweep);
NB_API size_t nb_sweep_columns(const nb_sweep *sweep);
/* "eps" or "x_um". */
NB_API const char *nb_sweep_abscissa(const nb_sweep *sweep);
NB_API const char *nb_sweep_column_name(const nb_sweep *sweep, size_t column);
NB_API nb_status nb_sweep_grid(const nb_sweep *sweep, size_t row, double *out);
NB_API nb_status nb_sweep_value(const nb_sweep *sweep, size_t column,
                                size_t row, double *out);
NB_API nb_status nb_sweep_half_maximum_width(const nb_sweep *sweep,
                                             size_t column, double *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NARROWBAND_NARROWBAND_H */
