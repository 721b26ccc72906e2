/*
  Copyright (c) 2026 ucov developers

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

/*
  C interface to the uniform random covering toolkit.

  Conventions:
    - Every fallible call returns a ucov_status int; UCOV_OK is 0.
    - On failure, ucov_last_error() returns a thread-local message
      describing the most recent failure on the calling thread.
    - Objects are opaque handles released with their _destroy function.
    - Strings returned through char** are heap-allocated documents;
      release them with ucov_string_free.
    - Samples and radii are indexed from 1. Points on the d-torus are
      arrays of d doubles in [0, 1).
*/

#ifndef UCOV_H
#define UCOV_H

#include <stddef.h>
#include <stdint.h>

#if defined(__cplusplus)
extern "C" {
#endif

#define UCOV_VERSION_STRING "1.0.0"

typedef enum ucov_status {
    UCOV_OK = 0,
    UCOV_ERR_CONTRACT = 1,
    UCOV_ERR_DOMAIN = 2,
    UCOV_ERR_RANGE = 3,
    UCOV_ERR_PRECONDITION = 4,
    UCOV_ERR_RESOURCE = 5,
    UCOV_ERR_UNSUPPORTED = 6,
    UCOV_ERR_NUMERIC = 7,
    UCOV_ERR_INTERNAL = 8
} ucov_status;

typedef enum ucov_family {
    UCOV_FAMILY_POWER_LAW = 0,
    UCOV_FAMILY_CRITICAL_SCALE = 1,
    UCOV_FAMILY_EXPLICIT = 2
} ucov_family;

typedef enum ucov_statistic {
    UCOV_STAT_BOX_DIM = 0,
    UCOV_STAT_COVERED_FRACTION = 1
} ucov_statistic;

/* Radius schedule description. For UCOV_FAMILY_POWER_LAW set c and
   alpha; for UCOV_FAMILY_CRITICAL_SCALE set c (alpha is derived as 1/d
   from the ambient dimension of the call); for UCOV_FAMILY_EXPLICIT set
   values/n_values. Unused fields are ignored. */
typedef struct ucov_schedule {
    int family;
    double c;
    double alpha;
    const double* values;
    uint64_t n_values;
} ucov_schedule;

typedef struct ucov_stream ucov_stream;
typedef struct ucov_grid ucov_grid;

const char* ucov_version(void);
const char* ucov_last_error(void);
const char* ucov_status_name(int status);
void ucov_string_free(char* s);

/* Worker threads for the Monte Carlo runners. 0 restores the default
   (UCOV_THREADS environment variable, else hardware concurrency).
   Results are identical at any thread count. */
void ucov_set_threads(int n);

/* ---- sample streams ------------------------------------------------ */

/* Uniform i.i.d. samples on the d-torus, or on the k-dimensional
   subtorus when 0 < support_dim < d. support_dim = 0 means full
   support. */
ucov_status ucov_stream_create(uint64_t seed, int d, int support_dim, ucov_stream** out);

/* Fixed point list (row-major coords, n_points * d doubles). */
ucov_status ucov_stream_create_explicit(const double* coords, uint64_t n_points, int d,
                                        ucov_stream** out);
void ucov_stream_destroy(ucov_stream* s);
int ucov_stream_dim(const ucov_stream* s);

/* Writes sample n (1-based) into out_coords (d doubles). */
ucov_status ucov_stream_sample(const ucov_stream* s, uint64_t n, double* out_coords);

/* Decorrelated per-trial seed derived from a base seed. */
uint64_t ucov_substream_seed(uint64_t base, uint64_t index);

/* ---- geometry and closed forms ------------------------------------- */

ucov_status ucov_torus_dist(const double* x, const double* y, int d, double* out);

/* Measure of the open ball B(y, r) under the (sub)torus measure. */
ucov_status ucov_ball_mass(int d, int support_dim, const double* y, double r, double* out);

ucov_status ucov_radius_at(const ucov_schedule* schedule, int d, uint64_t n, double* out);

ucov_status ucov_s_exponent(double c, int d, double theta, double* out);
ucov_status ucov_lambda_matrix(double c, int d, double theta, double* out_theta_cap,
                               double* out_delta, double* out_lambda);
ucov_status ucov_energy_constant(double s, int d, double* out);
ucov_status ucov_critical_c(double theta, int d, double* out);

/* Dimension bounds at the critical radius scale. out_at_limit is set to
   1 when the optimum is approached only as theta grows without bound
   (out_theta_star then holds the search edge). */
ucov_status ucov_lower_bound_dim(double c, int d, double* out_value, double* out_theta_star,
                                 int* out_at_limit);
ucov_status ucov_upper_bound_dim(double c, int d, double* out_value, double* out_theta_star,
                                 int* out_at_limit);

ucov_status ucov_ladder(double theta, int j, uint64_t* out);
ucov_status ucov_k_mass(double c, int d, double theta, int l, int q, double* out);
ucov_status ucov_psi_kernel(double c, int d, double theta, int l, int q, const double* t,
                            double* out);

/* First hit of B(y, r) in the sample window [1, n_max]. *out_hit is 0
   when the window misses (out_n is then untouched). */
ucov_status ucov_hitting_time(const ucov_stream* s, const double* y, double r, uint64_t n_max,
                              uint64_t* out_n, int* out_hit);

/* ---- occupancy grids ------------------------------------------------ */

ucov_status ucov_build_cover_grid(const ucov_stream* s, const ucov_schedule* schedule,
                                  uint64_t p, const uint64_t* checkpoints,
                                  size_t n_checkpoints, int m, ucov_grid** out);
ucov_status ucov_liminf_witness_grid(const ucov_stream* s, double c, double theta, int l,
                                     int q, int m, ucov_grid** out);
void ucov_grid_destroy(ucov_grid* g);
int ucov_grid_dim(const ucov_grid* g);
int ucov_grid_bits(const ucov_grid* g);
uint64_t ucov_grid_popcount(const ucov_grid* g);
double ucov_grid_fraction(const ucov_grid* g);
int ucov_grid_test(const ucov_grid* g, uint64_t index);
ucov_status ucov_grid_box_count(const ucov_grid* g, int m_coarse, uint64_t* out);

/* *out_defined is 0 for an empty grid (no scaling exponent). */
ucov_status ucov_grid_estimate_box_dim(const ucov_grid* g, int m_lo, int m_hi, double* out,
                                       int* out_defined);

/* Raw bitmap dump with a 16-byte header, and cell-index CSV. */
ucov_status ucov_grid_write_binary(const ucov_grid* g, const char* path);
ucov_status ucov_grid_read_binary(const char* path, ucov_grid** out);
ucov_status ucov_grid_write_csv(const ucov_grid* g, const char* path);

/* ---- experiment runners --------------------------------------------- */
/* Each runner allocates a JSON or CSV document into *out. Documents are
   {config, version, results} envelopes; CSV documents start with a
   "# config: ..." comment line. */

ucov_status ucov_run_bounds_json(double c, int d, char** out);

ucov_status ucov_run_classify_json(const ucov_schedule* schedule, int d, int support_dim,
                                   char** out);
ucov_status ucov_run_series_csv(const ucov_schedule* schedule, int d, int support_dim,
                                uint64_t n_max, char** out);

/* Window simulation; optional grid dumps are skipped when a path is
   NULL. */
ucov_status ucov_run_simulate_json(const ucov_schedule* schedule, int d, int support_dim,
                                   uint64_t seed, int m, uint64_t p, uint64_t n_max,
                                   const char* grid_binary_path, const char* grid_csv_path,
                                   char** out);
ucov_status ucov_run_boxdim_json(const ucov_schedule* schedule, int d, int support_dim,
                                 uint64_t seed, int m, uint64_t p, uint64_t n_max, int m_lo,
                                 int m_hi, char** out);

/* Hitting-time ladders for n_probes random probes; probe t uses the
   substream seed derived with index t. */
ucov_status ucov_run_hitting_csv(int d, int support_dim, uint64_t seed, uint64_t n_probes,
                                 double r_hi, int ladder_k, uint64_t n_max, char** out);

/* Greedy cover growth traces for the given seeds (CSV rows per level,
   one block per seed). containment_bits > 0 additionally verifies the
   per-level grid containment at that resolution and reports escapes. */
ucov_status ucov_run_greedy_csv(double c, int d, double theta, int l, int i_max,
                                const uint64_t* seeds, size_t n_seeds, int containment_bits,
                                char** out);

ucov_status ucov_run_second_moment_json(double c, int d, double theta, int l, int q, int m,
                                        uint64_t trials, double s, uint64_t seed, char** out);

ucov_status ucov_run_zero_one_json(int statistic, const ucov_schedule* schedule, int d,
                                   int support_dim, int m, uint64_t p, uint64_t n_max,
                                   int m_lo, int m_hi, const uint64_t* seeds, size_t n_seeds,
                                   char** out);

#if defined(__cplusplus)
}
#endif

#endif /* UCOV_H */
