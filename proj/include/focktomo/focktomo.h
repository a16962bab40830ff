// Copyright 2026 The focktomo Authors
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

/* C interface to the focktomo library.
 *
 * Objects are opaque handles created by ftm_*_create / ftm_*_read style
 * functions and released with the matching ftm_*_destroy. Every function
 * that can fail returns an ftm_status; on failure ftm_last_error() describes
 * the problem for the calling thread. Output pointers are written only on
 * success.
 */
#ifndef FOCKTOMO_FOCKTOMO_H
#define FOCKTOMO_FOCKTOMO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FOCKTOMO_BUILDING_LIBRARY)
#    define FTM_API __declspec(dllexport)
#  else
#    define FTM_API __declspec(dllimport)
#  endif
#else
#  define FTM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ftm_status {
  FTM_OK = 0,
  FTM_ERR_INVALID_ARGUMENT = 1,
  FTM_ERR_FORMAT = 2,
  FTM_ERR_IO = 3,
  FTM_ERR_RANK_DEFICIENT = 4,
  FTM_ERR_INTERNAL = 5
} ftm_status;

/* A pure Fock superposition, optionally mixed with thermal noise (p, T). */
typedef struct ftm_state ftm_state;
typedef struct ftm_matrix ftm_matrix;
typedef struct ftm_grid ftm_grid;
typedef struct ftm_samples ftm_samples;
typedef struct ftm_report ftm_report;

FTM_API const char* ftm_version(void);

/* Message for the last failed call on this thread; "" if none. */
FTM_API const char* ftm_last_error(void);

/* ---- states ---------------------------------------------------------- */

FTM_API ftm_status ftm_state_create(const double* re, const double* im, size_t count, int normalize,
                                    ftm_state** out);
/* "re,im;re,im;..." ordered n = 0..N */
FTM_API ftm_status ftm_state_parse(const char* literal, int normalize, ftm_state** out);
FTM_API void ftm_state_destroy(ftm_state* state);
/* Attach thermal noise; p in [0, 1], T >= 0. p = 0 restores the pure state. */
FTM_API ftm_status ftm_state_set_noise(ftm_state* state, double p, double temperature);
FTM_API size_t ftm_state_size(const ftm_state* state);
FTM_API ftm_status ftm_state_amplitude(const ftm_state* state, size_t n, double* re, double* im);
/* trunc < 0 selects the thermal tail rule. */
FTM_API ftm_status ftm_state_density_matrix(const ftm_state* state, int trunc, ftm_matrix** out);
FTM_API ftm_status ftm_state_tomogram_point(const ftm_state* state, double x, double theta, double* out);

/* ---- density matrices ------------------------------------------------ */

FTM_API ftm_status ftm_matrix_thermal(double temperature, int trunc, ftm_matrix** out);
FTM_API ftm_status ftm_matrix_read(const char* path, ftm_matrix** out);
FTM_API ftm_status ftm_matrix_write(const ftm_matrix* matrix, const char* path);
FTM_API void ftm_matrix_destroy(ftm_matrix* matrix);
FTM_API size_t ftm_matrix_dim(const ftm_matrix* matrix);
FTM_API ftm_status ftm_matrix_entry(const ftm_matrix* matrix, size_t n, size_t k, double* re, double* im);
/* (1-p) rho + p rho_th(T); returns a new matrix. */
FTM_API ftm_status ftm_matrix_mix_thermal(const ftm_matrix* matrix, double p, double temperature, ftm_matrix** out);
FTM_API ftm_status ftm_matrix_tomogram_point(const ftm_matrix* matrix, double x, double theta, double* out);

/* ---- tomogram grids -------------------------------------------------- */

/* x_max <= 0 selects the default range; n_x, n_theta <= 0 select 641, 64. */
FTM_API ftm_status ftm_grid_from_state(const ftm_state* state, double x_max, int n_x, int n_theta, int threads,
                                       ftm_grid** out);
FTM_API ftm_status ftm_grid_from_matrix(const ftm_matrix* matrix, double x_max, int n_x, int n_theta, int threads,
                                        ftm_grid** out);
FTM_API ftm_status ftm_grid_read(const char* path, ftm_grid** out);
FTM_API ftm_status ftm_grid_write(const ftm_grid* grid, const char* path);
FTM_API void ftm_grid_destroy(ftm_grid* grid);
FTM_API ftm_status ftm_grid_shape(const ftm_grid* grid, int* n_theta, int* n_x);
FTM_API ftm_status ftm_grid_range(const ftm_grid* grid, double* x_min, double* x_max);
FTM_API ftm_status ftm_grid_value(const ftm_grid* grid, int j, int i, double* out);
/* floor/ceiling may be NULL for the defaults (0 and the grid maximum). */
FTM_API ftm_status ftm_grid_write_heatmap(const ftm_grid* grid, const double* floor, const double* ceiling,
                                          double gamma, const char* path);
FTM_API ftm_status ftm_grid_write_matrix_text(const ftm_grid* grid, const char* path);

/* ---- sampling -------------------------------------------------------- */

/* stations == 0 draws theta uniformly at random. */
FTM_API ftm_status ftm_sample_state(const ftm_state* state, size_t n, int stations, uint64_t seed, int streams,
                                    ftm_samples** out);
FTM_API ftm_status ftm_sample_matrix(const ftm_matrix* matrix, size_t n, int stations, uint64_t seed, int streams,
                                     ftm_samples** out);
FTM_API ftm_status ftm_samples_read(const char* path, ftm_samples** out);
FTM_API ftm_status ftm_samples_write(const ftm_samples* samples, const char* path);
FTM_API void ftm_samples_destroy(ftm_samples* samples);
FTM_API size_t ftm_samples_count(const ftm_samples* samples);
FTM_API ftm_status ftm_samples_record(const ftm_samples* samples, size_t index, double* theta, double* x);
/* clipped_mass may be NULL. */
FTM_API ftm_status ftm_samples_histogram(const ftm_samples* samples, int n_x, double x_max, int n_theta,
                                         ftm_grid** out, double* clipped_mass);

/* ---- validation ------------------------------------------------------ */

FTM_API ftm_status ftm_validate(const ftm_grid* grid, int strict, ftm_report** out);
FTM_API void ftm_report_destroy(ftm_report* report);
FTM_API int ftm_report_verdict(const ftm_report* report);
/* Strings live as long as the report. */
FTM_API const char* ftm_report_json(const ftm_report* report);
FTM_API const char* ftm_report_text(const ftm_report* report);
FTM_API ftm_status ftm_symmetry_indicator(const ftm_grid* grid, double* out);

/* ---- reconstruction, purity, fit ------------------------------------- */

/* truncation_warning may be NULL. */
FTM_API ftm_status ftm_reconstruct(const ftm_grid* grid, int n_max, int psd_clip, ftm_matrix** out,
                                   int* truncation_warning);
FTM_API ftm_status ftm_fidelity(const ftm_matrix* matrix, const ftm_state* state, double* out);
FTM_API ftm_status ftm_purity_state(const ftm_state* state, double* out);
FTM_API ftm_status ftm_purity_limits(const ftm_state* state, double* high_temperature, double* low_temperature);
FTM_API ftm_status ftm_purity_matrix(const ftm_matrix* matrix, double* out);
FTM_API ftm_status ftm_purity_from_grid(const ftm_grid* grid, int n_max, double* out);
/* Fits (p, T) of the state's base superposition to the grid. */
FTM_API ftm_status ftm_fit_noise(const ftm_grid* grid, const ftm_state* state, double* p, double* temperature,
                                 double* residual);

#ifdef __cplusplus
}
#endif

#endif /* FOCKTOMO_FOCKTOMO_H */
