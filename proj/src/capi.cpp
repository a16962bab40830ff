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

#include "focktomo/focktomo.h"

#include <memory>
#include <new>
#include <string>

#include "focktomo/error.hpp"
#include "focktomo/fit.hpp"
#include "focktomo/io.hpp"
#include "focktomo/purity.hpp"
#include "focktomo/reconstruct.hpp"
#include "focktomo/sampler.hpp"
#include "focktomo/tomogram.hpp"
#include "focktomo/validate.hpp"

namespace ft = focktomo;

struct ftm_state {
  ft::FockSuperposition base;
  double p = 0.0;
  double temperature = 0.0;

  ft::TomogramSource source() const {
    if (p == 0.0) return base;
    return ft::NoisyState(base, p, temperature);
  }
  ft::NoisyState noisy() const { return ft::NoisyState(base, p, temperature); }
};

struct ftm_matrix {
  ft::DensityMatrix rho;
};

struct ftm_grid {
  ft::TomogramGrid grid;
};

struct ftm_samples {
  ft::HomodyneRecordSet set;
};

struct ftm_report {
  ft::ValidationReport report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

ftm_status fail(ftm_status status, const char* message) {
  g_last_error = message;
  return status;
}

ftm_status map_code(ft::ErrorCode code) {
  switch (code) {
    case ft::ErrorCode::kInvalidArgument:
      return FTM_ERR_INVALID_ARGUMENT;
    case ft::ErrorCode::kFormat:
      return FTM_ERR_FORMAT;
    case ft::ErrorCode::kIo:
      return FTM_ERR_IO;
    case ft::ErrorCode::kRankDeficient:
      return FTM_ERR_RANK_DEFICIENT;
  }
  return FTM_ERR_INTERNAL;
}

template <class Fn>
ftm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FTM_OK;
  } catch (const ft::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FTM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FTM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FTM_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) ft::throw_invalid(std::string(what) + " must not be null");
}

template <class Handle, class... Args>
Handle* make(Args&&... args) {
  return new Handle{std::forward<Args>(args)...};
}

ft::TomogramGrid make_grid(const ft::TomogramSource& source, double x_max, int n_x, int n_theta, int threads) {
  return ft::tomogram_grid(source, x_max > 0.0 ? x_max : ft::default_x_max(source), n_x > 0 ? n_x : ft::kDefaultNx,
                           n_theta > 0 ? n_theta : ft::kDefaultNtheta, threads > 0 ? threads : 1);
}

ft::ThetaScheme scheme_for(int stations) {
  if (stations < 0) ft::throw_invalid("station count must be non-negative");
  return stations == 0 ? ft::ThetaScheme::uniform_random() : ft::ThetaScheme::fixed(stations);
}

}  // namespace

extern "C" {

const char* ftm_version(void) { return "0.1.0"; }

const char* ftm_last_error(void) { return g_last_error.c_str(); }

ftm_status ftm_state_create(const double* re, const double* im, size_t count, int normalize, ftm_state** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(re, "re");
    std::vector<ft::Complex> amps(count);
    for (size_t n = 0; n < count; ++n) amps[n] = ft::Complex(re[n], im != nullptr ? im[n] : 0.0);
    *out = make<ftm_state>(ft::FockSuperposition::create(amps, normalize != 0));
  });
}

ftm_status ftm_state_parse(const char* literal, int normalize, ftm_state** out) {
  return guarded([&] {
    require(literal, "literal");
    require(out, "out");
    *out = make<ftm_state>(ft::parse_state_literal(literal, normalize != 0));
  });
}

void ftm_state_destroy(ftm_state* state) { delete state; }

ftm_status ftm_state_set_noise(ftm_state* state, double p, double temperature) {
  return guarded([&] {
    require(state, "state");
    ft::NoisyState check(state->base, p, temperature);
    state->p = check.p();
    state->temperature = check.temperature();
  });
}

size_t ftm_state_size(const ftm_state* state) { return state ? static_cast<size_t>(state->base.size()) : 0; }

ftm_status ftm_state_amplitude(const ftm_state* state, size_t n, double* re, double* im) {
  return guarded([&] {
    require(state, "state");
    if (n >= static_cast<size_t>(state->base.size())) ft::throw_invalid("amplitude index out of range");
    const auto c = state->base[static_cast<int>(n)];
    if (re) *re = c.real();
    if (im) *im = c.imag();
  });
}

ftm_status ftm_state_density_matrix(const ftm_state* state, int trunc, ftm_matrix** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const auto noisy = state->noisy();
    *out = make<ftm_matrix>(trunc < 0 ? ft::density_matrix_of(noisy) : ft::density_matrix_of(noisy, trunc));
  });
}

ftm_status ftm_state_tomogram_point(const ftm_state* state, double x, double theta, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = ft::tomogram_point(state->source(), x, theta);
  });
}

ftm_status ftm_matrix_thermal(double temperature, int trunc, ftm_matrix** out) {
  return guarded([&] {
    require(out, "out");
    *out = make<ftm_matrix>(ft::thermal_density_matrix(temperature, trunc));
  });
}

ftm_status ftm_matrix_read(const char* path, ftm_matrix** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = make<ftm_matrix>(ft::read_density_matrix(path));
  });
}

ftm_status ftm_matrix_write(const ftm_matrix* matrix, const char* path) {
  return guarded([&] {
    require(matrix, "matrix");
    require(path, "path");
    ft::write_density_matrix(matrix->rho, path);
  });
}

void ftm_matrix_destroy(ftm_matrix* matrix) { delete matrix; }

size_t ftm_matrix_dim(const ftm_matrix* matrix) { return matrix ? static_cast<size_t>(matrix->rho.dim()) : 0; }

ftm_status ftm_matrix_entry(const ftm_matrix* matrix, size_t n, size_t k, double* re, double* im) {
  return guarded([&] {
    require(matrix, "matrix");
    const auto dim = static_cast<size_t>(matrix->rho.dim());
    if (n >= dim || k >= dim) ft::throw_invalid("matrix index out of range");
    const auto v = matrix->rho(static_cast<int>(n), static_cast<int>(k));
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

ftm_status ftm_matrix_mix_thermal(const ftm_matrix* matrix, double p, double temperature, ftm_matrix** out) {
  return guarded([&] {
    require(matrix, "matrix");
    require(out, "out");
    *out = make<ftm_matrix>(ft::mix_with_thermal(matrix->rho, p, temperature));
  });
}

ftm_status ftm_matrix_tomogram_point(const ftm_matrix* matrix, double x, double theta, double* out) {
  return guarded([&] {
    require(matrix, "matrix");
    require(out, "out");
    *out = ft::dm_tomogram_point(matrix->rho, x, theta);
  });
}

ftm_status ftm_grid_from_state(const ftm_state* state, double x_max, int n_x, int n_theta, int threads,
                               ftm_grid** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = make<ftm_grid>(make_grid(state->source(), x_max, n_x, n_theta, threads));
  });
}

ftm_status ftm_grid_from_matrix(const ftm_matrix* matrix, double x_max, int n_x, int n_theta, int threads,
                                ftm_grid** out) {
  return guarded([&] {
    require(matrix, "matrix");
    require(out, "out");
    *out = make<ftm_grid>(make_grid(matrix->rho, x_max, n_x, n_theta, threads));
  });
}

ftm_status ftm_grid_read(const char* path, ftm_grid** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = make<ftm_grid>(ft::read_grid(path));
  });
}

ftm_status ftm_grid_write(const ftm_grid* grid, const char* path) {
  return guarded([&] {
    require(grid, "grid");
    require(path, "path");
    ft::write_grid(grid->grid, path);
  });
}

void ftm_grid_destroy(ftm_grid* grid) { delete grid; }

ftm_status ftm_grid_shape(const ftm_grid* grid, int* n_theta, int* n_x) {
  return guarded([&] {
    require(grid, "grid");
    if (n_theta) *n_theta = grid->grid.n_theta();
    if (n_x) *n_x = grid->grid.n_x();
  });
}

ftm_status ftm_grid_range(const ftm_grid* grid, double* x_min, double* x_max) {
  return guarded([&] {
    require(grid, "grid");
    if (x_min) *x_min = grid->grid.x_min();
    if (x_max) *x_max = grid->grid.x_max();
  });
}

ftm_status ftm_grid_value(const ftm_grid* grid, int j, int i, double* out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    if (j < 0 || j >= grid->grid.n_theta() || i < 0 || i >= grid->grid.n_x()) ft::throw_invalid("grid index out of range");
    *out = grid->grid(j, i);
  });
}

ftm_status ftm_grid_write_heatmap(const ftm_grid* grid, const double* floor, const double* ceiling, double gamma,
                                  const char* path) {
  return guarded([&] {
    require(grid, "grid");
    require(path, "path");
    ft::HeatmapSpec spec;
    if (floor) spec.value_floor = *floor;
    if (ceiling) spec.value_ceiling = *ceiling;
    spec.gamma = gamma;
    ft::emit_heatmap(grid->grid, spec, path);
  });
}

ftm_status ftm_grid_write_matrix_text(const ftm_grid* grid, const char* path) {
  return guarded([&] {
    require(grid, "grid");
    require(path, "path");
    ft::emit_matrix_text(grid->grid, path);
  });
}

ftm_status ftm_sample_state(const ftm_state* state, size_t n, int stations, uint64_t seed, int streams,
                            ftm_samples** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = make<ftm_samples>(ft::sample(state->source(), n, scheme_for(stations), seed, streams));
  });
}

ftm_status ftm_sample_matrix(const ftm_matrix* matrix, size_t n, int stations, uint64_t seed, int streams,
                             ftm_samples** out) {
  return guarded([&] {
    require(matrix, "matrix");
    require(out, "out");
    *out = make<ftm_samples>(ft::sample(matrix->rho, n, scheme_for(stations), seed, streams));
  });
}

ftm_status ftm_samples_read(const char* path, ftm_samples** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = make<ftm_samples>(ft::read_samples(path));
  });
}

ftm_status ftm_samples_write(const ftm_samples* samples, const char* path) {
  return guarded([&] {
    require(samples, "samples");
    require(path, "path");
    ft::write_samples(samples->set, path);
  });
}

void ftm_samples_destroy(ftm_samples* samples) { delete samples; }

size_t ftm_samples_count(const ftm_samples* samples) { return samples ? samples->set.records.size() : 0; }

ftm_status ftm_samples_record(const ftm_samples* samples, size_t index, double* theta, double* x) {
  return guarded([&] {
    require(samples, "samples");
    if (index >= samples->set.records.size()) ft::throw_invalid("record index out of range");
    const auto& rec = samples->set.records[index];
    if (theta) *theta = rec.theta;
    if (x) *x = rec.x;
  });
}

ftm_status ftm_samples_histogram(const ftm_samples* samples, int n_x, double x_max, int n_theta, ftm_grid** out,
                                 double* clipped_mass) {
  return guarded([&] {
    require(samples, "samples");
    require(out, "out");
    auto hist = ft::empirical_tomogram(samples->set, n_x, x_max, n_theta);
    if (clipped_mass) *clipped_mass = hist.clipped_mass;
    *out = make<ftm_grid>(std::move(hist.grid));
  });
}

ftm_status ftm_validate(const ftm_grid* grid, int strict, ftm_report** out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    auto report = ft::validate(grid->grid, strict ? ft::Thresholds::strict() : ft::Thresholds{});
    auto json = ft::report_json(report);
    auto text = ft::report_text(report);
    *out = make<ftm_report>(std::move(report), std::move(json), std::move(text));
  });
}

void ftm_report_destroy(ftm_report* report) { delete report; }

int ftm_report_verdict(const ftm_report* report) { return report && report->report.verdict() ? 1 : 0; }

const char* ftm_report_json(const ftm_report* report) { return report ? report->json.c_str() : ""; }

const char* ftm_report_text(const ftm_report* report) { return report ? report->text.c_str() : ""; }

ftm_status ftm_symmetry_indicator(const ftm_grid* grid, double* out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    *out = ft::symmetry_indicator(grid->grid);
  });
}

ftm_status ftm_reconstruct(const ftm_grid* grid, int n_max, int psd_clip, ftm_matrix** out, int* truncation_warning) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    auto result = ft::reconstruct(grid->grid, n_max, {psd_clip != 0, 1});
    if (truncation_warning) *truncation_warning = result.truncation_warning ? 1 : 0;
    *out = make<ftm_matrix>(std::move(result.rho));
  });
}

ftm_status ftm_fidelity(const ftm_matrix* matrix, const ftm_state* state, double* out) {
  return guarded([&] {
    require(matrix, "matrix");
    require(state, "state");
    require(out, "out");
    *out = ft::fidelity(matrix->rho, state->base);
  });
}

ftm_status ftm_purity_state(const ftm_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = ft::purity_analytic(state->noisy());
  });
}

ftm_status ftm_purity_limits(const ftm_state* state, double* high_temperature, double* low_temperature) {
  return guarded([&] {
    require(state, "state");
    const auto limits = ft::purity_limits(state->noisy());
    if (high_temperature) *high_temperature = limits.high_temperature;
    if (low_temperature) *low_temperature = limits.low_temperature;
  });
}

ftm_status ftm_purity_matrix(const ftm_matrix* matrix, double* out) {
  return guarded([&] {
    require(matrix, "matrix");
    require(out, "out");
    *out = ft::purity_of_density_matrix(matrix->rho);
  });
}

ftm_status ftm_purity_from_grid(const ftm_grid* grid, int n_max, double* out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    *out = ft::purity_from_tomogram(grid->grid, n_max);
  });
}

ftm_status ftm_fit_noise(const ftm_grid* grid, const ftm_state* state, double* p, double* temperature,
                         double* residual) {
  return guarded([&] {
    require(grid, "grid");
    require(state, "state");
    const auto fit = ft::fit_noise(grid->grid, state->base);
    if (p) *p = fit.p;
    if (temperature) *temperature = fit.temperature;
    if (residual) *residual = fit.residual;
  });
}

}  // extern "C"
