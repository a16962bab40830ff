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

#include "focktomo/tomogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "focktomo/error.hpp"
#include "focktomo/special.hpp"
#include "numerics.hpp"

namespace focktomo {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<double> hermite_row(int count, double x) {
  std::vector<double> psi(static_cast<std::size_t>(count));
  fill_hermite_functions(x, psi);
  return psi;
}

// |sum_k c_k e^{-ik theta} psi_k|^2 with the phase of harmonic k supplied by
// `phase(k)` as (cos k theta, sin k theta).
template <class PhaseFn>
double pure_value(const FockSuperposition& state, std::span<const double> psi, PhaseFn phase) {
  double re = 0.0;
  double im = 0.0;
  for (int k = 0; k < state.size(); ++k) {
    const auto [c, s] = phase(k);
    const Complex term = state[k] * Complex(c, -s);
    re += term.real() * psi[static_cast<std::size_t>(k)];
    im += term.imag() * psi[static_cast<std::size_t>(k)];
  }
  return re * re + im * im;
}

std::vector<Complex> dm_profiles(const DensityMatrix& rho, std::span<const double> psi) {
  const int dim = rho.dim();
  std::vector<Complex> profiles(static_cast<std::size_t>(dim));
  for (int m = 0; m < dim; ++m) {
    Complex sum{};
    for (int k = 0; k + m < dim; ++k) {
      sum += rho(k, k + m) * (psi[static_cast<std::size_t>(k)] * psi[static_cast<std::size_t>(k + m)]);
    }
    profiles[static_cast<std::size_t>(m)] = sum;
  }
  return profiles;
}

template <class PhaseFn>
double from_profiles(std::span<const Complex> profiles, PhaseFn phase) {
  double w = profiles[0].real();
  double harmonics = 0.0;
  for (std::size_t m = 1; m < profiles.size(); ++m) {
    const auto [c, s] = phase(static_cast<int>(m));
    harmonics += profiles[m].real() * c - profiles[m].imag() * s;
  }
  return w + 2.0 * harmonics;
}

auto exact_phase(double theta) {
  return [theta](int k) { return std::pair{std::cos(k * theta), std::sin(k * theta)}; };
}

void check_point(double x, double theta) {
  if (!std::isfinite(x) || !std::isfinite(theta)) throw_invalid("tomogram arguments must be finite");
}

}  // namespace

TomogramGrid::TomogramGrid(double x_min, double x_max, int n_x, int n_theta, std::vector<double> values,
                           std::string meta)
    : x_min_(x_min), x_max_(x_max), n_x_(n_x), n_theta_(n_theta), values_(std::move(values)), meta_(std::move(meta)) {
  if (n_x < 2) throw_invalid("grid needs n_x >= 2");
  if (n_theta < 1) throw_invalid("grid needs n_theta >= 1");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw_invalid("grid X range must be finite with x_max > x_min");
  }
  if (values_.size() != static_cast<std::size_t>(n_x) * static_cast<std::size_t>(n_theta)) {
    throw_invalid("grid value count does not match n_theta * n_x");
  }
}

double TomogramGrid::x(int i) const {
  if (x_min_ == -x_max_) return x_max_ * static_cast<double>(2 * i - (n_x_ - 1)) / static_cast<double>(n_x_ - 1);
  if (i == n_x_ - 1) return x_max_;
  return x_min_ + (x_max_ - x_min_) * static_cast<double>(i) / static_cast<double>(n_x_ - 1);
}

double TomogramGrid::theta(int j) const { return detail::kTwoPi * j / n_theta_; }

bool TomogramGrid::is_symmetric_lattice() const {
  return x_min_ == -x_max_ && n_x_ % 2 == 1 && n_theta_ % 2 == 0;
}

double fss_tomogram_point(const FockSuperposition& state, double x, double theta) {
  check_point(x, theta);
  const auto psi = hermite_row(state.size(), x);
  return pure_value(state, psi, exact_phase(theta));
}

double thermal_variance(double temperature) {
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) throw_invalid("temperature must be finite and non-negative");
  if (temperature == 0.0) return 0.5;
  return 0.5 / std::tanh(0.5 / temperature);
}

double thermal_tomogram_point(double temperature, double x) {
  const double variance = thermal_variance(temperature);
  return std::exp(-x * x / (2.0 * variance)) / std::sqrt(2.0 * std::numbers::pi * variance);
}

double mixed_tomogram_point(const NoisyState& state, double x, double theta) {
  const double p = state.p();
  return (1.0 - p) * fss_tomogram_point(state.base(), x, theta) + p * thermal_tomogram_point(state.temperature(), x);
}

double dm_tomogram_point(const DensityMatrix& rho, double x, double theta) {
  check_point(x, theta);
  const auto psi = hermite_row(rho.dim(), x);
  return from_profiles(dm_profiles(rho, psi), exact_phase(theta));
}

double tomogram_point(const TomogramSource& source, double x, double theta) {
  return std::visit(Overloaded{
                        [&](const FockSuperposition& s) { return fss_tomogram_point(s, x, theta); },
                        [&](const NoisyState& s) { return mixed_tomogram_point(s, x, theta); },
                        [&](const DensityMatrix& r) { return dm_tomogram_point(r, x, theta); },
                    },
                    source);
}

int source_photon_cutoff(const TomogramSource& source) {
  return std::visit(Overloaded{
                        [](const FockSuperposition& s) { return s.max_photon_number(); },
                        [](const NoisyState& s) { return s.base().max_photon_number(); },
                        [](const DensityMatrix& r) { return r.dim() - 1; },
                    },
                    source);
}

double default_x_max(const TomogramSource& source) {
  const double turning = std::sqrt(2.0 * (source_photon_cutoff(source) + 1)) + 5.0;
  if (const auto* noisy = std::get_if<NoisyState>(&source); noisy != nullptr && noisy->p() > 0.0) {
    return std::max(turning, 5.0 * std::sqrt(thermal_variance(noisy->temperature())));
  }
  return turning;
}

std::string describe_source(const TomogramSource& source) {
  std::ostringstream out;
  out.precision(17);
  auto amplitudes = [&out](const FockSuperposition& s) {
    out << "amps=";
    for (int n = 0; n < s.size(); ++n) out << (n ? ";" : "") << s[n].real() << "," << s[n].imag();
  };
  std::visit(Overloaded{
                 [&](const FockSuperposition& s) {
                   out << "pure ";
                   amplitudes(s);
                 },
                 [&](const NoisyState& s) {
                   out << "mixture ";
                   amplitudes(s.base());
                   out << " p=" << s.p() << " T=" << s.temperature();
                 },
                 [&](const DensityMatrix& r) { out << "density-matrix dim=" << r.dim(); },
             },
             source);
  return out.str();
}

std::vector<Complex> harmonic_profiles(const TomogramSource& source, double x) {
  return std::visit(Overloaded{
                        [&](const FockSuperposition& s) { return dm_profiles(projector(s, s.max_photon_number()), hermite_row(s.size(), x)); },
                        [&](const NoisyState& s) {
                          const auto& base = s.base();
                          auto profiles = dm_profiles(projector(base, base.max_photon_number()), hermite_row(base.size(), x));
                          for (auto& d : profiles) d *= 1.0 - s.p();
                          profiles[0] += s.p() * thermal_tomogram_point(s.temperature(), x);
                          return profiles;
                        },
                        [&](const DensityMatrix& r) { return dm_profiles(r, hermite_row(r.dim(), x)); },
                    },
                    source);
}

TomogramGrid tomogram_grid(const TomogramSource& source, double x_max, int n_x, int n_theta, int threads) {
  if (!(x_max > 0.0) || !std::isfinite(x_max)) throw_invalid("x_max must be positive");
  if (n_x < 2) throw_invalid("n_x must be at least 2");
  if (n_theta < 1) throw_invalid("n_theta must be at least 1");
  if (threads < 1) throw_invalid("thread count must be at least 1");

  TomogramGrid grid(-x_max, x_max, n_x, n_theta,
                    std::vector<double>(static_cast<std::size_t>(n_x) * static_cast<std::size_t>(n_theta)),
                    describe_source(source));
  const detail::PhaseTable table(n_theta);
  const int dim = source_photon_cutoff(source) + 1;
  const DensityMatrix* rho = std::get_if<DensityMatrix>(&source);
  const FockSuperposition* pure = std::get_if<FockSuperposition>(&source);
  const NoisyState* noisy = std::get_if<NoisyState>(&source);
  if (noisy != nullptr) pure = &noisy->base();

  auto fill_columns = [&](int begin, int end) {
    std::vector<double> psi(static_cast<std::size_t>(dim));
    for (int i = begin; i < end; ++i) {
      const double x = grid.x(i);
      fill_hermite_functions(x, psi);
      if (rho != nullptr) {
        const auto profiles = dm_profiles(*rho, psi);
        for (int j = 0; j < n_theta; ++j) {
          grid.at(j, i) = from_profiles(profiles, [&](int m) {
            const auto r = table.slot(m, j);
            return std::pair{table.cos[r], table.sin[r]};
          });
        }
        continue;
      }
      const double thermal = noisy != nullptr ? thermal_tomogram_point(noisy->temperature(), x) : 0.0;
      for (int j = 0; j < n_theta; ++j) {
        const double w = pure_value(*pure, psi, [&](int k) {
          const auto r = table.slot(k, j);
          return std::pair{table.cos[r], table.sin[r]};
        });
        grid.at(j, i) = noisy != nullptr ? (1.0 - noisy->p()) * w + noisy->p() * thermal : w;
      }
    }
  };

  const int workers = std::min(threads, n_x);
  if (workers == 1) {
    fill_columns(0, n_x);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(fill_columns, n_x * w / workers, n_x * (w + 1) / workers);
    }
  }
  return grid;
}

}  // namespace focktomo
