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

#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "focktomo/state.hpp"

namespace focktomo {

/// Default grid resolution.
inline constexpr int kDefaultNx = 641;
inline constexpr int kDefaultNtheta = 64;

/// Sampled tomogram w(X_i, theta_j).
///
/// X is uniform with inclusive endpoints; theta_j = 2 pi j / n_theta with the
/// endpoint excluded. Values are stored row-major, one row per theta_j.
class TomogramGrid {
 public:
  TomogramGrid(double x_min, double x_max, int n_x, int n_theta, std::vector<double> values,
               std::string meta = {});

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int n_x() const { return n_x_; }
  int n_theta() const { return n_theta_; }
  double dx() const { return (x_max_ - x_min_) / (n_x_ - 1); }

  /// X node i. On symmetric grids x(n_x-1-i) == -x(i) exactly.
  double x(int i) const;
  double theta(int j) const;

  double operator()(int j, int i) const { return values_[index(j, i)]; }
  double& at(int j, int i) { return values_[index(j, i)]; }

  std::span<const double> row(int j) const { return {values_.data() + index(j, 0), static_cast<std::size_t>(n_x_)}; }
  std::span<double> row(int j) { return {values_.data() + index(j, 0), static_cast<std::size_t>(n_x_)}; }
  const std::vector<double>& values() const { return values_; }

  /// x_min == -x_max, odd n_x and even n_theta: the lattice maps onto itself
  /// under (X, theta) -> (-X, theta + pi).
  bool is_symmetric_lattice() const;

  const std::string& meta() const { return meta_; }
  void set_meta(std::string meta) { meta_ = std::move(meta); }

 private:
  std::size_t index(int j, int i) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_x_) + static_cast<std::size_t>(i);
  }

  double x_min_;
  double x_max_;
  int n_x_;
  int n_theta_;
  std::vector<double> values_;
  std::string meta_;
};

using TomogramSource = std::variant<FockSuperposition, NoisyState, DensityMatrix>;

/// w(X, theta) of a pure superposition, evaluated as
/// |sum_n c_n e^{-i n theta} psi_n(X)|^2, which expands to the double sum
/// sum_{n,k} Re(c_n^* c_k e^{i(n-k)theta}) psi_n psi_k.
double fss_tomogram_point(const FockSuperposition& state, double x, double theta);

/// sigma^2 = coth(1/2T) / 2, and 1/2 at T = 0.
double thermal_variance(double temperature);

double thermal_tomogram_point(double temperature, double x);

double mixed_tomogram_point(const NoisyState& state, double x, double theta);

/// sum_{n,k} rho_nk e^{-i(n-k)theta} psi_n(X) psi_k(X), real part.
double dm_tomogram_point(const DensityMatrix& rho, double x, double theta);

double tomogram_point(const TomogramSource& source, double x, double theta);

/// Highest photon number that carries weight in the source's harmonics.
int source_photon_cutoff(const TomogramSource& source);

/// sqrt(2(N+1)) + 5, widened to 5 sigma when a thermal component is present.
double default_x_max(const TomogramSource& source);

std::string describe_source(const TomogramSource& source);

/// Evaluates the source on [-x_max, x_max] x {2 pi j / n_theta}. With
/// threads > 1 the X columns are split across workers; every value is
/// computed by the same instruction sequence, so output is bit-identical to
/// the serial run.
TomogramGrid tomogram_grid(const TomogramSource& source, double x_max, int n_x = kDefaultNx,
                           int n_theta = kDefaultNtheta, int threads = 1);

/// Complex harmonic profiles D_m(X) = sum_k rho_{k,k+m} psi_k(X) psi_{k+m}(X)
/// for m = 0..dim-1, so that w(X, theta) = D_0 + 2 Re sum_{m>0} D_m e^{i m theta}.
/// A thermal admixture contributes its Gaussian to D_0.
std::vector<Complex> harmonic_profiles(const TomogramSource& source, double x);

}  // namespace focktomo
