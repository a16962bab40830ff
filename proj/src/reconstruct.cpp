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

#include "focktomo/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "focktomo/error.hpp"
#include "focktomo/purity.hpp"
#include "focktomo/special.hpp"
#include "numerics.hpp"

namespace focktomo {
namespace {

double max_magnitude(const std::vector<Complex>& profile) {
  double worst = 0.0;
  for (const auto& v : profile) worst = std::max(worst, std::abs(v));
  return worst;
}

void check_preconditions(const TomogramGrid& grid, int n_max) {
  if (n_max < 0) throw_invalid("n_max must be non-negative");
  if (grid.n_theta() < 2 * n_max + 1) {
    throw_invalid("n_theta = " + std::to_string(grid.n_theta()) + " cannot separate harmonics up to n_max = " +
                  std::to_string(n_max) + " (need >= " + std::to_string(2 * n_max + 1) + ")");
  }
  if (grid.n_x() < 2 * (n_max + 1)) {
    throw_invalid("n_x = " + std::to_string(grid.n_x()) + " is too small for n_max = " + std::to_string(n_max));
  }
  const double reach = std::sqrt(2.0 * (n_max + 1)) + 4.0;
  if (std::min(-grid.x_min(), grid.x_max()) < reach) {
    throw_invalid("grid X range must cover +-" + std::to_string(reach) + " for n_max = " + std::to_string(n_max));
  }
}

}  // namespace

ThetaSpectrum fourier_theta(const TomogramGrid& grid, int m_max) {
  if (m_max < 0) throw_invalid("m_max must be non-negative");
  if (grid.n_theta() < 2 * m_max + 1) {
    throw_invalid("n_theta = " + std::to_string(grid.n_theta()) + " is below the Nyquist bound " +
                  std::to_string(2 * m_max + 1) + " for m_max = " + std::to_string(m_max));
  }
  const detail::PhaseTable table(grid.n_theta());
  ThetaSpectrum spectrum;
  spectrum.m_max = m_max;
  spectrum.x.resize(static_cast<std::size_t>(grid.n_x()));
  for (int i = 0; i < grid.n_x(); ++i) spectrum.x[static_cast<std::size_t>(i)] = grid.x(i);
  spectrum.profiles.assign(static_cast<std::size_t>(m_max) + 1, std::vector<Complex>(static_cast<std::size_t>(grid.n_x())));
  const double inv_n = 1.0 / grid.n_theta();
  for (int m = 0; m <= m_max; ++m) {
    auto& profile = spectrum.profiles[static_cast<std::size_t>(m)];
    for (int j = 0; j < grid.n_theta(); ++j) {
      const auto r = table.slot(m, j);
      const double c = table.cos[r];
      const double s = table.sin[r];
      const auto row = grid.row(j);
      for (int i = 0; i < grid.n_x(); ++i) profile[static_cast<std::size_t>(i)] += row[static_cast<std::size_t>(i)] * Complex(c, -s);
    }
    for (auto& v : profile) v *= inv_n;
  }
  return spectrum;
}

Reconstruction reconstruct(const TomogramGrid& grid, int n_max, const ReconstructOptions& options) {
  check_preconditions(grid, n_max);
  if (options.threads < 1) throw_invalid("thread count must be at least 1");

  const int top_unmodelled = (grid.n_theta() - 1) / 2;
  const auto spectrum = fourier_theta(grid, std::max(n_max, top_unmodelled));
  const int n_x = grid.n_x();
  const int dim = n_max + 1;

  Eigen::MatrixXd psi(n_x, dim);
  {
    std::vector<double> row(static_cast<std::size_t>(dim));
    for (int i = 0; i < n_x; ++i) {
      fill_hermite_functions(spectrum.x[static_cast<std::size_t>(i)], row);
      for (int k = 0; k < dim; ++k) psi(i, k) = row[static_cast<std::size_t>(k)];
    }
  }

  // solutions[m][k] = rho_{k, k+m}
  std::vector<Eigen::VectorXcd> solutions(static_cast<std::size_t>(dim));
  std::vector<int> failed(static_cast<std::size_t>(dim), 0);
  auto solve_harmonic = [&](int m) {
    const int unknowns = dim - m;
    Eigen::MatrixXd design(n_x, unknowns);
    for (int k = 0; k < unknowns; ++k) design.col(k) = psi.col(k).cwiseProduct(psi.col(k + m));
    Eigen::MatrixXd rhs(n_x, 2);
    const auto& profile = spectrum.profiles[static_cast<std::size_t>(m)];
    for (int i = 0; i < n_x; ++i) {
      rhs(i, 0) = profile[static_cast<std::size_t>(i)].real();
      rhs(i, 1) = profile[static_cast<std::size_t>(i)].imag();
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < unknowns) {
      failed[static_cast<std::size_t>(m)] = 1;
      return;
    }
    const Eigen::MatrixXd x = qr.solve(rhs);
    Eigen::VectorXcd sol(unknowns);
    for (int k = 0; k < unknowns; ++k) sol(k) = Complex(x(k, 0), m == 0 ? 0.0 : x(k, 1));
    solutions[static_cast<std::size_t>(m)] = std::move(sol);
  };

  const int workers = std::min(options.threads, dim);
  if (workers == 1) {
    for (int m = 0; m < dim; ++m) solve_harmonic(m);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int m = w; m < dim; m += workers) solve_harmonic(m);
      });
    }
  }
  for (int m = 0; m < dim; ++m) {
    if (failed[static_cast<std::size_t>(m)]) {
      throw Error(ErrorCode::kRankDeficient, "design matrix for harmonic m = " + std::to_string(m) + " is rank deficient");
    }
  }

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    const auto& sol = solutions[static_cast<std::size_t>(m)];
    for (int k = 0; k + m < dim; ++k) {
      rho(k, k + m) = sol(k);
      rho(k + m, k) = std::conj(sol(k));
    }
  }
  const double trace = rho.trace().real();
  if (!(trace > 0.0)) throw_invalid("reconstructed trace is not positive; data carry no probability mass");
  rho /= trace;

  if (options.psd_clip) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
    Eigen::VectorXd eigenvalues = solver.eigenvalues().cwiseMax(0.0);
    eigenvalues /= eigenvalues.sum();
    rho = solver.eigenvectors() * eigenvalues.asDiagonal() * solver.eigenvectors().adjoint();
  }

  Reconstruction result{DensityMatrix::from_matrix(rho, options.psd_clip ? 1e-9 : 0.0)};
  result.top_harmonic = max_magnitude(spectrum.profiles[static_cast<std::size_t>(n_max)]);
  if (top_unmodelled > n_max) {
    for (int m = n_max + 1; m <= top_unmodelled; ++m) {
      result.noise_floor = std::max(result.noise_floor, max_magnitude(spectrum.profiles[static_cast<std::size_t>(m)]));
    }
  } else {
    result.noise_floor = 1e-12 * max_magnitude(spectrum.profiles[0]);
  }
  result.truncation_warning = n_max > 0 && result.top_harmonic > 10.0 * result.noise_floor;
  return result;
}

double purity_from_tomogram(const TomogramGrid& grid, int n_max) {
  return purity_of_density_matrix(reconstruct_density_matrix(grid, n_max));
}

double fidelity(const DensityMatrix& rho, const FockSuperposition& state) {
  if (rho.dim() <= state.max_photon_number()) {
    throw_invalid("density matrix dimension " + std::to_string(rho.dim()) + " cannot hold photon number " +
                  std::to_string(state.max_photon_number()));
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(rho.dim());
  for (int n = 0; n < state.size(); ++n) psi(n) = state[n];
  return psi.dot(rho.matrix() * psi).real();
}

}  // namespace focktomo
