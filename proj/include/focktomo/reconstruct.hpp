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

#include <vector>

#include "focktomo/state.hpp"
#include "focktomo/tomogram.hpp"

namespace focktomo {

/// Discrete Fourier coefficients of the tomogram along theta,
/// F_m(X_i) = (1/n_theta) sum_j w(X_i, theta_j) e^{-i m theta_j}.
struct ThetaSpectrum {
  int m_max = 0;
  std::vector<double> x;                        // X nodes of the source grid
  std::vector<std::vector<Complex>> profiles;  // profiles[m][i], m = 0..m_max
};

/// Requires n_theta >= 2 m_max + 1 so harmonics up to m_max do not alias.
ThetaSpectrum fourier_theta(const TomogramGrid& grid, int m_max);

struct ReconstructOptions {
  bool psd_clip = false;  // clip negative eigenvalues and renormalize
  int threads = 1;
};

struct Reconstruction {
  DensityMatrix rho;
  double top_harmonic = 0.0;  // max_i |F_{n_max}(X_i)|
  double noise_floor = 0.0;   // max_i |F_m(X_i)| over unmodelled harmonics m > n_max
  bool truncation_warning = false;
};

/// Least-squares inversion of the tomogram in the truncated basis n <= n_max.
///
/// Harmonic m of the data satisfies F_m(X) = sum_k rho_{k,k+m} psi_k(X) psi_{k+m}(X),
/// so each m is an independent overdetermined real system (one solve for the
/// real and one for the imaginary part of F_m) handled by column-pivoted
/// Householder QR with uniform weights and no regularization. The lower
/// triangle is filled by conjugation and the result scaled to unit trace.
///
/// Preconditions: n_theta >= 2 n_max + 1, n_x >= 2 (n_max + 1) and an X range
/// reaching sqrt(2 (n_max + 1)) + 4 on both sides. A rank-deficient design
/// matrix throws Error(kRankDeficient) naming the harmonic.
Reconstruction reconstruct(const TomogramGrid& grid, int n_max, const ReconstructOptions& options = {});

inline DensityMatrix reconstruct_density_matrix(const TomogramGrid& grid, int n_max, bool psd_clip = false) {
  return reconstruct(grid, n_max, {psd_clip, 1}).rho;
}

double purity_from_tomogram(const TomogramGrid& grid, int n_max);

/// <psi|rho|psi>; the state is zero-padded to dim(rho), which must exceed N.
double fidelity(const DensityMatrix& rho, const FockSuperposition& state);

}  // namespace focktomo
