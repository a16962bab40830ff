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

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace focktomo {

using Complex = std::complex<double>;

/// Largest photon number a superposition may carry.
inline constexpr int kMaxPhotonNumber = 256;

/// Default thermal tail mass left out by tail_truncation().
inline constexpr double kDefaultTailEpsilon = 1e-12;

/// Pure single-mode state sum_n c_n |n>, n = 0..N, with unit norm.
class FockSuperposition {
 public:
  /// Scales to unit norm when `normalize` is set; otherwise the input norm
  /// must already be within 1e-6 of one. All-zero input is rejected.
  static FockSuperposition create(std::span<const Complex> amplitudes, bool normalize);

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](int n) const { return amplitudes_[static_cast<std::size_t>(n)]; }
  int max_photon_number() const { return static_cast<int>(amplitudes_.size()) - 1; }
  int size() const { return static_cast<int>(amplitudes_.size()); }

  /// |c_n|^2, zero past N.
  double population(int n) const;

 private:
  explicit FockSuperposition(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}
  std::vector<Complex> amplitudes_;
};

inline FockSuperposition new_superposition(std::span<const Complex> amplitudes, bool normalize) {
  return FockSuperposition::create(amplitudes, normalize);
}

/// Parses "re,im;re,im;..." ordered n = 0..N. Whitespace around numbers is
/// ignored; an entry with a single number is read as purely real.
FockSuperposition parse_state_literal(std::string_view literal, bool normalize);

/// Copy with the global phase fixed so the first nonzero amplitude is real
/// and non-negative.
FockSuperposition canonical_phase(const FockSuperposition& state);

/// Equality up to a global phase; trailing zero amplitudes are ignored.
bool equal_up_to_global_phase(const FockSuperposition& a, const FockSuperposition& b,
                              double tol = 1e-12);

/// Pure state mixed with thermal noise: (1-p) |psi><psi| + p rho_th(T).
/// T = 0 is the vacuum limit of the noise channel.
class NoisyState {
 public:
  NoisyState(FockSuperposition base, double p, double temperature);

  const FockSuperposition& base() const { return base_; }
  double p() const { return p_; }
  double temperature() const { return temperature_; }

 private:
  FockSuperposition base_;
  double p_;
  double temperature_;
};

/// Truncated Hermitian density matrix rho_nk = <n|rho|k> in the Fock basis.
/// Hermiticity holds exactly on the stored entries.
class DensityMatrix {
 public:
  /// Rejects non-square input and input further than `tol` from Hermitian,
  /// then stores the exact Hermitian part.
  static DensityMatrix from_matrix(const Eigen::MatrixXcd& entries, double tol = 1e-12);

  int dim() const { return static_cast<int>(entries_.rows()); }
  Complex operator()(int n, int k) const { return entries_(n, k); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

  double trace() const;
  double min_eigenvalue() const;

 private:
  explicit DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}
  Eigen::MatrixXcd entries_;
};

/// Truncation index that leaves thermal tail mass below `eps`:
/// max(N, ceil(T ln(1/eps)) + 1). For T = 0 this is N.
int tail_truncation(int max_photon_number, double temperature, double eps = kDefaultTailEpsilon);

/// Gibbs state of the oscillator on n = 0..trunc,
/// rho_nn = (1 - e^{-1/T}) e^{-n/T}; the vacuum projector when T = 0.
DensityMatrix thermal_density_matrix(double temperature, int trunc);

/// |psi><psi| padded with zeros to dimension trunc + 1.
DensityMatrix projector(const FockSuperposition& state, int trunc);

DensityMatrix density_matrix_of(const NoisyState& state, int trunc);

/// Uses tail_truncation() for the cutoff.
DensityMatrix density_matrix_of(const NoisyState& state);

/// (1-p) rho + p rho_th(T), padded to hold the thermal tail.
DensityMatrix mix_with_thermal(const DensityMatrix& rho, double p, double temperature);

}  // namespace focktomo
