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

#include "focktomo/state.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "focktomo/error.hpp"

namespace focktomo {
namespace {

constexpr double kNormTolerance = 1e-6;

void check_temperature(double temperature) {
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw_invalid("temperature must be finite and non-negative");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw_invalid("malformed number '" + std::string(token) + "' in state literal");
  }
  return value;
}

}  // namespace

FockSuperposition FockSuperposition::create(std::span<const Complex> amplitudes, bool normalize) {
  if (amplitudes.empty()) throw_invalid("superposition needs at least one amplitude");
  if (static_cast<int>(amplitudes.size()) - 1 > kMaxPhotonNumber) {
    throw_invalid("superposition exceeds the photon-number cap of " + std::to_string(kMaxPhotonNumber));
  }
  double norm2 = 0.0;
  for (const auto& c : amplitudes) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw_invalid("amplitudes must be finite");
    norm2 += std::norm(c);
  }
  if (norm2 == 0.0) throw_invalid("all amplitudes are zero");

  std::vector<Complex> stored(amplitudes.begin(), amplitudes.end());
  if (normalize) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& c : stored) c *= scale;
  } else if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
    throw_invalid("amplitudes are not normalized (norm^2 = " + std::to_string(norm2) + ")");
  }
  return FockSuperposition(std::move(stored));
}

double FockSuperposition::population(int n) const {
  if (n < 0 || n >= size()) return 0.0;
  return std::norm(amplitudes_[static_cast<std::size_t>(n)]);
}

FockSuperposition parse_state_literal(std::string_view literal, bool normalize) {
  std::vector<Complex> amplitudes;
  std::size_t start = 0;
  while (start <= literal.size()) {
    const auto stop = literal.find(';', start);
    const auto entry = literal.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
    const auto comma = entry.find(',');
    if (comma == std::string_view::npos) {
      amplitudes.emplace_back(parse_number(entry), 0.0);
    } else {
      if (entry.find(',', comma + 1) != std::string_view::npos) {
        throw_invalid("state literal entry '" + std::string(entry) + "' has more than two components");
      }
      amplitudes.emplace_back(parse_number(entry.substr(0, comma)), parse_number(entry.substr(comma + 1)));
    }
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return FockSuperposition::create(amplitudes, normalize);
}

FockSuperposition canonical_phase(const FockSuperposition& state) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (const auto& c : amps) {
    if (c != Complex(0.0, 0.0)) {
      const Complex rotation = std::conj(c) / std::abs(c);
      for (auto& a : amps) a *= rotation;
      break;
    }
  }
  return FockSuperposition::create(amps, false);
}

bool equal_up_to_global_phase(const FockSuperposition& a, const FockSuperposition& b, double tol) {
  const auto ca = canonical_phase(a);
  const auto cb = canonical_phase(b);
  const int n = std::max(ca.size(), cb.size());
  for (int k = 0; k < n; ++k) {
    const Complex x = k < ca.size() ? ca[k] : Complex{};
    const Complex y = k < cb.size() ? cb[k] : Complex{};
    if (std::abs(x - y) > tol) return false;
  }
  return true;
}

NoisyState::NoisyState(FockSuperposition base, double p, double temperature)
    : base_(std::move(base)), p_(p), temperature_(temperature) {
  if (!(p >= 0.0 && p <= 1.0)) throw_invalid("mixture coefficient p must lie in [0, 1]");
  check_temperature(temperature);
}

DensityMatrix DensityMatrix::from_matrix(const Eigen::MatrixXcd& entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw_invalid("density matrix must be square and nonempty");
  }
  if (!entries.allFinite()) throw_invalid("density matrix entries must be finite");
  const Eigen::MatrixXcd adjoint = entries.adjoint();
  if ((entries - adjoint).cwiseAbs().maxCoeff() > tol) {
    throw_invalid("density matrix is not Hermitian");
  }
  // conj(a + conj(b)) == b + conj(a) bitwise, so this is exactly Hermitian.
  return DensityMatrix(0.5 * (entries + adjoint));
}

double DensityMatrix::trace() const { return entries_.trace().real(); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

int tail_truncation(int max_photon_number, double temperature, double eps) {
  check_temperature(temperature);
  if (!(eps > 0.0 && eps < 1.0)) throw_invalid("tail epsilon must lie in (0, 1)");
  if (temperature == 0.0) return max_photon_number;
  const double needed = std::ceil(temperature * std::log(1.0 / eps)) + 1.0;
  if (needed > 1e6) throw_invalid("temperature too high for a truncated Fock basis");
  return std::max(max_photon_number, static_cast<int>(needed));
}

DensityMatrix thermal_density_matrix(double temperature, int trunc) {
  check_temperature(temperature);
  if (trunc < 0) throw_invalid("truncation must be non-negative");
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(trunc + 1, trunc + 1);
  if (temperature == 0.0) {
    rho(0, 0) = 1.0;
  } else {
    const double ground = -std::expm1(-1.0 / temperature);
    for (int n = 0; n <= trunc; ++n) rho(n, n) = ground * std::exp(-n / temperature);
  }
  return DensityMatrix::from_matrix(rho, 0.0);
}

DensityMatrix projector(const FockSuperposition& state, int trunc) {
  if (trunc < state.max_photon_number()) {
    throw_invalid("truncation " + std::to_string(trunc) + " is below the state's photon number " +
                  std::to_string(state.max_photon_number()));
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(trunc + 1, trunc + 1);
  for (int n = 0; n < state.size(); ++n) {
    rho(n, n) = std::norm(state[n]);
    for (int k = n + 1; k < state.size(); ++k) {
      rho(n, k) = state[n] * std::conj(state[k]);
      rho(k, n) = std::conj(rho(n, k));
    }
  }
  return DensityMatrix::from_matrix(rho, 0.0);
}

DensityMatrix density_matrix_of(const NoisyState& state, int trunc) {
  const auto pure = projector(state.base(), trunc);
  const auto thermal = thermal_density_matrix(state.temperature(), trunc);
  const double p = state.p();
  Eigen::MatrixXcd rho = (1.0 - p) * pure.matrix() + p * thermal.matrix();
  return DensityMatrix::from_matrix(rho, 0.0);
}

DensityMatrix density_matrix_of(const NoisyState& state) {
  return density_matrix_of(state, tail_truncation(state.base().max_photon_number(), state.temperature()));
}

DensityMatrix mix_with_thermal(const DensityMatrix& rho, double p, double temperature) {
  if (!(p >= 0.0 && p <= 1.0)) throw_invalid("mixture coefficient p must lie in [0, 1]");
  const int trunc = p == 0.0 ? rho.dim() - 1 : tail_truncation(rho.dim() - 1, temperature);
  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(trunc + 1, trunc + 1);
  mixed.topLeftCorner(rho.dim(), rho.dim()) = (1.0 - p) * rho.matrix();
  if (p > 0.0) mixed += p * thermal_density_matrix(temperature, trunc).matrix();
  return DensityMatrix::from_matrix(mixed, 0.0);
}

}  // namespace focktomo
