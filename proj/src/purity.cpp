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

#include "focktomo/purity.hpp"

#include <cmath>

#include "focktomo/error.hpp"

namespace focktomo {

double purity_analytic(const NoisyState& state) {
  const double p = state.p();
  const double t = state.temperature();
  const auto& base = state.base();

  // 4 sinh(1/2T) e^{-(n+1/2)/T} = 2 e^{-n/T} (1 - e^{-1/T}); -> 2 delta_{n0} as T -> 0.
  double overlap = 0.0;
  double noise_purity = 1.0;
  if (t == 0.0) {
    overlap = 2.0 * base.population(0);
  } else {
    const double ground = -std::expm1(-1.0 / t);
    for (int n = 0; n < base.size(); ++n) overlap += 2.0 * base.population(n) * std::exp(-n / t) * ground;
    noise_purity = std::tanh(0.5 / t);
  }
  return (1.0 - p) * (1.0 - p) + (1.0 - p) * p * overlap + p * p * noise_purity;
}

double purity_of_density_matrix(const DensityMatrix& rho) { return rho.matrix().cwiseAbs2().sum(); }

PurityLimits purity_limits(const NoisyState& state) {
  const double t = state.temperature();
  if (!(t > 0.0)) throw_invalid("purity limits need T > 0");
  const double p = state.p();
  const double q = 1.0 - p;
  const double c0 = state.base().population(0);
  const double c1 = state.base().population(1);
  const double boltzmann = std::exp(-1.0 / t);
  return PurityLimits{
      q * q + p * p / (2.0 * t),
      q * q + p * p + 2.0 * p * q * c0 + boltzmann * (2.0 * p * q * (c1 - c0) - 2.0 * p * p),
  };
}

}  // namespace focktomo
