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

#include "focktomo/state.hpp"

namespace focktomo {

/// Closed-form Tr(rho_mix^2) of a pure superposition mixed with thermal
/// noise. The T = 0 vacuum-noise limit is taken analytically.
double purity_analytic(const NoisyState& state);

/// sum_{n,k} |rho_nk|^2.
double purity_of_density_matrix(const DensityMatrix& rho);

struct PurityLimits {
  double high_temperature;  // (1-p)^2 + p^2 / 2T
  double low_temperature;   // leading e^{-1/T} expansion
};

/// Asymptotic estimates evaluated at the state's T. The low-temperature
/// form keeps the |c_0|^2 and |c_1|^2 terms; for |1> it reduces to
/// (1-p)^2 + p^2 + 2p(1-2p) e^{-1/T}. Requires T > 0.
PurityLimits purity_limits(const NoisyState& state);

}  // namespace focktomo
