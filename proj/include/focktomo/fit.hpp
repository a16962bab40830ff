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
#include "focktomo/tomogram.hpp"

namespace focktomo {

inline constexpr double kFitMinTemperature = 1e-2;
inline constexpr double kFitMaxTemperature = 1e2;

struct NoiseFit {
  double p = 0.0;
  double temperature = 0.0;
  double residual = 0.0;  // sum of squared grid residuals at the optimum
  int iterations = 0;
};

/// Least-squares estimate of the thermal admixture (p, T) in a grid assumed
/// to come from (1-p) w_base + p w_th(T).
///
/// A 64 x 64 scan (p uniform on [0, 1], T logarithmic on [1e-2, 1e2]) seeds
/// coordinate descent: exact minimization in p, golden-section search in
/// log T, until both move by less than 1e-6.
NoiseFit fit_noise(const TomogramGrid& grid, const FockSuperposition& base);

}  // namespace focktomo
