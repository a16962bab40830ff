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
#include <vector>

namespace focktomo {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
///
/// Overflows to +-inf for large n*x^2. Anything that multiplies by the
/// Gaussian weight afterwards should call hermite_function() instead.
double hermite_eval(int n, double x);

/// Normalized oscillator eigenfunction
///   psi_n(x) = H_n(x) exp(-x^2/2) / (pi^{1/4} sqrt(2^n n!)).
///
/// Evaluated by the normalized recurrence, never through H_n, so the result
/// is finite for every n <= 10^4 and |x| <= 50. Far in the Gaussian tail the
/// recurrence runs on a rescaled copy to avoid underflow of psi_0.
double hermite_function(int n, double x);

struct HermiteRow {
  int n_max = 0;
  double x = 0.0;
  std::vector<double> values;  // psi_0(x) .. psi_{n_max}(x)
};

HermiteRow hermite_function_row(int n_max, double x);

/// Fills out[n] = psi_n(x) for n = 0..out.size()-1 in one recurrence pass.
void fill_hermite_functions(double x, std::span<double> out);

}  // namespace focktomo
