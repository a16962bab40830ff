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

#include <optional>
#include <string>
#include <vector>

#include "focktomo/tomogram.hpp"

namespace focktomo {

/// max over lattice nodes of |w(X, theta) - w(-X, theta + pi)|.
/// Needs a symmetric lattice (see TomogramGrid::is_symmetric_lattice).
double symmetry_indicator(const TomogramGrid& grid);

/// |trapezoid(w(., theta_j)) - 1| per row. Needs n_x >= 3.
std::vector<double> check_normalization(const TomogramGrid& grid);

/// Minimum grid value.
double check_nonnegativity(const TomogramGrid& grid);

/// Var_theta(X) * Var_{theta + pi/2}(X) per row, from trapezoid moments of
/// the row normalized by its own integral. Needs n_theta divisible by 4.
std::vector<double> uncertainty_products(const TomogramGrid& grid);

struct Thresholds {
  double symmetry = 1e-2;
  double normalization = 1e-2;
  double negativity = -1e-3;
  double uncertainty = 0.25 * (1.0 - 1e-2);

  /// Tolerances for model-generated grids.
  static Thresholds strict();
};

struct CheckResult {
  std::string name;
  double threshold;
  double measured;
  bool pass;
};

struct ValidationReport {
  std::optional<double> symmetry_indicator;
  double max_normalization_error = 0.0;
  std::vector<double> per_theta_normalization;
  double min_value = 0.0;
  std::optional<double> min_uncertainty_product;
  std::vector<CheckResult> checks;
  std::vector<std::string> skipped;  // checks whose lattice preconditions failed

  bool verdict() const;
};

/// Runs every applicable check. Failures are entries in the report, never
/// exceptions.
ValidationReport validate(const TomogramGrid& grid, const Thresholds& thresholds = {});

/// {"format":"validation-report/1","checks":[...],"verdict":...}
std::string report_json(const ValidationReport& report);

std::string report_text(const ValidationReport& report);

}  // namespace focktomo
