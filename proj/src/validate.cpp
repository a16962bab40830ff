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

#include "focktomo/validate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "focktomo/error.hpp"
#include "numerics.hpp"

namespace focktomo {
namespace {

constexpr const char* kSymmetry = "symmetry";
constexpr const char* kNormalization = "normalization";
constexpr const char* kNegativity = "negativity";
constexpr const char* kUncertainty = "uncertainty";

double variance(const TomogramGrid& grid, int j, std::vector<double>& scratch) {
  const auto row = grid.row(j);
  const double dx = grid.dx();
  const double mass = detail::trapezoid(row, dx);
  for (int i = 0; i < grid.n_x(); ++i) scratch[static_cast<std::size_t>(i)] = grid.x(i) * row[static_cast<std::size_t>(i)];
  const double mean = detail::trapezoid(scratch, dx) / mass;
  for (int i = 0; i < grid.n_x(); ++i) {
    const double d = grid.x(i) - mean;
    scratch[static_cast<std::size_t>(i)] = d * d * row[static_cast<std::size_t>(i)];
  }
  return detail::trapezoid(scratch, dx) / mass;
}

}  // namespace

double symmetry_indicator(const TomogramGrid& grid) {
  if (!grid.is_symmetric_lattice()) {
    throw_invalid("symmetry indicator needs x_min = -x_max, odd n_x and even n_theta");
  }
  const int half = grid.n_theta() / 2;
  const int last = grid.n_x() - 1;
  double worst = 0.0;
  for (int j = 0; j < grid.n_theta(); ++j) {
    const int mirror = (j + half) % grid.n_theta();
    for (int i = 0; i <= last; ++i) worst = std::max(worst, std::abs(grid(j, i) - grid(mirror, last - i)));
  }
  return worst;
}

std::vector<double> check_normalization(const TomogramGrid& grid) {
  if (grid.n_x() < 3) throw_invalid("normalization check needs n_x >= 3");
  std::vector<double> errors(static_cast<std::size_t>(grid.n_theta()));
  for (int j = 0; j < grid.n_theta(); ++j) {
    errors[static_cast<std::size_t>(j)] = std::abs(detail::trapezoid(grid.row(j), grid.dx()) - 1.0);
  }
  return errors;
}

double check_nonnegativity(const TomogramGrid& grid) {
  return *std::min_element(grid.values().begin(), grid.values().end());
}

std::vector<double> uncertainty_products(const TomogramGrid& grid) {
  if (grid.n_theta() % 4 != 0) throw_invalid("uncertainty products need n_theta divisible by 4");
  std::vector<double> scratch(static_cast<std::size_t>(grid.n_x()));
  std::vector<double> variances(static_cast<std::size_t>(grid.n_theta()));
  for (int j = 0; j < grid.n_theta(); ++j) variances[static_cast<std::size_t>(j)] = variance(grid, j, scratch);
  const int quarter = grid.n_theta() / 4;
  std::vector<double> products(variances.size());
  for (int j = 0; j < grid.n_theta(); ++j) {
    products[static_cast<std::size_t>(j)] =
        variances[static_cast<std::size_t>(j)] * variances[static_cast<std::size_t>((j + quarter) % grid.n_theta())];
  }
  return products;
}

Thresholds Thresholds::strict() { return Thresholds{1e-9, 1e-9, -1e-9, 0.25 * (1.0 - 1e-9)}; }

bool ValidationReport::verdict() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ValidationReport validate(const TomogramGrid& grid, const Thresholds& thresholds) {
  ValidationReport report;

  if (grid.is_symmetric_lattice()) {
    const double s = symmetry_indicator(grid);
    report.symmetry_indicator = s;
    report.checks.push_back({kSymmetry, thresholds.symmetry, s, s <= thresholds.symmetry});
  } else {
    report.skipped.emplace_back(kSymmetry);
  }

  if (grid.n_x() >= 3) {
    report.per_theta_normalization = check_normalization(grid);
    report.max_normalization_error =
        *std::max_element(report.per_theta_normalization.begin(), report.per_theta_normalization.end());
    const double e = report.max_normalization_error;
    report.checks.push_back({kNormalization, thresholds.normalization, e, std::isfinite(e) && e <= thresholds.normalization});
  } else {
    report.skipped.emplace_back(kNormalization);
  }

  report.min_value = check_nonnegativity(grid);
  report.checks.push_back({kNegativity, thresholds.negativity, report.min_value, report.min_value >= thresholds.negativity});

  bool uncertainty_done = false;
  if (grid.n_theta() % 4 == 0) {
    const auto products = uncertainty_products(grid);
    const double worst = *std::min_element(products.begin(), products.end());
    // An all-zero row has no variance; leave the check to normalization.
    if (std::isfinite(worst)) {
      report.min_uncertainty_product = worst;
      report.checks.push_back({kUncertainty, thresholds.uncertainty, worst, worst >= thresholds.uncertainty});
      uncertainty_done = true;
    }
  }
  if (!uncertainty_done) report.skipped.emplace_back(kUncertainty);
  return report;
}

std::string report_json(const ValidationReport& report) {
  nlohmann::ordered_json doc;
  doc["format"] = "validation-report/1";
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"threshold", c.threshold}, {"measured", c.measured}, {"pass", c.pass}});
  }
  doc["checks"] = std::move(checks);
  doc["skipped"] = report.skipped;
  doc["verdict"] = report.verdict();
  return doc.dump(2) + "\n";
}

std::string report_text(const ValidationReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(15) << "check" << std::setw(16) << "threshold" << std::setw(16) << "measured"
      << "result\n";
  out << std::scientific << std::setprecision(6);
  for (const auto& c : report.checks) {
    out << std::setw(15) << c.name << std::setw(16) << c.threshold << std::setw(16) << c.measured
        << (c.pass ? "pass" : "FAIL") << "\n";
  }
  for (const auto& name : report.skipped) out << std::setw(15) << name << "skipped\n";
  out << "verdict: " << (report.verdict() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace focktomo
