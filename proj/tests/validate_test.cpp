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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "focktomo/error.hpp"
#include "test_util.hpp"

using namespace focktomo;

namespace {

FockSuperposition make(std::initializer_list<Complex> amps) {
  return FockSuperposition::create(std::vector<Complex>(amps), true);
}

TomogramGrid vacuum_grid() {
  const auto s = make({1.0});
  return tomogram_grid(s, default_x_max(s), kDefaultNx, kDefaultNtheta);
}

TomogramGrid shifted(const TomogramGrid& grid, int s) {
  std::vector<double> values(grid.values().size());
  const int n_x = grid.n_x();
  for (int j = 0; j < grid.n_theta(); ++j) {
    for (int i = 0; i < n_x; ++i) values[j * n_x + i] = grid((j + s) % grid.n_theta(), i);
  }
  return TomogramGrid(grid.x_min(), grid.x_max(), n_x, grid.n_theta(), values);
}

}  // namespace

TEST(SymmetryIndicator, Examples) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = oracle::random_state(rng, 2 * trial);
    EXPECT_LE(symmetry_indicator(tomogram_grid(s, default_x_max(s), 201, 16)), 1e-12);
  }

  auto grid = vacuum_grid();
  grid.at(5, 100) += 1e-3;
  EXPECT_EQ(symmetry_indicator(grid), grid(5, 100) - grid(5 + 32, kDefaultNx - 1 - 100));
  EXPECT_NEAR(symmetry_indicator(grid), 1e-3, 1e-15);

  EXPECT_THROW(symmetry_indicator(tomogram_grid(make({1.0}), 5.0, 200, 16)), Error);
  EXPECT_THROW(symmetry_indicator(tomogram_grid(make({1.0}), 5.0, 201, 15)), Error);
  EXPECT_THROW(symmetry_indicator(TomogramGrid(-4.0, 5.0, 11, 4, std::vector<double>(44, 0.0))), Error);
}

TEST(SymmetryIndicator, InvariantUnderThetaShift) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(16 * 21);
  for (double& v : values) v = unit(rng);
  const TomogramGrid grid(-3.0, 3.0, 21, 16, values);
  for (int s = 1; s < 16; ++s) EXPECT_EQ(symmetry_indicator(shifted(grid, s)), symmetry_indicator(grid));

  const auto model = tomogram_grid(make({1.0, 0.0, 1.0}), 6.0, 121, 16);
  auto exact = model;
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 121; ++i) exact.at(j + 8, 120 - i) = exact(j, i);
  }
  ASSERT_EQ(symmetry_indicator(exact), 0.0);
  for (int s = 1; s < 16; ++s) EXPECT_EQ(symmetry_indicator(shifted(exact, s)), 0.0);
}

TEST(CheckNormalization, Examples) {
  const auto grid = vacuum_grid();
  for (double e : check_normalization(grid)) EXPECT_LT(e, 1e-8);

  std::vector<double> doubled(grid.values());
  for (double& v : doubled) v *= 2;
  const TomogramGrid twice(grid.x_min(), grid.x_max(), grid.n_x(), grid.n_theta(), doubled);
  for (double e : check_normalization(twice)) EXPECT_NEAR(e, 1.0, 1e-8);

  EXPECT_THROW(check_normalization(TomogramGrid(-1.0, 1.0, 2, 1, {0.5, 0.5})), Error);
}

TEST(CheckNonnegativity, Examples) {
  auto grid = vacuum_grid();
  EXPECT_GE(check_nonnegativity(grid), -1e-12);
  grid.at(3, 7) = -0.01;
  EXPECT_EQ(check_nonnegativity(grid), -0.01);
  EXPECT_GT(check_nonnegativity(tomogram_grid(thermal_density_matrix(1.0, 50), 8.0, 161, 8)), 0.0);
}

TEST(UncertaintyProducts, Examples) {
  for (double u : uncertainty_products(vacuum_grid())) EXPECT_NEAR(u, 0.25, 1e-6);

  const NoisyState thermal(make({1.0}), 1.0, 1.0);
  const auto grid = tomogram_grid(thermal, default_x_max(thermal) + 3, 1001, 16);
  for (double u : uncertainty_products(grid)) EXPECT_NEAR(u, 1.1706735942077923, 1e-5);

  EXPECT_THROW(uncertainty_products(tomogram_grid(make({1.0}), 5.0, 101, 6)), Error);
}

TEST(UncertaintyProducts, SqueezedDataIsFlagged) {
  // Gaussian rows with variance s2 at theta = 0 and 0.2 / s2 at theta = pi/2.
  const int n_x = 801, n_theta = 4;
  const double x_max = 8.0;
  std::vector<double> values(n_x * n_theta);
  for (int j = 0; j < n_theta; ++j) {
    const double var = j % 2 == 0 ? 0.25 : 0.8;
    for (int i = 0; i < n_x; ++i) {
      const double x = -x_max + 2 * x_max * i / (n_x - 1);
      values[j * n_x + i] = std::exp(-x * x / (2 * var)) / std::sqrt(2 * std::numbers::pi * var);
    }
  }
  const TomogramGrid grid(-x_max, x_max, n_x, n_theta, values);
  for (double u : uncertainty_products(grid)) EXPECT_NEAR(u, 0.2, 1e-9);
  const auto report = validate(grid);
  EXPECT_FALSE(report.verdict());
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.name == "uncertainty") {
      found = true;
      EXPECT_FALSE(c.pass);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Validate, Examples) {
  const auto s = make({1.0, 0.0, 0.0, 1.0});
  const auto model = tomogram_grid(s, default_x_max(s), kDefaultNx, kDefaultNtheta);
  const auto report = validate(model);
  EXPECT_TRUE(report.verdict());
  EXPECT_EQ(report.checks.size(), 4u);
  EXPECT_TRUE(report.skipped.empty());
  EXPECT_TRUE(validate(model, Thresholds::strict()).verdict());

  auto blob = model;
  for (int i = 400; i < 410; ++i) blob.at(3, i) += 5e-2;
  const auto bad = validate(blob);
  EXPECT_FALSE(bad.verdict());
  for (const auto& c : bad.checks) {
    if (c.name == "symmetry") EXPECT_FALSE(c.pass);
  }

  const TomogramGrid zeros(-5.0, 5.0, 101, 8, std::vector<double>(808, 0.0));
  const auto empty = validate(zeros);
  EXPECT_FALSE(empty.verdict());
  EXPECT_EQ(empty.max_normalization_error, 1.0);
}

TEST(Validate, SkipsChecksWithoutLatticeSupport) {
  const auto grid = tomogram_grid(make({1.0}), 6.0, 200, 6);
  const auto report = validate(grid);
  EXPECT_FALSE(report.symmetry_indicator.has_value());
  EXPECT_FALSE(report.min_uncertainty_product.has_value());
  EXPECT_EQ(report.skipped.size(), 2u);
  EXPECT_TRUE(report.verdict());
  for (const auto& c : report.checks) {
    EXPECT_TRUE(std::isfinite(c.measured));
    EXPECT_TRUE(std::isfinite(c.threshold));
  }
}

TEST(Validate, DeterministicReports) {
  const auto grid = vacuum_grid();
  const auto a = validate(grid);
  const auto b = validate(grid);
  EXPECT_EQ(report_json(a), report_json(b));
  EXPECT_EQ(report_text(a), report_text(b));
  EXPECT_NE(report_json(a).find("\"format\": \"validation-report/1\""), std::string::npos);
  EXPECT_NE(report_json(a).find("\"verdict\": true"), std::string::npos);
}
