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

#include "focktomo/tomogram.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "focktomo/error.hpp"
#include "focktomo/special.hpp"
#include "test_util.hpp"

using namespace focktomo;

namespace {

const Complex kI(0.0, 1.0);
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

FockSuperposition make(std::initializer_list<Complex> amps) {
  return FockSuperposition::create(std::vector<Complex>(amps), true);
}

}  // namespace

TEST(FssTomogramPoint, Examples) {
  const auto vacuum = make({1.0});
  for (double theta : {0.0, 1.0, 4.0}) EXPECT_NEAR(fss_tomogram_point(vacuum, 0.0, theta), 0.56418958354775628, 1e-15);

  const auto plus_i = make({1.0, kI});
  EXPECT_NEAR(fss_tomogram_point(plus_i, 0.0, std::numbers::pi / 2), 0.28209479177387814, 1e-15);
  for (double x : {-2.0, -0.6, 0.3, 1.4}) {
    for (double theta : {0.0, 0.8, 2.5, 5.9}) {
      const double expected = std::exp(-x * x) * kInvSqrtPi * (0.5 + x * x + std::sqrt(2.0) * x * std::sin(theta));
      EXPECT_NEAR(fss_tomogram_point(plus_i, x, theta), expected, 1e-14);
    }
  }

  const auto one = make({0.0, 1.0});
  for (double x : {-1.5, 0.0, 0.9}) {
    for (double theta : {0.0, 2.0}) {
      EXPECT_NEAR(fss_tomogram_point(one, x, theta), 2 * x * x * std::exp(-x * x) * kInvSqrtPi, 1e-15);
    }
  }
}

TEST(FssTomogramPoint, MatchesRawHermiteForm) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> xs(-4.0, 4.0), thetas(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = oracle::random_state(rng, trial % 9);
    for (int k = 0; k < 10; ++k) {
      const double x = xs(rng), theta = thetas(rng);
      EXPECT_NEAR(fss_tomogram_point(s, x, theta), oracle::raw_tomogram(s, x, theta), 1e-12);
    }
  }
}

TEST(FssTomogramPoint, RejectsNonFinite) {
  EXPECT_THROW(fss_tomogram_point(make({1.0}), std::nan(""), 0.0), Error);
  EXPECT_THROW(fss_tomogram_point(make({1.0}), 0.0, INFINITY), Error);
}

TEST(ThermalTomogramPoint, Examples) {
  EXPECT_NEAR(thermal_tomogram_point(0.0, 0.0), 0.56418958354775628, 1e-15);
  EXPECT_NEAR(thermal_variance(1.0), 1.0819767068693265, 1e-15);
  EXPECT_EQ(thermal_variance(0.0), 0.5);
  EXPECT_THROW(thermal_tomogram_point(-1.0, 0.0), Error);
  for (double t : {0.0, 0.2, 1.0, 6.0}) {
    const double sigma = std::sqrt(thermal_variance(t));
    const double half = 12 * sigma;
    const int n = 4001;
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = thermal_tomogram_point(t, -half + 2 * half * i / (n - 1));
    EXPECT_NEAR(oracle::trapezoid(y, 2 * half / (n - 1)), 1.0, 1e-10);
  }
}

TEST(MixedTomogramPoint, Examples) {
  const auto base = make({1.0, 0.5 * kI, -0.25});
  for (double x : {-1.0, 0.2, 2.3}) {
    EXPECT_EQ(mixed_tomogram_point(NoisyState(base, 0.0, 1.0), x, 0.7), fss_tomogram_point(base, x, 0.7));
    EXPECT_NEAR(mixed_tomogram_point(NoisyState(base, 1.0, 1.0), x, 0.7), thermal_tomogram_point(1.0, x), 1e-16);
  }
  EXPECT_NEAR(mixed_tomogram_point(NoisyState(make({1.0}), 0.5, 1.0), 0.0, 0.0), 0.47386057321768175, 1e-15);
}

TEST(DmTomogramPoint, Examples) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = 1.0;
  const auto vac = DensityMatrix::from_matrix(m);
  for (double x : {-1.0, 0.0, 1.7}) EXPECT_NEAR(dm_tomogram_point(vac, x, 1.1), std::exp(-x * x) * kInvSqrtPi, 1e-15);

  EXPECT_NEAR(dm_tomogram_point(thermal_density_matrix(1.0, 60), 0.0, 0.0), thermal_tomogram_point(1.0, 0.0), 1e-10);

  const auto s = make({1.0, 0.0, 1.0});
  const auto rho = projector(s, 2);
  for (double x = -5.0; x <= 5.0; x += 0.37) {
    for (double theta = 0.0; theta < 6.3; theta += 0.41) {
      EXPECT_NEAR(dm_tomogram_point(rho, x, theta), fss_tomogram_point(s, x, theta), 1e-13);
    }
  }
}

TEST(DmTomogramPoint, RankOneAgreesWithPureForm) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> xs(-4.0, 4.0), thetas(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = oracle::random_state(rng, 1 + trial % 6);
    const auto rho = projector(s, s.max_photon_number());
    for (int k = 0; k < 10; ++k) {
      const double x = xs(rng), theta = thetas(rng);
      EXPECT_NEAR(dm_tomogram_point(rho, x, theta), fss_tomogram_point(s, x, theta), 1e-13);
    }
  }
}

TEST(TomogramGrid, Examples) {
  const auto vacuum = tomogram_grid(make({1.0}), 6.0, 241, 16);
  for (int j = 1; j < 16; ++j) {
    for (int i = 0; i < 241; ++i) EXPECT_EQ(vacuum(j, i), vacuum(0, i));
  }
  EXPECT_EQ(vacuum.x(0), -6.0);
  EXPECT_EQ(vacuum.x(240), 6.0);
  EXPECT_EQ(vacuum.x(120), 0.0);

  const auto even = tomogram_grid(make({1.0, 0.0, 1.0}), 7.0, 281, 16);
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 281; ++i) EXPECT_NEAR(even(j, i), even(j + 8, i), 1e-14);
  }

  EXPECT_THROW(tomogram_grid(make({1.0}), 0.0, 11, 4), Error);
  EXPECT_THROW(tomogram_grid(make({1.0}), 5.0, 1, 4), Error);
  EXPECT_THROW(tomogram_grid(make({1.0}), 5.0, 11, 0), Error);
}

TEST(TomogramGrid, DefaultRange) {
  EXPECT_NEAR(default_x_max(make({1.0})), std::sqrt(2.0) + 5, 1e-15);
  EXPECT_NEAR(default_x_max(make({0, 0, 0, 1.0})), std::sqrt(8.0) + 5, 1e-15);
  const NoisyState hot(make({1.0}), 0.5, 50.0);
  EXPECT_NEAR(default_x_max(hot), 5 * std::sqrt(thermal_variance(50.0)), 1e-12);
}

class RandomStateGrid : public ::testing::TestWithParam<int> {};

TEST_P(RandomStateGrid, PhysicalProperties) {
  std::mt19937_64 rng(100 + GetParam());
  const int n_max = GetParam() % 9;
  const auto s = oracle::random_state(rng, n_max);
  const double x_max = default_x_max(s);
  const int n_x = 2 * static_cast<int>(std::ceil(x_max / 0.01)) + 1;
  const auto grid = tomogram_grid(s, x_max, n_x, 32);

  double energy = 0.0;
  for (int n = 0; n <= n_max; ++n) energy += s.population(n) * (n + 0.5);

  double second_moment = 0.0;
  for (int j = 0; j < 32; ++j) {
    std::vector<double> row(grid.row(j).begin(), grid.row(j).end()), moment(n_x);
    EXPECT_NEAR(oracle::trapezoid(row, grid.dx()), 1.0, 1e-8);
    for (int i = 0; i < n_x; ++i) {
      moment[i] = grid.x(i) * grid.x(i) * row[i];
      EXPECT_GE(row[i], -1e-12);
      EXPECT_LE(std::abs(grid(j, i) - grid((j + 16) % 32, n_x - 1 - i)), 1e-12);
    }
    second_moment += oracle::trapezoid(moment, grid.dx()) / 32;
  }
  EXPECT_NEAR(second_moment, energy, 1e-7);

  // Discrete Fourier transform in theta has no support above N.
  for (int i = 0; i < n_x; i += 7) {
    for (int m = n_max + 1; m <= 15; ++m) {
      Complex f = 0.0;
      for (int j = 0; j < 32; ++j) f += grid(j, i) * std::polar(1.0, -m * grid.theta(j));
      EXPECT_LE(std::abs(f) / 32, 1e-10);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(States, RandomStateGrid, ::testing::Range(0, 12));

TEST(TomogramGrid, PeriodicInTheta) {
  std::mt19937_64 rng(8);
  const auto s = oracle::random_state(rng, 6);
  for (double x : {-2.0, 0.1, 1.3}) {
    for (double theta : {0.0, 0.9, 3.0}) {
      EXPECT_NEAR(fss_tomogram_point(s, x, theta), fss_tomogram_point(s, x, theta + 2 * std::numbers::pi), 1e-13);
    }
  }
}

TEST(TomogramGrid, DenseScanNonnegative) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> xs(-8.0, 8.0), thetas(0.0, 2 * std::numbers::pi), unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = oracle::random_state(rng, 8);
    const NoisyState noisy(s, unit(rng), 3 * unit(rng));
    for (int k = 0; k < 2000; ++k) {
      const double x = xs(rng), theta = thetas(rng);
      ASSERT_GE(fss_tomogram_point(s, x, theta), -1e-12);
      ASSERT_GE(mixed_tomogram_point(noisy, x, theta), -1e-12);
    }
  }
}

TEST(TomogramGrid, ThreadsAreBitIdentical) {
  std::mt19937_64 rng(4);
  const TomogramSource source = NoisyState(oracle::random_state(rng, 5), 0.2, 0.7);
  const auto serial = tomogram_grid(source, 7.0, 321, 24, 1);
  for (int threads : {2, 3, 8}) {
    const auto parallel = tomogram_grid(source, 7.0, 321, 24, threads);
    EXPECT_EQ(parallel.values(), serial.values());
  }
}

TEST(TomogramGrid, SourcesAgree) {
  std::mt19937_64 rng(6);
  const auto s = oracle::random_state(rng, 3);
  const NoisyState noisy(s, 0.4, 0.8);
  const auto a = tomogram_grid(noisy, 6.0, 121, 8);
  const auto b = tomogram_grid(density_matrix_of(noisy), 6.0, 121, 8);
  for (std::size_t k = 0; k < a.values().size(); ++k) EXPECT_NEAR(a.values()[k], b.values()[k], 1e-12);
}

TEST(HarmonicProfiles, ReassembleTomogram) {
  std::mt19937_64 rng(14);
  const TomogramSource source = NoisyState(oracle::random_state(rng, 4), 0.3, 1.2);
  for (double x : {-1.7, 0.0, 2.2}) {
    const auto d = harmonic_profiles(source, x);
    for (double theta : {0.0, 1.0, 2.7}) {
      double w = d[0].real();
      for (std::size_t m = 1; m < d.size(); ++m) w += 2 * (d[m] * std::polar(1.0, m * theta)).real();
      EXPECT_NEAR(w, tomogram_point(source, x, theta), 1e-13);
    }
  }
}
