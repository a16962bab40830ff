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

#include "focktomo/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>


namespace focktomo {
namespace {

constexpr int kScanPoints = 64;
constexpr double kTolerance = 1e-6;
constexpr int kMaxSweeps = 1000;

class Residual {
 public:
  Residual(const TomogramGrid& grid, const FockSuperposition& base) : grid_(grid) {
    const auto model = tomogram_grid(base, grid.x_max(), grid.n_x(), grid.n_theta());
    // tomogram_grid lays nodes on a symmetric range; rebuild on the data's own nodes otherwise.
    if (grid.x_min() == -grid.x_max()) {
      pure_ = model.values();
    } else {
      pure_.resize(grid.values().size());
      for (int j = 0; j < grid.n_theta(); ++j) {
        for (int i = 0; i < grid.n_x(); ++i) {
          pure_[index(j, i)] = fss_tomogram_point(base, grid.x(i), grid.theta(j));
        }
      }
    }
    thermal_.resize(static_cast<std::size_t>(grid.n_x()));
  }

  void set_temperature(double t) {
    for (int i = 0; i < grid_.n_x(); ++i) thermal_[static_cast<std::size_t>(i)] = thermal_tomogram_point(t, grid_.x(i));
  }

  double value(double p) const {
    double sum = 0.0;
    for (int j = 0; j < grid_.n_theta(); ++j) {
      for (int i = 0; i < grid_.n_x(); ++i) {
        const double r = grid_(j, i) - (1.0 - p) * pure_[index(j, i)] - p * thermal_[static_cast<std::size_t>(i)];
        sum += r * r;
      }
    }
    return sum;
  }

  // argmin over p in [0, 1] at the current temperature; the residual is quadratic in p.
  double best_p() const {
    double num = 0.0;
    double den = 0.0;
    for (int j = 0; j < grid_.n_theta(); ++j) {
      for (int i = 0; i < grid_.n_x(); ++i) {
        const double f = pure_[index(j, i)];
        const double d = thermal_[static_cast<std::size_t>(i)] - f;
        num += (grid_(j, i) - f) * d;
        den += d * d;
      }
    }
    if (den == 0.0) return 0.0;
    return std::clamp(num / den, 0.0, 1.0);
  }

 private:
  std::size_t index(int j, int i) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(grid_.n_x()) + static_cast<std::size_t>(i);
  }

  const TomogramGrid& grid_;
  std::vector<double> pure_;
  std::vector<double> thermal_;
};

}  // namespace

NoiseFit fit_noise(const TomogramGrid& grid, const FockSuperposition& base) {
  Residual residual(grid, base);
  const double log_lo = std::log(kFitMinTemperature);
  const double log_hi = std::log(kFitMaxTemperature);
  const double log_step = (log_hi - log_lo) / (kScanPoints - 1);

  double best_r = std::numeric_limits<double>::infinity();
  double p = 0.0;
  double log_t = log_lo;
  for (int a = 0; a < kScanPoints; ++a) {
    const double lt = log_lo + a * log_step;
    residual.set_temperature(std::exp(lt));
    for (int b = 0; b < kScanPoints; ++b) {
      const double pp = static_cast<double>(b) / (kScanPoints - 1);
      const double r = residual.value(pp);
      if (r < best_r) {
        best_r = r;
        p = pp;
        log_t = lt;
      }
    }
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto r_at = [&](double lt, double pp) {
    residual.set_temperature(std::exp(lt));
    return residual.value(pp);
  };
  // Residual at log T with p at its closed-form optimum for that T.
  auto profile = [&](double lt) {
    residual.set_temperature(std::exp(lt));
    return residual.value(residual.best_p());
  };

  int sweeps = 0;
  for (; sweeps < kMaxSweeps; ++sweeps) {
    residual.set_temperature(std::exp(log_t));
    const double new_p = residual.best_p();

    double a = std::max(log_lo, log_t - log_step);
    double b = std::min(log_hi, log_t + log_step);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = profile(c);
    double fd = profile(d);
    while (b - a > 1e-10) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = profile(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = profile(d);
      }
    }
    const double new_log_t = 0.5 * (a + b);
    const bool converged = std::abs(new_p - p) < kTolerance && std::abs(new_log_t - log_t) < kTolerance;
    p = new_p;
    log_t = new_log_t;
    if (converged) break;
  }

  NoiseFit fit;
  fit.p = p;
  fit.temperature = std::exp(log_t);
  fit.residual = r_at(log_t, p);
  fit.iterations = sweeps + 1;
  return fit;
}

}  // namespace focktomo
