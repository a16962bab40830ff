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

#include "focktomo/special.hpp"

#include <cmath>
#include <numbers>

#include "focktomo/error.hpp"

namespace focktomo {
namespace {

// pi^{-1/4}
const double kGroundNorm = std::pow(std::numbers::pi, -0.25);

// Below this log-magnitude psi_0 loses precision as a subnormal.
constexpr double kDirectLogFloor = -600.0;
constexpr double kRescaleAt = 1e150;

void check_order(int n) {
  if (n < 0) throw_invalid("Hermite order must be non-negative");
}

void check_finite(double x) {
  if (!std::isfinite(x)) throw_invalid("Hermite argument must be finite");
}

}  // namespace

double hermite_eval(int n, double x) {
  check_order(n);
  check_finite(x);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void fill_hermite_functions(double x, std::span<double> out) {
  check_finite(x);
  if (out.empty()) return;
  const std::size_t count = out.size();
  const double log_ground = -0.25 * std::log(std::numbers::pi) - 0.5 * x * x;

  if (log_ground > kDirectLogFloor) {
    // |psi_n| <= 0.7512, so the plain normalized recurrence never overflows.
    out[0] = kGroundNorm * std::exp(-0.5 * x * x);
    if (count == 1) return;
    out[1] = std::numbers::sqrt2 * x * out[0];
    for (std::size_t n = 1; n + 1 < count; ++n) {
      const double nd = static_cast<double>(n);
      out[n + 1] = x * std::sqrt(2.0 / (nd + 1.0)) * out[n] -
                   std::sqrt(nd / (nd + 1.0)) * out[n - 1];
    }
    return;
  }

  // Deep tail: run the recurrence on psi_n / exp(log_scale) and fold the
  // scale back in per entry.
  double log_scale = log_ground;
  double prev = 0.0;
  double cur = 1.0;
  auto store = [&](std::size_t n, double v) {
    out[n] = v == 0.0 ? 0.0 : std::copysign(std::exp(log_scale + std::log(std::abs(v))), v);
  };
  store(0, cur);
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const double nd = static_cast<double>(n);
    const double next = x * std::sqrt(2.0 / (nd + 1.0)) * cur - std::sqrt(nd / (nd + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAt) {
      prev /= kRescaleAt;
      cur /= kRescaleAt;
      log_scale += std::log(kRescaleAt);
    }
    store(n + 1, cur);
  }
}

double hermite_function(int n, double x) {
  check_order(n);
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  fill_hermite_functions(x, row);
  return row.back();
}

HermiteRow hermite_function_row(int n_max, double x) {
  check_order(n_max);
  HermiteRow row{n_max, x, std::vector<double>(static_cast<std::size_t>(n_max) + 1)};
  fill_hermite_functions(x, row.values);
  return row;
}

}  // namespace focktomo
