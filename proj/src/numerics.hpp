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

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace focktomo::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double trapezoid(std::span<const double> y, double dx) {
  if (y.size() < 2) return 0.0;
  double sum = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) sum += y[i];
  return sum * dx;
}

/// cos and sin of 2 pi r / n for r = 0..n-1. Indexing by (m * j) mod n makes
/// harmonics exactly periodic on the theta lattice.
struct PhaseTable {
  explicit PhaseTable(int n) : n(n), cos(static_cast<std::size_t>(n)), sin(static_cast<std::size_t>(n)) {
    for (int r = 0; r < n; ++r) {
      const double angle = kTwoPi * r / n;
      cos[static_cast<std::size_t>(r)] = std::cos(angle);
      sin[static_cast<std::size_t>(r)] = std::sin(angle);
    }
  }

  std::size_t slot(long long m, long long j) const {
    long long r = (m * j) % n;
    if (r < 0) r += n;
    return static_cast<std::size_t>(r);
  }

  int n;
  std::vector<double> cos;
  std::vector<double> sin;
};

}  // namespace focktomo::detail
