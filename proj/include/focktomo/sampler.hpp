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

#include <cstdint>
#include <string>
#include <vector>

#include "focktomo/tomogram.hpp"

namespace focktomo {

/// Lattice points of the cached CDF used for inverse-transform sampling.
inline constexpr int kCdfLatticeSize = 4096;

/// How local-oscillator phases are chosen: `stations` equally spaced
/// phases 2 pi s / stations visited round-robin, or uniform random when
/// stations == 0.
struct ThetaScheme {
  int stations = 0;

  static ThetaScheme fixed(int stations);
  static ThetaScheme uniform_random() { return {}; }
  bool is_random() const { return stations == 0; }

  /// "stations=<k>" or "uniform-random".
  std::string describe() const;
  static ThetaScheme parse(const std::string& text);
};

struct HomodyneRecord {
  double theta;  // in [0, 2 pi)
  double x;
};

struct HomodyneRecordSet {
  std::vector<HomodyneRecord> records;
  std::uint64_t seed = 0;
  ThetaScheme scheme;
  int streams = 1;
  std::string source;
  std::vector<std::string> extra_metadata;  // other '#' lines, preserved verbatim
};

/// Synthetic homodyne detection of `source`.
///
/// X is drawn from w(., theta) by inverting a piecewise-linear CDF built on
/// kCdfLatticeSize points over [-default_x_max, default_x_max]. The CDF is
/// assembled from theta harmonics, so uniform random phases need no
/// per-sample tabulation.
///
/// Random numbers come from std::mt19937_64. Records are split into
/// `streams` contiguous blocks; block w uses a generator seeded with
/// std::seed_seq{seed_lo, seed_hi, w}. Output is a pure function of
/// (source, n, scheme, seed, streams).
HomodyneRecordSet sample(const TomogramSource& source, std::size_t n, ThetaScheme scheme, std::uint64_t seed,
                         int streams = 1);

struct EmpiricalTomogram {
  TomogramGrid grid;
  std::size_t clipped = 0;    // records with |x| > x_max
  double clipped_mass = 0.0;  // clipped / total
};

/// Histogram estimate of w on the grid lattice.
///
/// Theta bin j is centred on 2 pi j / n_theta. X bin i is centred on node
/// X_i with width dx (half width at the two ends). Each row is scaled to
/// trapezoid-integrate to one. Records from fixed stations require
/// stations % n_theta == 0. An empty theta bin is an error.
EmpiricalTomogram empirical_tomogram(const HomodyneRecordSet& records, int n_x, double x_max, int n_theta);

}  // namespace focktomo
