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

#include "focktomo/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "focktomo/error.hpp"
#include "numerics.hpp"

namespace focktomo {
namespace {

// Cumulative trapezoid integrals of every harmonic profile on the lattice.
// cdf(l, theta) = C_0[l] + 2 Re sum_{m>0} C_m[l] e^{i m theta}.
class HarmonicCdf {
 public:
  HarmonicCdf(const TomogramSource& source, double x_max) : x_max_(x_max) {
    dx_ = 2.0 * x_max / (kCdfLatticeSize - 1);
    std::vector<std::vector<Complex>> profiles(kCdfLatticeSize);
    for (int l = 0; l < kCdfLatticeSize; ++l) profiles[static_cast<std::size_t>(l)] = harmonic_profiles(source, node(l));
    harmonics_ = static_cast<int>(profiles[0].size());
    cumulative_.assign(static_cast<std::size_t>(kCdfLatticeSize) * static_cast<std::size_t>(harmonics_), Complex{});
    for (int l = 1; l < kCdfLatticeSize; ++l) {
      for (int m = 0; m < harmonics_; ++m) {
        cumulative_[slot(l, m)] =
            cumulative_[slot(l - 1, m)] + 0.5 * dx_ * (profiles[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(m)] +
                                                       profiles[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)]);
      }
    }
  }

  double node(int l) const { return x_max_ * static_cast<double>(2 * l - (kCdfLatticeSize - 1)) / (kCdfLatticeSize - 1); }

  double cdf(int l, std::span<const Complex> phases) const {
    double value = cumulative_[slot(l, 0)].real();
    double harmonics = 0.0;
    for (int m = 1; m < harmonics_; ++m) {
      const Complex& c = cumulative_[slot(l, m)];
      harmonics += c.real() * phases[static_cast<std::size_t>(m)].real() - c.imag() * phases[static_cast<std::size_t>(m)].imag();
    }
    return value + 2.0 * harmonics;
  }

  // e^{i m theta} for m = 0..harmonics-1.
  std::vector<Complex> phases(double theta) const {
    std::vector<Complex> out(static_cast<std::size_t>(harmonics_));
    for (int m = 0; m < harmonics_; ++m) out[static_cast<std::size_t>(m)] = std::polar(1.0, m * theta);
    return out;
  }

  std::vector<double> table(double theta) const {
    const auto ph = phases(theta);
    std::vector<double> out(kCdfLatticeSize);
    for (int l = 0; l < kCdfLatticeSize; ++l) out[static_cast<std::size_t>(l)] = cdf(l, ph);
    return out;
  }

  // Piecewise-linear inversion of a monotone lattice CDF given by `at`.
  template <class CdfAt>
  double invert(double u, CdfAt at) const {
    const double total = at(kCdfLatticeSize - 1);
    const double target = u * total;
    int lo = 0;
    int hi = kCdfLatticeSize - 1;
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (at(mid) <= target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double c_lo = at(lo);
    const double c_hi = at(hi);
    const double span = c_hi - c_lo;
    const double frac = span > 0.0 ? std::clamp((target - c_lo) / span, 0.0, 1.0) : 0.0;
    return node(lo) + frac * dx_;
  }

 private:
  std::size_t slot(int l, int m) const {
    return static_cast<std::size_t>(l) * static_cast<std::size_t>(harmonics_) + static_cast<std::size_t>(m);
  }

  double x_max_;
  double dx_ = 0.0;
  int harmonics_ = 0;
  std::vector<Complex> cumulative_;
};

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::mt19937_64 stream_generator(std::uint64_t seed, int stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

}  // namespace

ThetaScheme ThetaScheme::fixed(int stations) {
  if (stations < 1) throw_invalid("station count must be positive");
  return ThetaScheme{stations};
}

std::string ThetaScheme::describe() const {
  return is_random() ? std::string("uniform-random") : "stations=" + std::to_string(stations);
}

ThetaScheme ThetaScheme::parse(const std::string& text) {
  if (text == "uniform-random") return uniform_random();
  const std::string prefix = "stations=";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (!digits.empty() && digits.size() < 10 && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return fixed(std::stoi(digits));
    }
  }
  throw_format("unknown theta scheme '" + text + "'");
}

HomodyneRecordSet sample(const TomogramSource& source, std::size_t n, ThetaScheme scheme, std::uint64_t seed,
                         int streams) {
  if (n == 0) throw_invalid("sample count must be positive");
  if (streams < 1) throw_invalid("stream count must be positive");
  if (scheme.stations < 0) throw_invalid("station count must be non-negative");

  const HarmonicCdf cdf(source, default_x_max(source));
  HomodyneRecordSet out;
  out.records.resize(n);
  out.seed = seed;
  out.scheme = scheme;
  out.streams = streams;
  out.source = describe_source(source);

  std::vector<std::vector<double>> station_tables;
  for (int s = 0; s < scheme.stations; ++s) station_tables.push_back(cdf.table(detail::kTwoPi * s / scheme.stations));

  auto run_stream = [&](int stream) {
    const std::size_t begin = n * static_cast<std::size_t>(stream) / static_cast<std::size_t>(streams);
    const std::size_t end = n * (static_cast<std::size_t>(stream) + 1) / static_cast<std::size_t>(streams);
    auto gen = stream_generator(seed, stream);
    for (std::size_t r = begin; r < end; ++r) {
      HomodyneRecord& rec = out.records[r];
      if (scheme.is_random()) {
        rec.theta = detail::kTwoPi * uniform01(gen);
        if (rec.theta >= detail::kTwoPi) rec.theta = 0.0;
        const auto phases = cdf.phases(rec.theta);
        rec.x = cdf.invert(uniform01(gen), [&](int l) { return cdf.cdf(l, phases); });
      } else {
        const auto station = static_cast<int>(r % static_cast<std::size_t>(scheme.stations));
        rec.theta = detail::kTwoPi * station / scheme.stations;
        const auto& table = station_tables[static_cast<std::size_t>(station)];
        rec.x = cdf.invert(uniform01(gen), [&](int l) { return table[static_cast<std::size_t>(l)]; });
      }
    }
  };

  if (streams == 1) {
    run_stream(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < streams; ++w) pool.emplace_back(run_stream, w);
  }
  return out;
}

EmpiricalTomogram empirical_tomogram(const HomodyneRecordSet& records, int n_x, double x_max, int n_theta) {
  if (records.records.empty()) throw_invalid("no records to histogram");
  if (n_x < 3) throw_invalid("histogram needs n_x >= 3");
  if (n_theta < 1) throw_invalid("histogram needs n_theta >= 1");
  if (!(x_max > 0.0) || !std::isfinite(x_max)) throw_invalid("x_max must be positive");
  const int stations = records.scheme.stations;
  if (stations > 0 && stations % n_theta != 0) {
    throw_invalid("n_theta = " + std::to_string(n_theta) + " must divide the station count " + std::to_string(stations));
  }

  TomogramGrid grid(-x_max, x_max, n_x, n_theta,
                    std::vector<double>(static_cast<std::size_t>(n_x) * static_cast<std::size_t>(n_theta)));
  const double dx = grid.dx();
  std::vector<std::size_t> row_counts(static_cast<std::size_t>(n_theta), 0);
  std::size_t clipped = 0;
  for (const auto& rec : records.records) {
    int j = 0;
    if (stations > 0) {
      const auto s = static_cast<long long>(std::llround(rec.theta * stations / detail::kTwoPi)) % stations;
      j = static_cast<int>(((2 * s * n_theta + stations) / (2LL * stations)) % n_theta);
    } else {
      j = static_cast<int>(std::floor(rec.theta * n_theta / detail::kTwoPi + 0.5)) % n_theta;
    }
    if (!(std::abs(rec.x) <= x_max)) {
      ++clipped;
      continue;
    }
    const int i = std::clamp(static_cast<int>(std::floor((rec.x + x_max) / dx + 0.5)), 0, n_x - 1);
    grid.at(j, i) += 1.0;
    ++row_counts[static_cast<std::size_t>(j)];
  }

  for (int j = 0; j < n_theta; ++j) {
    if (row_counts[static_cast<std::size_t>(j)] == 0) {
      throw_invalid("theta bin " + std::to_string(j) + " received no records");
    }
    auto row = grid.row(j);
    // Edge bins are half as wide as interior ones.
    row.front() *= 2.0;
    row.back() *= 2.0;
    const double scale = 1.0 / detail::trapezoid(row, dx);
    for (auto& v : row) v *= scale;
  }

  EmpiricalTomogram out{std::move(grid), clipped, static_cast<double>(clipped) / static_cast<double>(records.records.size())};
  out.grid.set_meta("empirical histogram of " + std::to_string(records.records.size()) + " records; clipped_mass=" +
                    std::to_string(out.clipped_mass) + "; source: " + records.source);
  return out;
}

}  // namespace focktomo
