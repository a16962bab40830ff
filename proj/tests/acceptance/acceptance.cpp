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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "focktomo/fit.hpp"
#include "focktomo/io.hpp"
#include "focktomo/purity.hpp"
#include "focktomo/reconstruct.hpp"
#include "focktomo/sampler.hpp"
#include "focktomo/tomogram.hpp"
#include "focktomo/validate.hpp"

using namespace focktomo;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

FockSuperposition random_state(std::mt19937_64& rng, int max_n) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(static_cast<std::size_t>(max_n) + 1);
  for (auto& a : amps) a = Complex(gauss(rng), gauss(rng));
  return FockSuperposition::create(amps, true);
}

TomogramGrid default_grid(const TomogramSource& source) {
  return tomogram_grid(source, default_x_max(source), kDefaultNx, kDefaultNtheta);
}

std::vector<FockSuperposition> random_states(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<FockSuperposition> out;
  for (int k = 0; k < count; ++k) out.push_back(random_state(rng, k % (max_n + 1)));
  return out;
}

FockSuperposition make(std::initializer_list<Complex> amps) {
  return FockSuperposition::create(std::vector<Complex>(amps), true);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

Outcome forward_normalization() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (const auto& s : random_states(1, 20, 8)) {
    for (double e : check_normalization(default_grid(s))) worst = std::max(worst, e);
  }
  const double elapsed = seconds_since(start);
  return {worst < 1e-8 && elapsed < 2.0, "max |int w dX - 1| = " + fmt(worst) + ", " + fmt(elapsed) + " s"};
}

Outcome symmetry_claim() {
  double worst = 0.0;
  for (const auto& s : random_states(2, 20, 8)) worst = std::max(worst, symmetry_indicator(default_grid(s)));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    const NoisyState noisy(random_state(rng, k + 1), 0.2 * (k + 1), 0.3 * (k + 1));
    worst = std::max(worst, symmetry_indicator(default_grid(noisy)));
    worst = std::max(worst, symmetry_indicator(default_grid(density_matrix_of(noisy))));
  }

  // The centre column of |1> vanishes identically, so the mirror of the
  // perturbed node is an exact zero.
  auto grid = default_grid(make({0.0, 1.0}));
  const int centre = grid.n_x() / 2;
  grid.at(5, centre) += 1e-3;
  const double injected = symmetry_indicator(grid);
  return {worst < 1e-12 && injected == 1e-3,
          "model max = " + fmt(worst) + ", injected = " + format_double(injected)};
}

Outcome harmonic_support() {
  double worst = 0.0;
  for (const auto& s : random_states(4, 20, 8)) {
    const int n = s.max_photon_number();
    const auto spectrum = fourier_theta(default_grid(s), (kDefaultNtheta - 1) / 2);
    for (int m = n + 1; m <= spectrum.m_max; ++m) {
      for (const auto& f : spectrum.profiles[static_cast<std::size_t>(m)]) worst = std::max(worst, std::abs(f));
    }
  }
  return {worst < 1e-10, "max |F_m|, m > N = " + fmt(worst)};
}

Outcome energy_identity() {
  double worst = 0.0;
  for (const auto& s : random_states(5, 20, 8)) {
    const auto grid = default_grid(s);
    double moment = 0.0;
    for (int j = 0; j < grid.n_theta(); ++j) {
      for (int i = 0; i < grid.n_x(); ++i) {
        const double weight = (i == 0 || i == grid.n_x() - 1) ? 0.5 : 1.0;
        moment += weight * grid.x(i) * grid.x(i) * grid(j, i);
      }
    }
    moment *= grid.dx() / grid.n_theta();
    double energy = 0.0;
    for (int n = 0; n < s.size(); ++n) energy += s.population(n) * (n + 0.5);
    worst = std::max(worst, std::abs(moment - energy));
  }
  return {worst < 1e-7, "max |<X^2> - sum |c_n|^2 (n + 1/2)| = " + fmt(worst)};
}

Outcome purity_cross_validation() {
  std::mt19937_64 rng(6);
  const std::vector<FockSuperposition> bases = {make({1.0}), make({0.0, 1.0}), random_state(rng, 4)};
  double worst = 0.0, worst_tanh = 0.0;
  for (const auto& base : bases) {
    for (double p : {0.0, 0.3, 0.7, 1.0}) {
      for (double t : {0.25, 1.0, 4.0}) {
        const NoisyState state(base, p, t);
        const double analytic = purity_analytic(state);
        worst = std::max(worst, std::abs(analytic - purity_of_density_matrix(density_matrix_of(state))));
        if (p == 1.0) worst_tanh = std::max(worst_tanh, std::abs(analytic - std::tanh(0.5 / t)));
      }
    }
  }
  return {worst < 1e-9 && worst_tanh < 1e-14, "max |mu - Tr rho^2| = " + fmt(worst) + ", p=1 vs tanh " + fmt(worst_tanh)};
}

double purity_term_by_term(const std::vector<double>& populations, double p, double t) {
  double sum = 0.0;
  for (std::size_t n = 0; n < populations.size(); ++n) sum += populations[n] * std::exp(-(n + 0.5) / t);
  return (1 - p) * (1 - p) + 4 * (1 - p) * p * std::sinh(1 / (2 * t)) * sum + p * p * std::tanh(1 / (2 * t));
}

Outcome purity_non_monotonic() {
  const auto one = make({0.0, 1.0});
  const std::vector<double> populations = {0.0, 1.0};
  const double mu_cold = purity_analytic(NoisyState(one, 0.3, 0.01));
  const double mu_mid = purity_analytic(NoisyState(one, 0.3, 0.5));
  const double mu_hot = purity_analytic(NoisyState(one, 0.3, 50.0));
  double worst = 0.0;
  for (double t : {0.01, 0.5, 50.0}) {
    worst = std::max(worst, std::abs(purity_analytic(NoisyState(one, 0.3, t)) - purity_term_by_term(populations, 0.3, t)));
  }
  // Extended-precision values of the closed form.
  const bool frozen = std::abs(mu_cold - 0.58) < 1e-12 && std::abs(mu_mid - 0.6076917246621278) < 1e-12 &&
                      std::abs(mu_hot - 0.49905184834606143) < 1e-12;
  const bool ordered = mu_mid > mu_cold && mu_cold > mu_hot;
  return {ordered && worst < 1e-6 && frozen,
          "mu(0.5) = " + format_double(mu_mid) + " > mu(0.01) = " + format_double(mu_cold) + " > mu(50) = " +
              format_double(mu_hot) + ", max term-by-term gap " + fmt(worst)};
}

Outcome reconstruction_roundtrip() {
  const auto start = Clock::now();
  double worst = 1.0;
  for (const auto& s : random_states(7, 20, 5)) {
    worst = std::min(worst, fidelity(reconstruct_density_matrix(default_grid(s), s.max_photon_number()), s));
  }
  const NoisyState mix(make({1.0}), 0.5, 1.0);
  const double mu = purity_from_tomogram(tomogram_grid(mix, 13.5, 801, 82), 40);
  const double elapsed = seconds_since(start);
  return {worst >= 1 - 1e-8 && std::abs(mu - 0.6815890) < 1e-5 && elapsed < 10.0,
          "min fidelity = 1 - " + fmt(1 - worst) + ", mixture purity = " + format_double(mu) + ", " + fmt(elapsed) + " s"};
}

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome sampler_statistics() {
  const auto vacuum = make({1.0});
  const auto set = sample(vacuum, 100000, ThetaScheme::fixed(16), 20240601);
  double sum = 0.0, sq = 0.0;
  std::vector<double> xs;
  for (const auto& r : set.records) {
    sum += r.x;
    sq += r.x * r.x;
    xs.push_back(r.x);
  }
  const double n = static_cast<double>(xs.size());
  const double variance = sq / n - (sum / n) * (sum / n);

  std::sort(xs.begin(), xs.end());
  double ks = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double cdf = 0.5 * (1 + std::erf(xs[k]));
    ks = std::max({ks, cdf - static_cast<double>(k) / n, static_cast<double>(k + 1) / n - cdf});
  }
  const double critical = 1.63 / std::sqrt(n);

  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "focktomo_acceptance_a.txt";
  const auto b = dir / "focktomo_acceptance_b.txt";
  write_samples(sample(vacuum, 100000, ThetaScheme::fixed(16), 99), a);
  write_samples(sample(vacuum, 100000, ThetaScheme::fixed(16), 99), b);
  const bool identical = read_bytes(a) == read_bytes(b) && !read_bytes(a).empty();
  std::filesystem::remove(a);
  std::filesystem::remove(b);

  return {std::abs(variance - 0.5) <= 0.01 && ks < critical && identical,
          "variance = " + fmt(variance) + ", KS = " + fmt(ks) + " (critical " + fmt(critical) + "), files " +
              (identical ? "identical" : "differ")};
}

Outcome noise_fit() {
  const auto start = Clock::now();
  const auto base = make({0.0, 1.0});
  const NoisyState truth(base, 0.3, 0.5);
  const auto result = fit_noise(default_grid(truth), base);
  const double elapsed = seconds_since(start);
  const double dp = std::abs(result.p - 0.3);
  const double dt = std::abs(result.temperature - 0.5) / 0.5;
  return {dp < 1e-3 && dt < 1e-2 && elapsed < 30.0,
          "p = " + format_double(result.p) + ", T = " + format_double(result.temperature) + ", " + fmt(elapsed) + " s"};
}

Outcome superposition_heatmaps() {
  const double s2 = 1 / std::sqrt(2.0), s3 = 1 / std::sqrt(3.0);
  const std::vector<FockSuperposition> states = {
      FockSuperposition::create(std::vector<Complex>{s2, Complex(0, s2)}, true),
      FockSuperposition::create(std::vector<Complex>{s2, 0.0, s2}, true),
      FockSuperposition::create(std::vector<Complex>{s2, 0.0, 0.0, s2}, true),
      FockSuperposition::create(std::vector<Complex>{s3, std::polar(s3, 2 * std::numbers::pi / 3), s3}, true)};
  const auto dir = std::filesystem::temp_directory_path();
  bool rendered = true;
  std::string period_pi;
  int n_x = 0, n_theta = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto grid = default_grid(states[k]);
    const auto path = dir / ("focktomo_heatmap_" + std::to_string(k) + ".pgm");
    emit_heatmap(grid, {}, path);
    const auto bytes = read_bytes(path);
    const std::string header = "P5\n" + std::to_string(grid.n_x()) + " " + std::to_string(grid.n_theta()) + "\n255\n";
    rendered = rendered && bytes.size() == header.size() + grid.values().size() && bytes.rfind(header, 0) == 0;
    if (k == 1) {
      period_pi = bytes.substr(header.size());
      n_x = grid.n_x();
      n_theta = grid.n_theta();
    }
    std::filesystem::remove(path);
    auto sidecar = path;
    sidecar += ".txt";
    std::filesystem::remove(sidecar);
  }
  bool shift_invariant = !period_pi.empty();
  for (int j = 0; j < n_theta && shift_invariant; ++j) {
    const int shifted = (j + n_theta / 2) % n_theta;
    shift_invariant = std::memcmp(period_pi.data() + static_cast<std::size_t>(j) * n_x,
                                  period_pi.data() + static_cast<std::size_t>(shifted) * n_x, static_cast<std::size_t>(n_x)) == 0;
  }
  return {rendered && shift_invariant, std::string("4 heatmaps ") + (rendered ? "rendered" : "broken") +
                                           ", half-turn shift " + (shift_invariant ? "byte-identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"forward model normalization", forward_normalization},
      {"symmetry relation", symmetry_claim},
      {"theta-harmonic support", harmonic_support},
      {"energy identity", energy_identity},
      {"purity cross-validation", purity_cross_validation},
      {"one-photon purity non-monotonic", purity_non_monotonic},
      {"reconstruction roundtrip", reconstruction_roundtrip},
      {"sampler statistics", sampler_statistics},
      {"noise fit", noise_fit},
      {"tomogram heatmaps", superposition_heatmaps},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
