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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "focktomo/focktomo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct Failure {
  int exit_code;
};

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using State = std::unique_ptr<ftm_state, Deleter<ftm_state, ftm_state_destroy>>;
using Matrix = std::unique_ptr<ftm_matrix, Deleter<ftm_matrix, ftm_matrix_destroy>>;
using Grid = std::unique_ptr<ftm_grid, Deleter<ftm_grid, ftm_grid_destroy>>;
using Samples = std::unique_ptr<ftm_samples, Deleter<ftm_samples, ftm_samples_destroy>>;
using Report = std::unique_ptr<ftm_report, Deleter<ftm_report, ftm_report_destroy>>;

void check(ftm_status status) {
  if (status == FTM_OK) return;
  std::cerr << "focktomo: " << ftm_last_error() << "\n";
  switch (status) {
    case FTM_ERR_INVALID_ARGUMENT:
      throw Failure{kExitUsage};
    case FTM_ERR_FORMAT:
    case FTM_ERR_IO:
      throw Failure{kExitIo};
    default:
      throw Failure{kExitFailure};
  }
}

[[noreturn]] void usage(const std::string& message) {
  std::cerr << "focktomo: " << message << "\n";
  throw Failure{kExitUsage};
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// --amps / --state-file with optional thermal admixture.
struct SourceFlags {
  std::string amps;
  std::string state_file;
  std::optional<double> p;
  std::optional<double> temp;
  bool no_normalize = false;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--amps", amps, "amplitudes \"re,im;re,im;...\" for n = 0..N");
    auto* f = cmd->add_option("--state-file", state_file, "density-matrix/1 JSON file");
    a->excludes(f);
    cmd->add_option("--p", p, "thermal mixture coefficient in [0, 1]");
    cmd->add_option("--temp", temp, "thermal noise temperature T >= 0");
    cmd->add_flag("--no-normalize", no_normalize, "reject amplitudes that are not already normalized");
  }

  bool has_source() const { return !amps.empty() || !state_file.empty(); }

  void check_noise() const {
    if (p.has_value() != temp.has_value() && p.value_or(0.0) != 0.0) usage("--p needs --temp");
  }

  State state() const {
    if (amps.empty()) usage("--amps is required");
    check_noise();
    ftm_state* raw = nullptr;
    check(ftm_state_parse(amps.c_str(), no_normalize ? 0 : 1, &raw));
    State s(raw);
    if (p) check(ftm_state_set_noise(s.get(), *p, temp.value_or(0.0)));
    return s;
  }

  Matrix matrix() const {
    check_noise();
    ftm_matrix* raw = nullptr;
    check(ftm_matrix_read(state_file.c_str(), &raw));
    Matrix m(raw);
    if (p && *p > 0.0) {
      ftm_matrix* mixed = nullptr;
      check(ftm_matrix_mix_thermal(m.get(), *p, temp.value_or(0.0), &mixed));
      m.reset(mixed);
    }
    return m;
  }
};

Grid load_grid(const std::string& path) {
  ftm_grid* raw = nullptr;
  check(ftm_grid_read(path.c_str(), &raw));
  return Grid(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optical tomograms of Fock state superpositions: forward model, sampling, validation, inversion."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ftm_version()));

  // tomogram
  auto* tomogram = app.add_subcommand("tomogram", "evaluate w(X, theta) on a grid");
  SourceFlags tomo_src;
  tomo_src.attach(tomogram);
  double tomo_xmax = 0.0;
  int tomo_nx = 641;
  int tomo_ntheta = 64;
  int tomo_threads = 1;
  std::string tomo_out;
  std::string tomo_text;
  tomogram->add_option("--xmax", tomo_xmax, "half-width of the X range (default: sqrt(2(N+1)) + 5, or 5 sigma)");
  tomogram->add_option("--nx", tomo_nx, "X nodes, inclusive endpoints")->capture_default_str();
  tomogram->add_option("--ntheta", tomo_ntheta, "theta nodes over [0, 2pi)")->capture_default_str();
  tomogram->add_option("--threads", tomo_threads, "worker threads (output is identical for any count)")->capture_default_str();
  tomogram->add_option("-o,--output", tomo_out, "tomogram-grid/1 JSON output")->required();
  tomogram->add_option("--matrix-text", tomo_text, "also write a plotting matrix text file");

  // sample
  auto* sample = app.add_subcommand("sample", "simulate homodyne detection");
  SourceFlags sample_src;
  sample_src.attach(sample);
  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  int sample_stations = 16;
  bool sample_random = false;
  int sample_streams = 1;
  std::string sample_out;
  sample->add_option("-n,--count", sample_n, "number of records")->required();
  sample->add_option("--seed", sample_seed, "random seed")->required();
  auto* stations_opt = sample->add_option("--stations", sample_stations, "equally spaced phase stations")->capture_default_str();
  sample->add_flag("--random-theta", sample_random, "draw theta uniformly at random")->excludes(stations_opt);
  sample->add_option("--streams", sample_streams, "independent RNG streams (1 for byte-reproducible files)")->capture_default_str();
  sample->add_option("-o,--output", sample_out, "homodyne-samples/1 output")->required();

  // hist
  auto* hist = app.add_subcommand("hist", "bin samples into an empirical tomogram grid");
  std::string hist_in;
  int hist_nx = 161;
  double hist_xmax = 7.0;
  int hist_ntheta = 16;
  std::string hist_out;
  hist->add_option("samples", hist_in, "homodyne-samples/1 file")->required();
  hist->add_option("--nx", hist_nx, "X nodes")->capture_default_str();
  hist->add_option("--xmax", hist_xmax, "half-width of the X range")->capture_default_str();
  hist->add_option("--ntheta", hist_ntheta, "theta bins")->capture_default_str();
  hist->add_option("-o,--output", hist_out, "tomogram-grid/1 JSON output")->required();

  // validate
  auto* validate = app.add_subcommand("validate", "check a grid against tomogram constraints");
  std::string val_in;
  bool val_strict = false;
  std::string val_out;
  validate->add_option("grid", val_in, "tomogram-grid/1 file")->required();
  validate->add_flag("--strict", val_strict, "model self-test tolerances (1e-9)");
  validate->add_option("-o,--output", val_out, "validation-report/1 JSON output");

  // reconstruct
  auto* reconstruct = app.add_subcommand("reconstruct", "least-squares density matrix from a grid");
  std::string rec_in;
  int rec_nmax = -1;
  bool rec_psd = false;
  std::string rec_out;
  std::string rec_compare;
  reconstruct->add_option("grid", rec_in, "tomogram-grid/1 file")->required();
  reconstruct->add_option("--nmax", rec_nmax, "photon-number cutoff")->required();
  reconstruct->add_flag("--psd-clip", rec_psd, "clip negative eigenvalues and renormalize");
  reconstruct->add_option("-o,--output", rec_out, "density-matrix/1 JSON output")->required();
  reconstruct->add_option("--compare-amps", rec_compare, "print the fidelity against this state literal");

  // purity
  auto* purity = app.add_subcommand("purity", "state purity from the closed form, a matrix file or a grid");
  SourceFlags pur_src;
  pur_src.attach(purity);
  std::string pur_grid;
  int pur_nmax = -1;
  bool pur_limits = false;
  int pur_digits = 7;
  purity->add_option("grid", pur_grid, "tomogram-grid/1 file (reconstruct, then Tr rho^2)");
  purity->add_option("--nmax", pur_nmax, "photon-number cutoff for grid input");
  purity->add_flag("--limits", pur_limits, "also print the high- and low-temperature estimates");
  purity->add_option("--digits", pur_digits, "decimal places")->capture_default_str();

  // fit
  auto* fit = app.add_subcommand("fit", "estimate thermal noise (p, T) from a grid");
  std::string fit_in;
  std::string fit_amps;
  fit->add_option("grid", fit_in, "tomogram-grid/1 file")->required();
  fit->add_option("--amps", fit_amps, "noiseless state literal")->required();

  // heatmap
  auto* heatmap = app.add_subcommand("heatmap", "render a grid as an 8-bit PGM");
  std::string heat_in;
  double heat_gamma = 1.0;
  std::optional<double> heat_floor;
  std::optional<double> heat_ceiling;
  std::string heat_out;
  heatmap->add_option("grid", heat_in, "tomogram-grid/1 file")->required();
  heatmap->add_option("--gamma", heat_gamma, "gray-level exponent")->capture_default_str();
  heatmap->add_option("--floor", heat_floor, "value mapped to black (default 0)");
  heatmap->add_option("--ceiling", heat_ceiling, "value mapped to white (default grid maximum)");
  heatmap->add_option("-o,--output", heat_out, "PGM output; axis ranges go to <output>.txt")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*tomogram) {
      if (!tomo_src.has_source()) usage("tomogram needs --amps or --state-file");
      ftm_grid* raw = nullptr;
      if (!tomo_src.amps.empty()) {
        const auto state = tomo_src.state();
        check(ftm_grid_from_state(state.get(), tomo_xmax, tomo_nx, tomo_ntheta, tomo_threads, &raw));
      } else {
        const auto matrix = tomo_src.matrix();
        check(ftm_grid_from_matrix(matrix.get(), tomo_xmax, tomo_nx, tomo_ntheta, tomo_threads, &raw));
      }
      const Grid grid(raw);
      check(ftm_grid_write(grid.get(), tomo_out.c_str()));
      if (!tomo_text.empty()) check(ftm_grid_write_matrix_text(grid.get(), tomo_text.c_str()));
      return kExitOk;
    }

    if (*sample) {
      if (!sample_src.has_source()) usage("sample needs --amps or --state-file");
      const int stations = sample_random ? 0 : sample_stations;
      if (!sample_random && stations < 1) usage("--stations must be positive");
      ftm_samples* raw = nullptr;
      if (!sample_src.amps.empty()) {
        const auto state = sample_src.state();
        check(ftm_sample_state(state.get(), sample_n, stations, sample_seed, sample_streams, &raw));
      } else {
        const auto matrix = sample_src.matrix();
        check(ftm_sample_matrix(matrix.get(), sample_n, stations, sample_seed, sample_streams, &raw));
      }
      const Samples samples(raw);
      check(ftm_samples_write(samples.get(), sample_out.c_str()));
      return kExitOk;
    }

    if (*hist) {
      ftm_samples* raw = nullptr;
      check(ftm_samples_read(hist_in.c_str(), &raw));
      const Samples samples(raw);
      ftm_grid* grid_raw = nullptr;
      double clipped = 0.0;
      check(ftm_samples_histogram(samples.get(), hist_nx, hist_xmax, hist_ntheta, &grid_raw, &clipped));
      const Grid grid(grid_raw);
      if (clipped > 0.0) std::cerr << "focktomo: clipped mass outside +-xmax: " << clipped << "\n";
      check(ftm_grid_write(grid.get(), hist_out.c_str()));
      return kExitOk;
    }

    if (*validate) {
      const auto grid = load_grid(val_in);
      ftm_report* raw = nullptr;
      check(ftm_validate(grid.get(), val_strict ? 1 : 0, &raw));
      const Report report(raw);
      std::cout << ftm_report_text(report.get());
      if (!val_out.empty()) {
        std::FILE* f = std::fopen(val_out.c_str(), "wb");
        if (f == nullptr) {
          std::cerr << "focktomo: cannot open '" << val_out << "' for writing\n";
          return kExitIo;
        }
        const std::string json = ftm_report_json(report.get());
        const bool ok = std::fwrite(json.data(), 1, json.size(), f) == json.size();
        if (std::fclose(f) != 0 || !ok) {
          std::cerr << "focktomo: error while writing '" << val_out << "'\n";
          return kExitIo;
        }
      }
      return ftm_report_verdict(report.get()) ? kExitOk : kExitValidation;
    }

    if (*reconstruct) {
      const auto grid = load_grid(rec_in);
      ftm_matrix* raw = nullptr;
      int warn = 0;
      check(ftm_reconstruct(grid.get(), rec_nmax, rec_psd ? 1 : 0, &raw, &warn));
      const Matrix rho(raw);
      if (warn) {
        std::cerr << "focktomo: warning: harmonic m = " << rec_nmax
                  << " is well above the noise floor; the cutoff may be too small\n";
      }
      check(ftm_matrix_write(rho.get(), rec_out.c_str()));
      if (!rec_compare.empty()) {
        ftm_state* s = nullptr;
        check(ftm_state_parse(rec_compare.c_str(), 1, &s));
        const State state(s);
        double f = 0.0;
        check(ftm_fidelity(rho.get(), state.get(), &f));
        std::cout << "fidelity " << fixed(f, 10) << "\n";
      }
      return kExitOk;
    }

    if (*purity) {
      double mu = 0.0;
      if (!pur_grid.empty()) {
        if (pur_src.has_source()) usage("give either a grid or a state, not both");
        if (pur_nmax < 0) usage("grid input needs --nmax");
        if (pur_limits) usage("--limits needs a state given by --amps");
        const auto grid = load_grid(pur_grid);
        check(ftm_purity_from_grid(grid.get(), pur_nmax, &mu));
        std::cout << fixed(mu, pur_digits) << "\n";
        return kExitOk;
      }
      if (!pur_src.state_file.empty()) {
        if (pur_limits) usage("--limits needs a state given by --amps");
        const auto matrix = pur_src.matrix();
        check(ftm_purity_matrix(matrix.get(), &mu));
        std::cout << fixed(mu, pur_digits) << "\n";
        return kExitOk;
      }
      const auto state = pur_src.state();
      check(ftm_purity_state(state.get(), &mu));
      std::cout << fixed(mu, pur_digits) << "\n";
      if (pur_limits) {
        double high = 0.0;
        double low = 0.0;
        check(ftm_purity_limits(state.get(), &high, &low));
        std::cout << "high_T_estimate " << fixed(high, pur_digits) << "\n";
        std::cout << "low_T_estimate " << fixed(low, pur_digits) << "\n";
      }
      return kExitOk;
    }

    if (*fit) {
      const auto grid = load_grid(fit_in);
      ftm_state* s = nullptr;
      check(ftm_state_parse(fit_amps.c_str(), 1, &s));
      const State state(s);
      double p = 0.0;
      double t = 0.0;
      double residual = 0.0;
      check(ftm_fit_noise(grid.get(), state.get(), &p, &t, &residual));
      std::cout << "p " << fixed(p, 7) << "\n";
      std::cout << "T " << fixed(t, 7) << "\n";
      std::cout << "residual " << residual << "\n";
      return kExitOk;
    }

    if (*heatmap) {
      const auto grid = load_grid(heat_in);
      check(ftm_grid_write_heatmap(grid.get(), heat_floor ? &*heat_floor : nullptr,
                                   heat_ceiling ? &*heat_ceiling : nullptr, heat_gamma, heat_out.c_str()));
      return kExitOk;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
