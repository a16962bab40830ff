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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focktomo/sampler.hpp"
#include "focktomo/state.hpp"
#include "focktomo/tomogram.hpp"

namespace focktomo {

// All readers are strict: malformed input throws Error(kFormat) and is never
// repaired. Unreadable or unwritable files throw Error(kIo). Writers are
// byte-deterministic.

// tomogram-grid/1
std::string grid_to_json(const TomogramGrid& grid);
TomogramGrid grid_from_json(std::string_view text);
void write_grid(const TomogramGrid& grid, const std::filesystem::path& path);
TomogramGrid read_grid(const std::filesystem::path& path);

// density-matrix/1
std::string density_matrix_to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(std::string_view text);
void write_density_matrix(const DensityMatrix& rho, const std::filesystem::path& path);
DensityMatrix read_density_matrix(const std::filesystem::path& path);

// homodyne-samples/1
std::string samples_to_text(const HomodyneRecordSet& set);
HomodyneRecordSet samples_from_text(std::string_view text);
void write_samples(const HomodyneRecordSet& set, const std::filesystem::path& path);
HomodyneRecordSet read_samples(const std::filesystem::path& path);

struct HeatmapSpec {
  std::optional<double> value_floor;    // default 0
  std::optional<double> value_ceiling;  // default grid maximum
  double gamma = 1.0;
};

/// Binary 8-bit PGM (P5): n_x columns (X ascending), n_theta rows (theta
/// ascending), gray = round(255 * clamp((w - floor) / (ceiling - floor))^gamma).
std::vector<std::uint8_t> render_heatmap(const TomogramGrid& grid, const HeatmapSpec& spec = {});

/// Writes the PGM at `path` and the axis ranges at `path` + ".txt".
void emit_heatmap(const TomogramGrid& grid, const HeatmapSpec& spec, const std::filesystem::path& path);

/// Whitespace-separated matrix: the first line is n_x followed by the X
/// nodes, then one line per theta_j holding theta_j and the row values.
/// Numbers use 17 significant digits in C-locale scientific notation.
std::string matrix_text(const TomogramGrid& grid);
void emit_matrix_text(const TomogramGrid& grid, const std::filesystem::path& path);

/// Locale-independent decimal with 17 significant digits.
std::string format_double(double value);

/// Strict locale-independent parse of a whole token.
std::optional<double> parse_double(std::string_view token);

}  // namespace focktomo
