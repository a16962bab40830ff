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

#include "focktomo/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "focktomo/error.hpp"
#include "json.hpp"
#include "numerics.hpp"

namespace focktomo {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kGridFormat = "tomogram-grid/1";
constexpr std::string_view kMatrixFormat = "density-matrix/1";
constexpr std::string_view kSamplesFormat = "homodyne-samples/1";

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "error while reading '" + path.string() + "'");
  return text;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "error while writing '" + path.string() + "'");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw_format(std::string("malformed JSON: ") + e.what());
  }
}

void check_format(const Json& doc, std::string_view expected) {
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string()) {
    throw_format("missing \"format\" field (expected \"" + std::string(expected) + "\")");
  }
  const auto format = doc["format"].get<std::string>();
  if (format == expected) return;
  const auto family = expected.substr(0, expected.find('/') + 1);
  if (format.rfind(family, 0) == 0) {
    throw_format("unsupported format version \"" + format + "\" (expected \"" + std::string(expected) + "\")");
  }
  throw_format("wrong format \"" + format + "\" (expected \"" + std::string(expected) + "\")");
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw_format(std::string("missing field \"") + key + "\"");
  return obj[key];
}

double number(const Json& v, const char* what) {
  if (!v.is_number()) throw_format(std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw_format(std::string(what) + " must be finite");
  return d;
}

int count(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 100'000'000) {
    throw_format(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<int>(v.get<long long>());
}

// Rectangular rows x cols array of finite numbers, row-major.
std::vector<double> matrix_values(const Json& v, int rows, int cols, const char* what) {
  if (!v.is_array()) throw_format(std::string(what) + " must be an array of rows");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  std::size_t first_len = 0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const auto& row = v[r];
    if (!row.is_array()) throw_format(std::string(what) + " rows must be arrays");
    if (r == 0) first_len = row.size();
    if (row.size() != first_len) throw_format(std::string(what) + " is non-rectangular");
  }
  if (v.size() != static_cast<std::size_t>(rows) || first_len != static_cast<std::size_t>(cols)) {
    throw_format(std::string(what) + " has shape " + std::to_string(v.size()) + "x" + std::to_string(first_len) +
                 ", declared " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& row : v) {
    for (const auto& cell : row) out.push_back(number(cell, what));
  }
  return out;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw_invalid(std::string("cannot serialize non-finite ") + what);
}

// Raw JSON arrays so numbers keep the 17-digit formatting.
void append_rows(std::string& out, const std::vector<double>& values, int rows, int cols, const char* what) {
  out += "[";
  for (int r = 0; r < rows; ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (int c = 0; c < cols; ++c) {
      const double v = values[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
      require_finite(v, what);
      if (c) out += ",";
      out += format_double(v);
    }
    out += "]";
  }
  out += rows ? "\n  ]" : "]";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 16);
  return std::string(buf, ptr);
}

std::optional<double> parse_double(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::string grid_to_json(const TomogramGrid& grid) {
  require_finite(grid.x_min(), "x_min");
  require_finite(grid.x_max(), "x_max");
  std::string out = "{\n  \"format\": \"" + std::string(kGridFormat) + "\",\n";
  out += "  \"x\": {\"min\": " + format_double(grid.x_min()) + ", \"max\": " + format_double(grid.x_max()) +
         ", \"count\": " + std::to_string(grid.n_x()) + "},\n";
  out += "  \"theta\": {\"count\": " + std::to_string(grid.n_theta()) + "},\n";
  out += "  \"values\": ";
  append_rows(out, grid.values(), grid.n_theta(), grid.n_x(), "grid value");
  out += ",\n  \"meta\": " + Json(grid.meta()).dump() + "\n}\n";
  return out;
}

TomogramGrid grid_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  check_format(doc, kGridFormat);
  const auto& x = field(doc, "x");
  const double x_min = number(field(x, "min"), "x.min");
  const double x_max = number(field(x, "max"), "x.max");
  const int n_x = count(field(x, "count"), "x.count");
  const int n_theta = count(field(field(doc, "theta"), "count"), "theta.count");
  if (n_x < 2 || n_theta < 1 || !(x_max > x_min)) throw_format("grid axes are degenerate");
  auto values = matrix_values(field(doc, "values"), n_theta, n_x, "values");
  std::string meta;
  if (doc.contains("meta")) {
    if (!doc["meta"].is_string()) throw_format("meta must be a string");
    meta = doc["meta"].get<std::string>();
  }
  return TomogramGrid(x_min, x_max, n_x, n_theta, std::move(values), std::move(meta));
}

void write_grid(const TomogramGrid& grid, const std::filesystem::path& path) { write_file(path, grid_to_json(grid)); }

TomogramGrid read_grid(const std::filesystem::path& path) { return grid_from_json(read_file(path)); }

std::string density_matrix_to_json(const DensityMatrix& rho) {
  const int d = rho.dim();
  std::vector<double> re(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  std::vector<double> im(re.size());
  for (int n = 0; n < d; ++n) {
    for (int k = 0; k < d; ++k) {
      re[static_cast<std::size_t>(n * d + k)] = rho(n, k).real();
      im[static_cast<std::size_t>(n * d + k)] = rho(n, k).imag();
    }
  }
  std::string out = "{\n  \"format\": \"" + std::string(kMatrixFormat) + "\",\n";
  out += "  \"dim\": " + std::to_string(d) + ",\n  \"re\": ";
  append_rows(out, re, d, d, "matrix entry");
  out += ",\n  \"im\": ";
  append_rows(out, im, d, d, "matrix entry");
  out += "\n}\n";
  return out;
}

DensityMatrix density_matrix_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  check_format(doc, kMatrixFormat);
  const int d = count(field(doc, "dim"), "dim");
  if (d < 1) throw_format("dim must be at least 1");
  const auto re = matrix_values(field(doc, "re"), d, d, "re");
  const auto im = matrix_values(field(doc, "im"), d, d, "im");
  Eigen::MatrixXcd m(d, d);
  for (int n = 0; n < d; ++n) {
    for (int k = 0; k < d; ++k) m(n, k) = Complex(re[static_cast<std::size_t>(n * d + k)], im[static_cast<std::size_t>(n * d + k)]);
  }
  try {
    return DensityMatrix::from_matrix(m, 1e-9);
  } catch (const Error& e) {
    throw_format(e.what());
  }
}

void write_density_matrix(const DensityMatrix& rho, const std::filesystem::path& path) {
  write_file(path, density_matrix_to_json(rho));
}

DensityMatrix read_density_matrix(const std::filesystem::path& path) { return density_matrix_from_json(read_file(path)); }

std::string samples_to_text(const HomodyneRecordSet& set) {
  std::string out;
  out += "# format: " + std::string(kSamplesFormat) + "\n";
  out += "# seed: " + std::to_string(set.seed) + "\n";
  out += "# scheme: " + set.scheme.describe() + "\n";
  out += "# streams: " + std::to_string(set.streams) + "\n";
  if (!set.source.empty()) out += "# source: " + set.source + "\n";
  for (const auto& line : set.extra_metadata) out += line + "\n";
  out += "theta,x\n";
  for (const auto& rec : set.records) {
    require_finite(rec.x, "sample");
    out += format_double(rec.theta);
    out += ',';
    out += format_double(rec.x);
    out += '\n';
  }
  return out;
}

HomodyneRecordSet samples_from_text(std::string_view text) {
  HomodyneRecordSet set;
  bool have_format = false;
  bool have_seed = false;
  bool have_scheme = false;
  bool in_body = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!in_body) {
      if (line.starts_with("#")) {
        const auto colon = line.find(':');
        const auto key = colon == std::string_view::npos ? std::string_view{} : trim(line.substr(1, colon - 1));
        const auto value = colon == std::string_view::npos ? std::string_view{} : trim(line.substr(colon + 1));
        if (key == "format") {
          if (value != kSamplesFormat) {
            throw_format(where + "unsupported samples format \"" + std::string(value) + "\"");
          }
          have_format = true;
        } else if (key == "seed") {
          std::uint64_t seed = 0;
          const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
          if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) throw_format(where + "bad seed");
          set.seed = seed;
          have_seed = true;
        } else if (key == "scheme") {
          set.scheme = ThetaScheme::parse(std::string(value));
          have_scheme = true;
        } else if (key == "streams") {
          int streams = 0;
          const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), streams);
          if (ec != std::errc() || ptr != value.data() + value.size() || streams < 1) throw_format(where + "bad stream count");
          set.streams = streams;
        } else if (key == "source") {
          set.source = std::string(value);
        } else {
          set.extra_metadata.emplace_back(line);
        }
        continue;
      }
      if (trim(line) != "theta,x") throw_format(where + "expected header \"theta,x\"");
      if (!have_format) throw_format("missing \"# format:\" line");
      if (!have_seed) throw_format("missing \"# seed:\" line");
      if (!have_scheme) throw_format("missing \"# scheme:\" line");
      in_body = true;
      continue;
    }

    if (line.empty()) {
      if (start >= text.size()) break;
      throw_format(where + "empty record");
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw_format(where + "record must be \"theta,x\"");
    const auto theta = parse_double(trim(line.substr(0, comma)));
    const auto x = parse_double(trim(line.substr(comma + 1)));
    if (!theta || !x) throw_format(where + "malformed number");
    if (!(*theta >= 0.0 && *theta < detail::kTwoPi)) throw_format(where + "theta outside [0, 2pi)");
    if (!std::isfinite(*x)) throw_format(where + "x must be finite");
    set.records.push_back({*theta, *x});
  }
  if (!in_body) throw_format("missing \"theta,x\" header");
  return set;
}

void write_samples(const HomodyneRecordSet& set, const std::filesystem::path& path) {
  write_file(path, samples_to_text(set));
}

HomodyneRecordSet read_samples(const std::filesystem::path& path) { return samples_from_text(read_file(path)); }

std::vector<std::uint8_t> render_heatmap(const TomogramGrid& grid, const HeatmapSpec& spec) {
  if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) throw_invalid("gamma must be finite and positive");
  const double floor = spec.value_floor.value_or(0.0);
  double ceiling = spec.value_ceiling.value_or(*std::max_element(grid.values().begin(), grid.values().end()));
  if (!spec.value_ceiling && !(ceiling > floor)) ceiling = floor + 1.0;
  if (!(ceiling > floor)) throw_invalid("heatmap ceiling must exceed floor");

  const std::string header = "P5\n" + std::to_string(grid.n_x()) + " " + std::to_string(grid.n_theta()) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + grid.values().size());
  for (const double w : grid.values()) {
    double level = std::clamp((w - floor) / (ceiling - floor), 0.0, 1.0);
    if (std::isnan(level)) level = 0.0;
    if (spec.gamma != 1.0) level = std::pow(level, spec.gamma);
    bytes.push_back(static_cast<std::uint8_t>(std::lround(255.0 * level)));
  }
  return bytes;
}

void emit_heatmap(const TomogramGrid& grid, const HeatmapSpec& spec, const std::filesystem::path& path) {
  const auto bytes = render_heatmap(grid, spec);
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  const double floor = spec.value_floor.value_or(0.0);
  double ceiling = spec.value_ceiling.value_or(*std::max_element(grid.values().begin(), grid.values().end()));
  if (!spec.value_ceiling && !(ceiling > floor)) ceiling = floor + 1.0;
  std::string axes;
  axes += "columns X ascending: " + format_double(grid.x_min()) + " .. " + format_double(grid.x_max()) + " (" +
          std::to_string(grid.n_x()) + " nodes, inclusive)\n";
  axes += "rows theta ascending: 0 .. 2pi (" + std::to_string(grid.n_theta()) + " nodes, 2pi excluded)\n";
  axes += "value floor: " + format_double(floor) + "\n";
  axes += "value ceiling: " + format_double(ceiling) + "\n";
  axes += "gamma: " + format_double(spec.gamma) + "\n";
  auto sidecar = path;
  sidecar += ".txt";
  write_file(sidecar, axes);
}

std::string matrix_text(const TomogramGrid& grid) {
  std::string out = std::to_string(grid.n_x());
  for (int i = 0; i < grid.n_x(); ++i) out += " " + format_double(grid.x(i));
  out += "\n";
  for (int j = 0; j < grid.n_theta(); ++j) {
    out += format_double(grid.theta(j));
    for (const double v : grid.row(j)) out += " " + format_double(v);
    out += "\n";
  }
  return out;
}

void emit_matrix_text(const TomogramGrid& grid, const std::filesystem::path& path) { write_file(path, matrix_text(grid)); }

}  // namespace focktomo
