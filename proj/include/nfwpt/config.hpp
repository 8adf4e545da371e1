// SPDX-License-Identifier: Apache-2.0
//
// nfwpt: near-field wireless power transfer antenna placement
// Copyright (C) 2026 The nfwpt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "channel.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "solver.hpp"

namespace nfwpt {

class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error("config error in '" + field + "': " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// Re-raises a constraint violation as a config error on the same field.
inline ConfigError config_error_from(const InvalidGeometry& e) {
  std::string msg = e.what();
  const std::string prefix = e.field() + ": ";
  if (msg.compare(0, prefix.size(), prefix) == 0) msg.erase(0, prefix.size());
  return ConfigError(e.field(), msg);
}

enum class OutputFormat { Csv, Json };

/// Default L_z'/L_x set for sweeps and validation: multiples of sqrt(5)/8.
inline std::vector<double> standard_rz_values() {
  const double s5 = std::sqrt(5.0);
  return {0.0, s5 / 8.0, s5 / 4.0, 3.0 * s5 / 8.0, s5 / 2.0};
}

/// Everything a CLI run needs. Values come from a flat `key = value` file and
/// are then overridden by command-line flags through the same `set` entry point.
struct RunConfig {
  std::optional<double> lx, ly, lz;
  double z0 = 0.0;
  RadioParams radio;
  int nt = 2;
  std::optional<double> a1;
  SolverConfig solver;
  std::string out;
  std::optional<OutputFormat> format;

  // sweep
  double ry_min = 0.0;
  double ry_max = 1.0;
  int ry_count = 201;
  std::vector<double> rz = standard_rz_values();

  int grid = 21;             // field: points per axis
  int validate_points = 42;  // validate: geometries per rz value

  void set(std::string_view key, std::string_view value);

  /// Builds the room, translating geometry violations into ConfigError.
  Room room() const {
    if (!lx) throw ConfigError("L_x", "missing (set lx)");
    if (!ly) throw ConfigError("L_y", "missing (set ly)");
    if (!lz) throw ConfigError("L_z", "missing (set lz)");
    try {
      return Room(*lx, *ly, *lz, z0);
    } catch (const InvalidGeometry& e) {
      throw config_error_from(e);
    }
  }

  void validate() const {
    try {
      radio.validate();
      solver.validate();
    } catch (const InvalidGeometry& e) {
      throw config_error_from(e);
    }
    if (nt < 1) throw ConfigError("nt", "must be >= 1");
    if (ry_count < 2) throw ConfigError("ry_count", "must be >= 2");
    if (!(ry_min >= 0.0) || !(ry_max > ry_min)) throw ConfigError("ry_min", "need 0 <= ry_min < ry_max");
    if (rz.empty()) throw ConfigError("rz", "at least one value required");
    for (double v : rz)
      if (!std::isfinite(v) || v < 0.0) throw ConfigError("rz", "values must be finite and >= 0");
    if (grid < 2) throw ConfigError("grid", "must be >= 2");
    if (validate_points < 2) throw ConfigError("validate_points", "must be >= 2");
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
    return s.substr(1, s.size() - 2);
  return s;
}

inline double parse_double(std::string_view key, std::string_view text) {
  const std::string s(trim(text));
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string(key), "not a number: '" + s + "'");
  }
}

inline int parse_int(std::string_view key, std::string_view text) {
  const std::string s(trim(text));
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string(key), "not an integer: '" + s + "'");
  }
}

/// Accepts `a, b, c` or a TOML-style array `[a, b, c]`.
inline std::vector<double> parse_list(std::string_view key, std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ConfigError(std::string(key), "unterminated list");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<double> out;
  for (const auto& item : split_csv_line(t)) {
    if (trim(item).empty()) continue;
    out.push_back(parse_double(key, item));
  }
  return out;
}

}  // namespace detail

inline void RunConfig::set(std::string_view key, std::string_view raw) {
  const auto value = detail::unquote(detail::trim(raw));
  auto num = [&] { return detail::parse_double(key, value); };
  auto integer = [&] { return detail::parse_int(key, value); };

  if (key == "lx") lx = num();
  else if (key == "ly") ly = num();
  else if (key == "lz") lz = num();
  else if (key == "z0") z0 = num();
  else if (key == "power") radio.tx_power = num();
  else if (key == "ref_gain") radio.ref_gain = num();
  else if (key == "wavelength") radio.wavelength = num();
  else if (key == "nt") nt = integer();
  else if (key == "a1") a1 = num();
  else if (key == "out") out = std::string(value);
  else if (key == "format") {
    if (value == "csv") format = OutputFormat::Csv;
    else if (value == "json") format = OutputFormat::Json;
    else throw ConfigError("format", "expected csv or json");
  }
  else if (key == "x_grid_count") solver.x_grid_count = integer();
  else if (key == "a_grid_count") solver.a_grid_count = integer();
  else if (key == "refine_iters") solver.refine_iters = integer();
  else if (key == "tol") solver.tol = num();
  else if (key == "max_qt_iters") solver.max_qt_iters = integer();
  else if (key == "inner_steps") solver.inner_steps = integer();
  else if (key == "ry_min") ry_min = num();
  else if (key == "ry_max") ry_max = num();
  else if (key == "ry_count") ry_count = integer();
  else if (key == "rz") rz = detail::parse_list(key, value);
  else if (key == "grid") grid = integer();
  else if (key == "validate_points") validate_points = integer();
  else throw ConfigError(std::string(key), "unknown key");
}

/// Parses `key = value` lines. '#' starts a comment; blank lines and a
/// leading `[section]` header are ignored.
inline void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    // '#' inside a quoted value is kept.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = detail::trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    cfg.set(detail::trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

inline RunConfig load_config_file(const std::string& path) {
  RunConfig cfg;
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    throw ConfigError("config", e.what());
  }
  apply_config_text(cfg, text);
  return cfg;
}

}  // namespace nfwpt
