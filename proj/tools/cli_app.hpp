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

#include <deque>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nfwpt/nfwpt.hpp"

namespace nfwpt::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kConfigError = 2, kIoError = 3 };

/// One command-line flag that overrides a config key when present.
struct Override {
  std::string key;
  std::string value;
  CLI::Option* option = nullptr;
};

struct Flags {
  std::string config_path;
  bool validate = false;
  std::deque<Override> overrides;
};

inline CLI::Option* add_override(CLI::App* sub, Flags& flags, const std::string& flag, const std::string& key,
                                 const std::string& help) {
  auto& o = flags.overrides.emplace_back(Override{key, {}, nullptr});
  o.option = sub->add_option(flag, o.value, help);
  return o.option;
}

inline void add_common_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "key = value config file; flags override it");
  add_override(sub, f, "--lx", "lx", "room length L_x [m]");
  add_override(sub, f, "--ly", "ly", "room depth L_y [m]");
  add_override(sub, f, "--lz", "lz", "room height L_z [m]");
  add_override(sub, f, "--z0", "z0", "antenna height offset z0 [m]");
  add_override(sub, f, "--power", "power", "transmit power P [W]");
  add_override(sub, f, "--ref-gain", "ref_gain", "reference channel gain c [m^2]");
  add_override(sub, f, "--wavelength", "wavelength", "carrier wavelength [m]");
  add_override(sub, f, "--nt", "nt", "number of transmit antennas");
  add_override(sub, f, "--a1", "a1", "fixed placement offset a1 [m] (field)");
  add_override(sub, f, "--out", "out", "output file");
  add_override(sub, f, "--format", "format", "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_override(sub, f, "--ry-min", "ry_min", "sweep: smallest L_y/L_x");
  add_override(sub, f, "--ry-max", "ry_max", "sweep: largest L_y/L_x");
  add_override(sub, f, "--ry-count", "ry_count", "sweep: points per curve");
  add_override(sub, f, "--rz", "rz", "sweep/validate: comma-separated L_z'/L_x values");
  add_override(sub, f, "--grid", "grid", "field: points per axis");
  add_override(sub, f, "--points", "validate_points", "validate: geometries per rz value");
  add_override(sub, f, "--x-grid", "x_grid_count", "solver: receiver grid size");
  add_override(sub, f, "--a-grid", "a_grid_count", "solver: oracle coarse scan size");
  add_override(sub, f, "--refine-iters", "refine_iters", "solver: golden-section iterations");
  add_override(sub, f, "--tol", "tol", "solver: relative stopping tolerance");
  add_override(sub, f, "--max-qt-iters", "max_qt_iters", "solver: outer iteration cap");
  add_override(sub, f, "--inner-steps", "inner_steps", "solver: inner steps per surrogate");
}

inline RunConfig build_config(const Flags& f) {
  RunConfig cfg = f.config_path.empty() ? RunConfig{} : load_config_file(f.config_path);
  for (const auto& o : f.overrides)
    if (o.option->count() > 0) cfg.set(o.key, o.value);
  cfg.validate();
  return cfg;
}

/// Writes to --out when given, otherwise to stdout.
inline void emit(const RunConfig& cfg, const std::string& body, std::ostream& out, const std::string& what) {
  if (cfg.out.empty()) {
    out << body;
    return;
  }
  write_file(cfg.out, body);
  out << "wrote " << what << " to " << cfg.out << '\n';
}

inline std::string numeric_csv(const RadioParams& radio, const NumericResult& res) {
  CsvWriter w({"index", "position", "objective", "gamma_worst", "iterations", "converged"});
  for (std::size_t i = 0; i < res.positions.size(); ++i)
    w.row({std::to_string(i), format_double(res.positions.a[i]), format_double(res.objective),
           format_double(radio.tx_power * radio.ref_gain * res.objective), std::to_string(res.iterations),
           res.converged ? "1" : "0"});
  return w.str();
}

inline std::string geometry_text(const GeometrySignature& g) {
  return "ry=" + format_double(g.ry) + " rz=" + format_double(g.rz) + " rho=" + format_double(g.rho);
}

inline int cmd_solve(const RunConfig& cfg, bool validate, std::ostream& out, std::ostream& err) {
  const Room room = cfg.room();
  const auto format = cfg.format.value_or(OutputFormat::Json);

  if (cfg.nt != 2) {
    const auto res = cfg.nt == 1 ? oracle_grid_solve(room, 1, cfg.solver) : qt_solve(room, cfg.nt, cfg.solver);
    const std::string method = cfg.nt == 1 ? "oracle" : "quadratic_transform";
    const auto j = numeric_report_json(room, cfg.radio, res, method);
    out << j.dump(2) << '\n';
    if (!cfg.out.empty())
      write_file(cfg.out, format == OutputFormat::Json ? j.dump(2) + "\n" : numeric_csv(cfg.radio, res));
    return kOk;
  }

  const auto report = solve_closed_form(room, cfg.radio);
  auto j = report_json(room, cfg.radio, report);
  int code = kOk;
  if (validate) {
    ValidationOptions opt;
    opt.lx = room.lx();
    opt.solver = cfg.solver;
    const auto row = validate_geometry(report.geometry, opt, optimal_a1_ratio);
    Json v;
    v["a1_oracle"] = row.a1_oracle * room.lx();
    v["a1_qt"] = row.a1_qt * room.lx();
    v["delta_oracle_over_lx"] = row.a1_oracle - row.a1_closed;
    v["delta_qt_over_lx"] = row.a1_qt - row.a1_oracle;
    v["objective_gap"] = row.oracle_gap;
    v["formula_gap"] = row.formula_gap;
    v["qt_converged"] = row.qt_converged;
    v["pass"] = row.pass;
    j["validation"] = v;
    if (!row.pass) {
      err << "validation FAILED at " << geometry_text(row.geometry) << ": " << row.failure << '\n';
      code = kValidationFailure;
    }
  }
  out << j.dump(2) << '\n';
  if (!cfg.out.empty())
    write_file(cfg.out, format == OutputFormat::Json ? j.dump(2) + "\n" : report_csv(cfg.radio, report));
  return code;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto table = sweep_table(cfg.ry_min, cfg.ry_max, cfg.ry_count, cfg.rz);
  std::string body;
  if (cfg.format.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
    body = sweep_csv(table);
  } else {
    Json rows = Json::array();
    for (const auto& r : table)
      rows.push_back(Json{{"ry", r.ry},
                          {"rz", r.rz},
                          {"rho", r.rho},
                          {"a1_star_over_lx", r.a1_star_over_lx},
                          {"gamma_star_norm", r.gamma_star_norm},
                          {"eta", r.eta},
                          {"regime", to_string(r.regime)}});
    body = rows.dump(2) + "\n";
  }
  emit(cfg, body, out, std::to_string(table.size()) + " rows");
  return kOk;
}

inline int cmd_field(const RunConfig& cfg, std::ostream& out) {
  const Room room = cfg.room();
  Placement placement;
  if (cfg.a1) {
    placement = cfg.nt == 1 ? Placement{{*cfg.a1}} : Placement{{-*cfg.a1, *cfg.a1}};
    try {
      placement.check(room);
    } catch (const InvalidGeometry&) {
      throw ConfigError("a1", "antenna position outside [-L_x/2, L_x/2]");
    }
  } else {
    placement = solve_closed_form(room, cfg.radio).placement();
  }
  const auto grid = field_grid(room, placement, cfg.radio, cfg.grid);
  std::string body;
  if (cfg.format.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
    body = field_csv(grid);
  } else {
    auto sample = [](const FieldSample& s) {
      return Json{{"x", s.point.x}, {"y", s.point.y}, {"z", s.point.z}, {"gamma_watts", s.gamma}};
    };
    Json j;
    j["positions"] = placement.a;
    j["samples"] = Json::array();
    for (const auto& s : grid.samples) j["samples"].push_back(sample(s));
    j["minimum"] = sample(grid.minimum);
    body = j.dump(2) + "\n";
  }
  emit(cfg, body, out, std::to_string(grid.samples.size()) + " samples");
  return kOk;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ValidationOptions opt;
  opt.lx = cfg.lx.value_or(1.0);
  opt.rz = cfg.rz;
  opt.points_per_rz = cfg.validate_points;
  opt.solver = cfg.solver;
  const auto s = run_validation(opt);

  out << "geometries: " << s.rows.size() << '\n';
  out << "max |a1_oracle - a1_closed| / L_x: " << format_double(s.max_oracle_a1) << '\n';
  out << "max relative objective gap: " << format_double(s.max_oracle_gap) << '\n';
  out << "max gamma* formula gap: " << format_double(s.max_formula_gap) << '\n';
  out << "max |a1_qt - a1_oracle| / L_x: " << format_double(s.max_qt_a1) << '\n';
  if (!cfg.out.empty()) write_file(cfg.out, validation_csv(s));
  for (const auto& r : s.rows)
    if (!r.pass) err << "FAIL " << geometry_text(r.geometry) << ": " << r.failure << '\n';
  out << (s.passed ? "PASS" : "FAIL") << '\n';
  return s.passed ? kOk : kValidationFailure;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal two-antenna placement for near-field wireless power transfer", "nfwpt"};
  app.require_subcommand(1);
  Flags solve_f, sweep_f, field_f, validate_f;
  auto* solve = app.add_subcommand("solve", "closed-form optimal placement for one room");
  auto* sweep = app.add_subcommand("sweep", "closed-form curves over L_y/L_x for several L_z'/L_x");
  auto* field = app.add_subcommand("field", "received power over a grid of the room");
  auto* validate = app.add_subcommand("validate", "closed form vs oracle vs iterative solver");
  add_common_flags(solve, solve_f);
  add_common_flags(sweep, sweep_f);
  add_common_flags(field, field_f);
  add_common_flags(validate, validate_f);
  solve->add_flag("--validate", solve_f.validate, "cross-check against both numerical solvers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*solve) return cmd_solve(build_config(solve_f), solve_f.validate, out, err);
    if (*sweep) return cmd_sweep(build_config(sweep_f), out);
    if (*field) return cmd_field(build_config(field_f), out);
    return cmd_validate(build_config(validate_f), out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidGeometry& e) {
    err << "error: invalid '" << e.field() << "': " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArity& e) {
    err << "error: nt: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace nfwpt::cli
