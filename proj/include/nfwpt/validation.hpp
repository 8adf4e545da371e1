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

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "config.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "solver.hpp"

namespace nfwpt {

/// Agreement bounds between the closed form and the two numerical solvers,
/// as fractions of L_x (positions) or relative (objective).
struct ValidationTolerances {
  double oracle_a1 = 1e-4;
  double oracle_gap = 1e-8;
  double formula_gap = 1e-9;
  double qt_a1 = 1e-3;
  double qt_a1_near_colocated = 5e-3;  // rho in [2.9, 3]
  double near_colocated_lo = 2.9;
  double near_colocated_hi = 3.0;
};

struct ValidationRow {
  GeometrySignature geometry;
  double a1_closed = 0.0;  // all positions divided by L_x
  double a1_oracle = 0.0;
  double a1_qt = 0.0;
  double oracle_gap = 0.0;   // (closed objective - oracle objective) / closed
  double formula_gap = 0.0;  // |gamma* formula - f_x at closed placement| / formula
  bool qt_converged = false;
  bool qt_history_monotone = true;
  bool pass = true;
  std::string failure;
};

struct ValidationSummary {
  std::vector<ValidationRow> rows;
  double max_oracle_a1 = 0.0;
  double max_oracle_gap = 0.0;
  double max_formula_gap = 0.0;
  double max_qt_a1 = 0.0;
  bool passed = true;
};

struct ValidationOptions {
  double lx = 1.0;
  std::vector<double> rz = standard_rz_values();
  int points_per_rz = 42;
  double rho_min = 0.01;
  double rho_max = 6.0;
  SolverConfig solver;
  bool run_qt = true;
  ValidationTolerances tol;
};

/// Closed-form a1*/L_x as a function of the signature. Swappable so a harness
/// can check that a wrong formula is caught.
using A1Formula = std::function<double(const GeometrySignature&)>;

/// Geometries spread evenly in rho over [rho_min, rho_max] for every rz. For
/// large rz the range starts just above rz^2, since L_y must be positive.
inline std::vector<GeometrySignature> validation_geometries(const ValidationOptions& opt) {
  std::vector<GeometrySignature> out;
  for (double rz : opt.rz) {
    const double lo = std::max(opt.rho_min, rz * rz + 0.01);
    for (int i = 0; i < opt.points_per_rz; ++i) {
      const double rho = lo + (opt.rho_max - lo) * i / (opt.points_per_rz - 1);
      out.push_back(GeometrySignature::from_ratios(std::sqrt((rho - rz * rz) / 4.0), rz));
    }
  }
  return out;
}

inline ValidationRow validate_geometry(const GeometrySignature& sig, const ValidationOptions& opt,
                                       const A1Formula& a1_formula) {
  const Room room(opt.lx, sig.ry * opt.lx, sig.rz * opt.lx, 0.0);
  const auto& tol = opt.tol;
  ValidationRow row;
  row.geometry = signature(room);

  const double a1c = a1_formula(row.geometry) * opt.lx;
  row.a1_closed = a1c / opt.lx;
  const auto xs = critical_line_grid(room, opt.solver.x_grid_count);
  const std::vector<double> closed_pos{-a1c, a1c};
  const double closed_obj = min_over_grid(closed_pos, xs, room.ly(), effective_height(room));

  const auto oracle = oracle_grid_solve(room, 2, opt.solver);
  row.a1_oracle = oracle.outer_offset() / opt.lx;
  row.oracle_gap = (closed_obj - oracle.objective) / closed_obj;

  const double formula = normalized_worst_case_power(row.geometry) / (opt.lx * opt.lx);
  row.formula_gap = std::abs(formula - closed_obj) / formula;

  auto fail = [&row](const std::string& why) {
    row.pass = false;
    if (!row.failure.empty()) row.failure += "; ";
    row.failure += why;
  };
  if (std::abs(row.a1_oracle - row.a1_closed) > tol.oracle_a1) fail("oracle a1 deviation");
  if (std::abs(row.oracle_gap) > tol.oracle_gap) fail("oracle objective gap");
  if (row.formula_gap > tol.formula_gap) fail("gamma* formula mismatch");

  if (opt.run_qt) {
    const auto qt = qt_solve(room, 2, opt.solver);
    row.a1_qt = qt.outer_offset() / opt.lx;
    row.qt_converged = qt.converged;
    for (std::size_t i = 1; i < qt.history.size(); ++i)
      if (qt.history[i] < qt.history[i - 1] - 1e-12) row.qt_history_monotone = false;
    const bool near = row.geometry.rho >= tol.near_colocated_lo && row.geometry.rho <= tol.near_colocated_hi;
    const double bound = near ? tol.qt_a1_near_colocated : tol.qt_a1;
    if (std::abs(row.a1_qt - row.a1_oracle) > bound) fail("qt a1 deviation");
    if (!row.qt_history_monotone) fail("qt history decreased");
  }
  return row;
}

inline ValidationSummary run_validation(const ValidationOptions& opt, const A1Formula& a1_formula = optimal_a1_ratio) {
  const auto geoms = validation_geometries(opt);
  ValidationSummary s;
  s.rows.resize(geoms.size());
  parallel_for(geoms.size(), [&](std::size_t i) { s.rows[i] = validate_geometry(geoms[i], opt, a1_formula); });
  for (const auto& r : s.rows) {
    s.max_oracle_a1 = std::max(s.max_oracle_a1, std::abs(r.a1_oracle - r.a1_closed));
    s.max_oracle_gap = std::max(s.max_oracle_gap, std::abs(r.oracle_gap));
    s.max_formula_gap = std::max(s.max_formula_gap, r.formula_gap);
    if (opt.run_qt) s.max_qt_a1 = std::max(s.max_qt_a1, std::abs(r.a1_qt - r.a1_oracle));
    s.passed = s.passed && r.pass;
  }
  return s;
}

inline const std::vector<std::string>& validation_csv_header() {
  static const std::vector<std::string> h{"ry",        "rz",         "rho",         "a1_closed",    "a1_oracle",
                                          "a1_qt",     "oracle_gap", "formula_gap", "qt_converged", "pass"};
  return h;
}

inline std::string validation_csv(const ValidationSummary& s) {
  CsvWriter w(validation_csv_header());
  for (const auto& r : s.rows) {
    w.row({format_double(r.geometry.ry), format_double(r.geometry.rz), format_double(r.geometry.rho),
           format_double(r.a1_closed), format_double(r.a1_oracle), format_double(r.a1_qt),
           format_double(r.oracle_gap), format_double(r.formula_gap), r.qt_converged ? "1" : "0",
           r.pass ? "1" : "0"});
  }
  return w.str();
}

}  // namespace nfwpt
