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

#include <string>
#include <vector>

#include "json.hpp"

#include "channel.hpp"
#include "closed_form.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "solver.hpp"

namespace nfwpt {

using Json = nlohmann::ordered_json;

inline Json to_json(const GeometrySignature& g) { return Json{{"ry", g.ry}, {"rz", g.rz}, {"rho", g.rho}}; }

inline Json to_json(const Room& room) {
  return Json{{"lx", room.lx()},
              {"ly", room.ly()},
              {"lz", room.lz()},
              {"z0", room.z0()},
              {"effective_height", effective_height(room)},
              {"flat", room.is_flat()}};
}

inline Json to_json(const RadioParams& p) {
  return Json{{"power", p.tx_power}, {"ref_gain", p.ref_gain}, {"wavelength", p.wavelength}};
}

/// Closed-form solution report. Key order is fixed.
inline Json report_json(const Room& room, const RadioParams& radio, const SolveReport& r) {
  const auto cs = critical_set(room, r.regime);
  const auto placement = r.placement();
  const double lx = room.lx();
  Json j;
  j["method"] = "closed_form";
  j["room"] = to_json(room);
  j["radio"] = to_json(radio);
  j["geometry"] = to_json(r.geometry);
  j["regime"] = to_string(r.regime);
  j["a1_star"] = r.a1_star;
  j["a2_star"] = r.a2_star;
  j["x_crit"] = r.x_crit;
  j["y_crit"] = cs.y_crit;
  j["z_crit"] = cs.z_crit;
  j["gamma_star"] = r.gamma_star;
  j["gamma_colocated"] = radio.tx_power * radio.ref_gain * normalized_colocated_power(r.geometry) / (lx * lx);
  j["eta"] = r.eta;
  j["near_field_distance"] = near_field_distance(placement.a, radio.wavelength);
  return j;
}

inline SolveReport solve_report_from_json(const Json& j) {
  SolveReport r;
  r.a1_star = j.at("a1_star").get<double>();
  r.a2_star = j.at("a2_star").get<double>();
  r.regime = regime_from_string(j.at("regime").get<std::string>());
  r.x_crit = j.at("x_crit").get<std::vector<double>>();
  r.gamma_star = j.at("gamma_star").get<double>();
  r.eta = j.at("eta").get<double>();
  const auto& g = j.at("geometry");
  r.geometry.ry = g.at("ry").get<double>();
  r.geometry.rz = g.at("rz").get<double>();
  r.geometry.rho = g.at("rho").get<double>();
  return r;
}

inline Json numeric_json(const NumericResult& res, const std::string& method) {
  Json j;
  j["method"] = method;
  j["positions"] = res.positions.a;
  j["objective"] = res.objective;
  j["iterations"] = res.iterations;
  j["converged"] = res.converged;
  return j;
}

/// Report for a numerically solved placement with any antenna count.
inline Json numeric_report_json(const Room& room, const RadioParams& radio, const NumericResult& res,
                                const std::string& method) {
  Json j;
  j["method"] = method;
  j["room"] = to_json(room);
  j["radio"] = to_json(radio);
  j["geometry"] = to_json(signature(room));
  j["n_t"] = res.positions.size();
  j["positions"] = res.positions.a;
  j["objective"] = res.objective;
  j["gamma_worst"] = radio.tx_power * radio.ref_gain * res.objective;
  j["iterations"] = res.iterations;
  j["converged"] = res.converged;
  j["near_field_distance"] = near_field_distance(res.positions.a, radio.wavelength);
  return j;
}

inline const std::vector<std::string>& solve_csv_header() {
  static const std::vector<std::string> h{"a1_star", "a2_star", "regime", "gamma_star", "eta",
                                          "ry",      "rz",      "rho",    "near_field_distance"};
  return h;
}

inline std::string report_csv(const RadioParams& radio, const SolveReport& r) {
  CsvWriter w(solve_csv_header());
  const auto placement = r.placement();
  w.row({format_double(r.a1_star), format_double(r.a2_star), to_string(r.regime), format_double(r.gamma_star),
         format_double(r.eta), format_double(r.geometry.ry), format_double(r.geometry.rz),
         format_double(r.geometry.rho), format_double(near_field_distance(placement.a, radio.wavelength))});
  return w.str();
}

}  // namespace nfwpt
