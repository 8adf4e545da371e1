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

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "channel.hpp"
#include "geometry.hpp"

namespace nfwpt {

// Regime boundaries on rho = 4 (L_y/L_x)^2 + (L_z'/L_x)^2.
inline constexpr double kThreePointLimit = 5.0 / 4.0;
inline constexpr double kColocatedLimit = 3.0;

/// Closed intervals overlap at the two boundaries; a boundary value takes the
/// lower-rho label. All outputs are continuous there.
inline Regime classify(const GeometrySignature& sig) {
  if (sig.rho <= kThreePointLimit) return Regime::ThreePointDAS;
  if (sig.rho <= kColocatedLimit) return Regime::BoundaryDAS;
  return Regime::Colocated;
}

enum class StationaryLabel { I = 0, II, III, IV, V };

/// Stationary points of f_x(a1) for a symmetric pair (a1, -a1) and a fixed
/// receiver abscissa x. Non-real candidates are empty.
struct StationaryPoints {
  double e = 0.0;
  double d = 0.0;
  std::array<std::optional<double>, 5> values;

  const std::optional<double>& operator[](StationaryLabel l) const { return values[static_cast<int>(l)]; }
};

namespace detail {

inline std::optional<double> half_sqrt_if_real(double v) {
  if (v < 0.0) return std::nullopt;
  return 0.5 * std::sqrt(v);
}

inline double e_term(double x, double ly, double lz_eff) {
  return 4.0 * x * std::sqrt(4.0 * x * x + 4.0 * ly * ly + lz_eff * lz_eff);
}

inline double d_term(double x, double ly, double lz_eff) { return 4.0 * x * x + 4.0 * ly * ly + lz_eff * lz_eff; }

}  // namespace detail

inline StationaryPoints stationary_points(double x, double ly, double lz_eff) {
  StationaryPoints sp;
  sp.e = detail::e_term(x, ly, lz_eff);
  sp.d = detail::d_term(x, ly, lz_eff);
  const auto first = detail::half_sqrt_if_real(sp.e - sp.d);
  // (III) and (IV) are (I) and (II) mirrored in x; e is odd in x, d is even.
  const auto third = detail::half_sqrt_if_real(detail::e_term(-x, ly, lz_eff) - sp.d);
  sp.values[0] = first;
  sp.values[1] = first ? std::optional<double>(-*first) : std::nullopt;
  sp.values[2] = third;
  sp.values[3] = third ? std::optional<double>(-*third) : std::nullopt;
  sp.values[4] = 0.0;
  return sp;
}

/// |x| beyond which the distributed stationary point (I) is real and non-zero.
inline double realness_threshold(double ly, double lz_eff) {
  return std::sqrt(lz_eff * lz_eff / 12.0 + ly * ly / 3.0);
}

// Normalised branch formulas (L_x = 1). Each is evaluated regardless of the
// regime the signature falls in, so adjacent branches can be compared at
// the boundaries.
namespace branch {

/// a1*/L_x when the origin and both walls are equally critical.
inline double a1_three_point(const GeometrySignature& s) { return 0.5 * std::sqrt((s.rho + 1.0) / 3.0); }

/// a1*/L_x when only the walls x = +-L_x/2 are critical.
inline double a1_boundary(const GeometrySignature& s) {
  const double q = s.rho + 1.0;
  double inner = 2.0 * std::sqrt(q) - q;
  if (inner < 0.0) {
    if (inner > -1e-12)
      inner = 0.0;
    else
      throw std::domain_error("boundary placement is complex for rho > 3");
  }
  return 0.5 * std::sqrt(inner);
}

inline double a1_colocated(const GeometrySignature&) { return 0.0; }

/// Worst-case gamma* L_x^2 / (P c) for each branch.
inline double power_three_point(const GeometrySignature& s) {
  return 2.0 / (4.0 / 3.0 * s.ry * s.ry + 1.0 / 12.0 + s.rz * s.rz / 3.0);
}

inline double power_boundary(const GeometrySignature& s) {
  if (s.rho <= 0.0) throw std::domain_error("boundary power undefined at rho = 0");
  return (2.0 * std::sqrt(s.rho + 1.0) + 2.0) / s.rho;
}

inline double power_colocated(const GeometrySignature& s) {
  return 2.0 / (s.ry * s.ry + 0.25 + 0.25 * s.rz * s.rz);
}

inline double gain_three_point(const GeometrySignature& s) {
  const double ry2 = s.ry * s.ry, rz2 = s.rz * s.rz;
  return (12.0 * ry2 + 3.0 * rz2 + 3.0) / (16.0 * ry2 + 4.0 * rz2 + 1.0);
}

inline double gain_boundary(const GeometrySignature& s) {
  if (s.rho <= 0.0) throw std::domain_error("boundary gain undefined at rho = 0");
  const double q = s.rho + 1.0;
  return (q * std::sqrt(q) + q) / (4.0 * s.rho);
}

inline double gain_colocated(const GeometrySignature&) { return 1.0; }

inline double a1(Regime r, const GeometrySignature& s) {
  switch (r) {
    case Regime::ThreePointDAS: return a1_three_point(s);
    case Regime::BoundaryDAS: return a1_boundary(s);
    case Regime::Colocated: return a1_colocated(s);
  }
  return 0.0;
}

inline double power(Regime r, const GeometrySignature& s) {
  switch (r) {
    case Regime::ThreePointDAS: return power_three_point(s);
    case Regime::BoundaryDAS: return power_boundary(s);
    case Regime::Colocated: return power_colocated(s);
  }
  return 0.0;
}

inline double gain(Regime r, const GeometrySignature& s) {
  switch (r) {
    case Regime::ThreePointDAS: return gain_three_point(s);
    case Regime::BoundaryDAS: return gain_boundary(s);
    case Regime::Colocated: return gain_colocated(s);
  }
  return 1.0;
}

}  // namespace branch

/// a1*/L_x for the signature's regime.
inline double optimal_a1_ratio(const GeometrySignature& sig) { return branch::a1(classify(sig), sig); }

/// gamma* L_x^2 / (P c): the worst-case objective of the optimal placement,
/// in units free of room scale and radio parameters.
inline double normalized_worst_case_power(const GeometrySignature& sig) { return branch::power(classify(sig), sig); }

/// Same quantity for the far-field (co-located) placement.
inline double normalized_colocated_power(const GeometrySignature& sig) { return branch::power_colocated(sig); }

/// Power gain of the optimal placement over both antennas at the centre.
inline double farfield_gain(const GeometrySignature& sig) { return branch::gain(classify(sig), sig); }

inline double farfield_gain(const Room& room) { return farfield_gain(signature(room)); }

/// a1* in meters; a2* = -a1*.
inline double optimal_a1(const Room& room) { return room.lx() * optimal_a1_ratio(signature(room)); }

inline double worst_case_power(const Room& room, const RadioParams& params) {
  const double lx = room.lx();
  return params.tx_power * params.ref_gain * normalized_worst_case_power(signature(room)) / (lx * lx);
}

struct SolveReport {
  double a1_star = 0.0;
  double a2_star = 0.0;
  Regime regime = Regime::Colocated;
  std::vector<double> x_crit;
  double gamma_star = 0.0;
  double eta = 1.0;
  GeometrySignature geometry;

  Placement placement() const { return Placement{{a1_star, a2_star}}; }
};

inline SolveReport solve_closed_form(const Room& room, const RadioParams& params) {
  SolveReport r;
  r.geometry = signature(room);
  r.regime = classify(r.geometry);
  r.a1_star = optimal_a1(room);
  r.a2_star = r.a1_star == 0.0 ? 0.0 : -r.a1_star;
  r.x_crit = critical_set(room, r.regime).x_crit;
  r.gamma_star = worst_case_power(room, params);
  r.eta = farfield_gain(r.geometry);
  return r;
}

}  // namespace nfwpt
