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
#include <stdexcept>
#include <string>
#include <vector>

namespace nfwpt {

/// Thrown when a room or other geometric quantity violates its constraints.
/// `field()` names the offending parameter.
class InvalidGeometry : public std::invalid_argument {
public:
  InvalidGeometry(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

struct ReceiverPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Cuboid room X x Y x Z with X = [-L_x/2, L_x/2], Y = [0, L_y],
/// Z = [-L_z/2, L_z/2]. Transmit antennas sit on the line y = 0, z = z0.
///
/// L_z = 0 is accepted only together with z0 = 0 (the flat, two-dimensional
/// room used at the lower end of the placement sweeps).
class Room {
public:
  Room(double lx, double ly, double lz, double z0 = 0.0) : lx_(lx), ly_(ly), lz_(lz), z0_(z0) {
    if (!std::isfinite(lx) || lx <= 0.0) throw InvalidGeometry("L_x", "must be finite and > 0");
    if (!std::isfinite(ly) || ly <= 0.0) throw InvalidGeometry("L_y", "must be finite and > 0");
    if (!std::isfinite(lz) || lz < 0.0) throw InvalidGeometry("L_z", "must be finite and >= 0");
    if (!std::isfinite(z0)) throw InvalidGeometry("z0", "must be finite");
    if (lz == 0.0 && z0 != 0.0) throw InvalidGeometry("z0", "must be 0 in a flat room (L_z = 0)");
    if (std::abs(z0) > lz / 2.0) throw InvalidGeometry("z0", "antenna line must lie inside [-L_z/2, L_z/2]");
  }

  double lx() const noexcept { return lx_; }
  double ly() const noexcept { return ly_; }
  double lz() const noexcept { return lz_; }
  double z0() const noexcept { return z0_; }

  bool is_flat() const noexcept { return lz_ == 0.0; }

  bool contains(const ReceiverPoint& p) const noexcept {
    return std::abs(p.x) <= lx_ / 2.0 && p.y >= 0.0 && p.y <= ly_ && std::abs(p.z) <= lz_ / 2.0;
  }

  Room scaled(double k) const { return Room(k * lx_, k * ly_, k * lz_, k * z0_); }

private:
  double lx_;
  double ly_;
  double lz_;
  double z0_;
};

/// L_z' = L_z + 2|z0|: height of the equivalent room with the antenna line
/// moved to mid-height.
inline double effective_height(const Room& room) { return room.lz() + 2.0 * std::abs(room.z0()); }

/// Dimensionless description of a room. `rho` alone decides the optimal
/// antenna architecture.
struct GeometrySignature {
  double ry = 0.0;   // L_y / L_x
  double rz = 0.0;   // L_z' / L_x
  double rho = 0.0;  // 4 ry^2 + rz^2

  static GeometrySignature from_ratios(double ry, double rz) {
    if (!std::isfinite(ry) || ry < 0.0) throw InvalidGeometry("ry", "must be finite and >= 0");
    if (!std::isfinite(rz) || rz < 0.0) throw InvalidGeometry("rz", "must be finite and >= 0");
    return GeometrySignature{ry, rz, 4.0 * ry * ry + rz * rz};
  }
};

inline GeometrySignature signature(const Room& room) {
  return GeometrySignature::from_ratios(room.ly() / room.lx(), effective_height(room) / room.lx());
}

enum class Regime {
  ThreePointDAS,  // rho <= 5/4: worst receivers at x = 0 and x = +-L_x/2
  BoundaryDAS,    // 5/4 <= rho <= 3: worst receivers at x = +-L_x/2
  Colocated       // rho >= 3: both antennas at the centre
};

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::ThreePointDAS: return "ThreePointDAS";
    case Regime::BoundaryDAS: return "BoundaryDAS";
    case Regime::Colocated: return "Colocated";
  }
  return "?";
}

inline Regime regime_from_string(const std::string& s) {
  if (s == "ThreePointDAS") return Regime::ThreePointDAS;
  if (s == "BoundaryDAS") return Regime::BoundaryDAS;
  if (s == "Colocated") return Regime::Colocated;
  throw std::invalid_argument("unknown regime label: " + s);
}

/// Receiver locations that attain the worst received power for the optimal
/// two-antenna placement.
struct CriticalSet {
  std::vector<double> x_crit;
  double y_crit = 0.0;
  double z_crit = 0.0;
};

/// Worst receiver height for a given antenna line: the wall farthest from z0.
/// At z0 = 0 both walls are equivalent and the bottom one is reported.
inline double critical_z(const Room& room) {
  if (room.is_flat()) return 0.0;
  return room.z0() >= 0.0 ? -room.lz() / 2.0 : room.lz() / 2.0;
}

inline CriticalSet critical_set(const Room& room, Regime regime) {
  CriticalSet cs;
  cs.y_crit = room.ly();
  cs.z_crit = critical_z(room);
  const double half = room.lx() / 2.0;
  if (regime == Regime::ThreePointDAS)
    cs.x_crit = {-half, 0.0, half};
  else
    cs.x_crit = {-half, half};
  return cs;
}

}  // namespace nfwpt
