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
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace nfwpt {

using Complex = std::complex<double>;

/// Receiver closer than this to a transmit antenna is rejected.
inline constexpr double kMinDistance = 1e-9;

class ZeroDistance : public std::domain_error {
public:
  ZeroDistance() : std::domain_error("receiver coincides with a transmit antenna") {}
};

class ZeroChannel : public std::domain_error {
public:
  ZeroChannel() : std::domain_error("channel vector has zero norm") {}
};

struct RadioParams {
  double wavelength = 0.01;  // m
  double ref_gain = 1.0;     // channel power gain at 1 m
  double tx_power = 1.0;     // W, shared among all antennas

  void validate() const {
    if (!std::isfinite(wavelength) || wavelength <= 0.0) throw InvalidGeometry("wavelength", "must be > 0");
    if (!std::isfinite(ref_gain) || ref_gain <= 0.0) throw InvalidGeometry("ref_gain", "must be > 0");
    if (!std::isfinite(tx_power) || tx_power <= 0.0) throw InvalidGeometry("power", "must be > 0");
  }
};

/// x-coordinates of the transmit antennas on the line y = 0, z = z0.
struct Placement {
  std::vector<double> a;

  std::size_t size() const noexcept { return a.size(); }
  std::span<const double> positions() const noexcept { return a; }

  /// Throws InvalidGeometry unless the placement is non-empty and every
  /// antenna lies inside [-L_x/2, L_x/2].
  void check(const Room& room) const {
    if (a.empty()) throw InvalidGeometry("a", "at least one antenna is required");
    for (double ai : a) {
      if (!std::isfinite(ai) || std::abs(ai) > room.lx() / 2.0)
        throw InvalidGeometry("a", "antenna position outside [-L_x/2, L_x/2]");
    }
  }

  bool operator==(const Placement&) const = default;
};

inline double distance(double antenna_x, double z0, const ReceiverPoint& rx) {
  const double dx = rx.x - antenna_x;
  const double dz = rx.z - z0;
  const double d = std::sqrt(dx * dx + rx.y * rx.y + dz * dz);
  if (d < kMinDistance) throw ZeroDistance();
  return d;
}

/// Line-of-sight spherical-wavefront channel, g_i = sqrt(c)/D_i exp(-j 2 pi D_i / lambda).
inline std::vector<Complex> channel_vector(std::span<const double> a, double z0, const ReceiverPoint& rx,
                                           const RadioParams& params) {
  std::vector<Complex> g;
  g.reserve(a.size());
  const double amp = std::sqrt(params.ref_gain);
  const double k = 2.0 * std::numbers::pi / params.wavelength;
  for (double ai : a) {
    const double d = distance(ai, z0, rx);
    g.push_back(std::polar(amp / d, -k * d));
  }
  return g;
}

inline double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

/// Maximum ratio transmission, s = sqrt(P) g / ||g||.
inline std::vector<Complex> mrt_beamformer(std::span<const Complex> g, double power) {
  const double n = std::sqrt(squared_norm(g));
  if (n == 0.0) throw ZeroChannel();
  std::vector<Complex> s(g.begin(), g.end());
  const double scale = std::sqrt(power) / n;
  for (auto& c : s) c *= scale;
  return s;
}

/// |g^H s|^2 for an arbitrary transmit vector.
inline double beamformed_power(std::span<const Complex> g, std::span<const Complex> s) {
  if (g.size() != s.size()) throw std::invalid_argument("channel and transmit vector sizes differ");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < g.size(); ++i) acc += std::conj(g[i]) * s[i];
  return std::norm(acc);
}

/// Sum of inverse squared distances from the receiver to every antenna.
inline double f_xyz(std::span<const double> a, double z0, const ReceiverPoint& rx) {
  double sum = 0.0;
  for (double ai : a) {
    const double d = distance(ai, z0, rx);
    sum += 1.0 / (d * d);
  }
  return sum;
}

/// Received power under MRT: P c sum_i 1/D_i^2. Independent of wavelength.
inline double received_power(std::span<const double> a, double z0, const ReceiverPoint& rx,
                             const RadioParams& params) {
  return params.tx_power * params.ref_gain * f_xyz(a, z0, rx);
}

/// f_xyz restricted to the worst receiver line y = L_y, |z - z0| = L_z'/2.
inline double f_x(std::span<const double> a, double x, double ly, double lz_eff) {
  const double floor = ly * ly + lz_eff * lz_eff / 4.0;
  double sum = 0.0;
  for (double ai : a) {
    const double dx = x - ai;
    const double d2 = dx * dx + floor;
    if (d2 < kMinDistance * kMinDistance) throw ZeroDistance();
    sum += 1.0 / d2;
  }
  return sum;
}

inline double f_x(std::span<const double> a, double x, const Room& room) {
  return f_x(a, x, room.ly(), effective_height(room));
}

/// Fraunhofer-style distance 2 D^2 / lambda of the antenna aperture. Purely
/// informational; receivers closer than this are in the radiating near field.
inline double near_field_distance(std::span<const double> a, double wavelength) {
  if (a.empty()) return 0.0;
  double lo = a[0], hi = a[0];
  for (double ai : a) {
    lo = std::min(lo, ai);
    hi = std::max(hi, ai);
  }
  const double aperture = hi - lo;
  return 2.0 * aperture * aperture / wavelength;
}

}  // namespace nfwpt
