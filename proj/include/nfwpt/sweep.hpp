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
#include <array>
#include <limits>
#include <string>
#include <vector>

#include "channel.hpp"
#include "closed_form.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "parallel.hpp"

namespace nfwpt {

struct SweepRow {
  double ry = 0.0;
  double rz = 0.0;
  double rho = 0.0;
  double a1_star_over_lx = 0.0;
  double gamma_star_norm = 0.0;  // gamma* L_x^2 / (P c)
  double eta = 1.0;
  Regime regime = Regime::ThreePointDAS;
};

using SweepTable = std::vector<SweepRow>;

inline SweepRow sweep_row(double ry, double rz) {
  const auto sig = GeometrySignature::from_ratios(ry, rz);
  SweepRow r;
  r.ry = ry;
  r.rz = rz;
  r.rho = sig.rho;
  r.regime = classify(sig);
  r.a1_star_over_lx = optimal_a1_ratio(sig);
  // The boundary branch divides by rho; at ry = rz = 0 the three-point branch
  // applies and is finite.
  r.gamma_star_norm = normalized_worst_case_power(sig);
  r.eta = farfield_gain(sig);
  return r;
}

/// Closed-form curves over ry in [ry_min, ry_max] for every rz. Rows are
/// sorted by (rz, ry).
inline SweepTable sweep_table(double ry_min, double ry_max, int ry_count, std::vector<double> rz_values) {
  std::sort(rz_values.begin(), rz_values.end());
  const std::size_t n = static_cast<std::size_t>(ry_count);
  SweepTable rows(rz_values.size() * n);
  parallel_for(rows.size(), [&](std::size_t k) {
    const double rz = rz_values[k / n];
    const std::size_t i = k % n;
    const double ry = i + 1 == n ? ry_max : ry_min + (ry_max - ry_min) * static_cast<double>(i) / (n - 1);
    rows[k] = sweep_row(ry, rz);
  });
  return rows;
}

inline const std::vector<std::string>& sweep_csv_header() {
  static const std::vector<std::string> h{"ry", "rz", "rho", "a1_star_over_lx", "gamma_star_norm", "eta", "regime"};
  return h;
}

inline std::string sweep_csv(const SweepTable& rows) {
  CsvWriter w(sweep_csv_header());
  for (const auto& r : rows) {
    w.row({format_double(r.ry), format_double(r.rz), format_double(r.rho), format_double(r.a1_star_over_lx),
           format_double(r.gamma_star_norm), format_double(r.eta), to_string(r.regime)});
  }
  return w.str();
}

struct FieldSample {
  ReceiverPoint point;
  double gamma = 0.0;  // W
};

struct FieldGrid {
  std::vector<FieldSample> samples;
  FieldSample minimum;
};

/// Received power on an n x n x n grid spanning the room (one z layer in a
/// flat room). Points on top of an antenna are omitted.
inline FieldGrid field_grid(const Room& room, const Placement& placement, const RadioParams& radio, int n) {
  auto axis = [](double lo, double hi, int count) {
    std::vector<double> v;
    for (int i = 0; i < count; ++i) v.push_back(i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
    return v;
  };
  const auto xs = axis(-room.lx() / 2.0, room.lx() / 2.0, n);
  const auto ys = axis(0.0, room.ly(), n);
  const auto zs = room.is_flat() ? std::vector<double>{0.0} : axis(-room.lz() / 2.0, room.lz() / 2.0, n);

  FieldGrid g;
  g.minimum.gamma = std::numeric_limits<double>::infinity();
  for (double x : xs)
    for (double y : ys)
      for (double z : zs) {
        const ReceiverPoint p{x, y, z};
        double gamma = 0.0;
        try {
          gamma = received_power(placement.a, room.z0(), p, radio);
        } catch (const ZeroDistance&) {
          continue;
        }
        g.samples.push_back({p, gamma});
        if (gamma < g.minimum.gamma) g.minimum = g.samples.back();
      }
  return g;
}

inline const std::vector<std::string>& field_csv_header() {
  static const std::vector<std::string> h{"x", "y", "z", "gamma_watts"};
  return h;
}

inline std::string field_csv(const FieldGrid& g) {
  CsvWriter w(field_csv_header());
  for (const auto& s : g.samples)
    w.row({format_double(s.point.x), format_double(s.point.y), format_double(s.point.z), format_double(s.gamma)});
  w.comment("minimum x=" + format_double(g.minimum.point.x) + " y=" + format_double(g.minimum.point.y) +
            " z=" + format_double(g.minimum.point.z) + " gamma_watts=" + format_double(g.minimum.gamma));
  return w.str();
}

}  // namespace nfwpt
