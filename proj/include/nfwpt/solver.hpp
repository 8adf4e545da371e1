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
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "channel.hpp"
#include "geometry.hpp"

namespace nfwpt {

class InvalidArity : public std::invalid_argument {
public:
  explicit InvalidArity(const std::string& what) : std::invalid_argument(what) {}
};

struct SolverConfig {
  int x_grid_count = 201;   // receiver abscissas on the critical line
  int a_grid_count = 201;   // coarse placement grid of the exhaustive oracle
  int refine_iters = 100;   // golden-section rounds after the coarse scan
  double tol = 1e-12;       // relative objective change that ends the QT loop
  int max_qt_iters = 1000;
  int inner_steps = 200;    // projected subgradient steps per surrogate

  void validate() const {
    if (x_grid_count < 3) throw InvalidGeometry("x_grid_count", "must be >= 3");
    if (a_grid_count < 3) throw InvalidGeometry("a_grid_count", "must be >= 3");
    if (refine_iters < 1) throw InvalidGeometry("refine_iters", "must be >= 1");
    if (!(tol > 0.0)) throw InvalidGeometry("tol", "must be > 0");
    if (max_qt_iters < 1) throw InvalidGeometry("max_qt_iters", "must be >= 1");
    if (inner_steps < 1) throw InvalidGeometry("inner_steps", "must be >= 1");
  }
};

struct NumericResult {
  Placement positions;          // ascending, symmetric about x = 0
  double objective = 0.0;       // min over the x-grid of f_x at `positions`
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;  // starting objective, then one entry per iteration

  /// Largest |a_i|: a1 for two antennas, the outer offset in general.
  double outer_offset() const {
    double m = 0.0;
    for (double a : positions.a) m = std::max(m, std::abs(a));
    return m;
  }
};

/// Uniform grid over [-L_x/2, L_x/2] merged with the analytical candidates
/// {-L_x/2, 0, L_x/2}.
inline std::vector<double> critical_line_grid(const Room& room, int count) {
  const double half = room.lx() / 2.0;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count) + 3);
  for (int i = 0; i < count; ++i) xs.push_back(-half + room.lx() * i / (count - 1));
  xs.push_back(-half);
  xs.push_back(0.0);
  xs.push_back(half);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline double min_over_grid(std::span<const double> a, std::span<const double> xs, double ly, double lz_eff) {
  double m = std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::min(m, f_x(a, x, ly, lz_eff));
  return m;
}

/// Antennas at +-offset for every offset, plus one at the centre if requested.
inline Placement symmetric_placement(std::span<const double> offsets, bool with_center) {
  Placement p;
  for (double o : offsets) {
    p.a.push_back(-o);
    p.a.push_back(o);
  }
  if (with_center) p.a.push_back(0.0);
  std::sort(p.a.begin(), p.a.end());
  for (double& v : p.a)
    if (v == 0.0) v = 0.0;  // drop negative zeros
  return p;
}

/// Golden-section maximisation of a quasi-concave f on [lo, hi]. Ties move the
/// bracket toward `lo`, so flat plateaus resolve to their low end.
/// `on_iter(x, fx)` sees the incumbent after every round.
template <typename F, typename Observer>
double golden_section_maximize(F&& f, double lo, double hi, int iters, Observer&& on_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    if (fc >= fd)
      on_iter(c, fc);
    else
      on_iter(d, fd);
  }
  return fc >= fd ? c : d;
}

template <typename F>
double golden_section_maximize(F&& f, double lo, double hi, int iters) {
  return golden_section_maximize(std::forward<F>(f), lo, hi, iters, [](double, double) {});
}

/// Exhaustive max-min oracle for one or two antennas: coarse scan of the
/// placement followed by golden-section refinement of the best grid cell.
inline NumericResult oracle_grid_solve(const Room& room, int n_t, const SolverConfig& config) {
  config.validate();
  if (n_t < 1) throw InvalidArity("n_t must be >= 1");
  if (n_t > 2) throw InvalidArity("exhaustive oracle handles n_t <= 2; use qt_solve");

  const double ly = room.ly();
  const double lz_eff = effective_height(room);
  const auto xs = critical_line_grid(room, config.x_grid_count);
  const double half = room.lx() / 2.0;

  // n_t = 2 scans the symmetric offset a1 in [0, L_x/2]; n_t = 1 scans the
  // single antenna over the whole line.
  const double lo = n_t == 2 ? 0.0 : -half;
  const double hi = half;
  auto antennas = [n_t](double a) {
    return n_t == 2 ? std::vector<double>{-a, a} : std::vector<double>{a};
  };
  auto objective = [&](double a) {
    const auto pos = antennas(a);
    return min_over_grid(pos, xs, ly, lz_eff);
  };

  NumericResult res;
  const int n = config.a_grid_count;
  double best_a = lo, best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double a = lo + (hi - lo) * i / (n - 1);
    const double v = objective(a);
    if (v > best_v) {
      best_v = v;
      best_a = a;
    }
  }
  res.history.push_back(best_v);

  const double step = (hi - lo) / (n - 1);
  golden_section_maximize(objective, std::max(lo, best_a - step), std::min(hi, best_a + step), config.refine_iters,
                          [&](double a, double v) {
                            if (v > best_v || (v == best_v && std::abs(a) < std::abs(best_a))) {
                              best_v = v;
                              best_a = a;
                            }
                            res.history.push_back(best_v);
                            ++res.iterations;
                          });

  if (n_t == 2) {
    const double off = std::abs(best_a);
    res.positions = symmetric_placement(std::span<const double>(&off, 1), false);
  } else {
    res.positions = Placement{{best_a == 0.0 ? 0.0 : best_a}};
  }
  res.objective = min_over_grid(res.positions.a, xs, ly, lz_eff);
  res.converged = true;
  return res;
}

namespace detail {

struct SymmetricLayout {
  int free = 0;         // number of free offsets
  bool center = false;  // one antenna pinned at x = 0
};

inline SymmetricLayout layout_for(int n_t) { return {n_t / 2, n_t % 2 == 1}; }

/// Positions evenly spread on [-L_x/4, L_x/4], expressed as free offsets.
inline std::vector<double> initial_offsets(const Room& room, int n_t) {
  const double q = room.lx() / 4.0;
  std::vector<double> pos;
  for (int i = 0; i < n_t; ++i) pos.push_back(-q + 2.0 * q * i / (n_t - 1));
  std::vector<double> offsets;
  for (double p : pos)
    if (p > 0.0) offsets.push_back(p);
  std::sort(offsets.begin(), offsets.end());
  return offsets;
}

}  // namespace detail

/// Quadratic-transform solver for the max-min sum-of-ratios problem over
/// symmetric placements.
///
/// Each outer iteration freezes the auxiliary variables y_{i,x} = 1/B_{i,x}(a)
/// and maximises the concave surrogate min_x sum_i (2 y_{i,x} - y_{i,x}^2 B_{i,x})
/// by projected subgradient ascent on [0, L_x/2]^k with steps
/// base / sqrt(t). The surrogate never exceeds the true objective and equals it
/// at the frozen point, so accepting only surrogate improvements keeps the true
/// objective non-decreasing. Accepted updates are stretched by powers of two
/// while the true objective keeps improving. After an accepted move `base` is reset to four
/// times the move length; an iteration without improvement halves it. The
/// loop ends once the relative objective change drops below `tol` with a step
/// scale under 1e-6 L_x, or once `base` collapses below 1e-12 L_x.
inline NumericResult qt_solve(const Room& room, int n_t, const SolverConfig& config) {
  config.validate();
  if (n_t < 2) throw InvalidArity("qt_solve requires n_t >= 2");

  // Surrogate gains near flat optima sit close to double rounding; the
  // accumulations run in extended precision.
  using Real = long double;
  const auto layout = detail::layout_for(n_t);
  const double ly = room.ly();
  const double lz_eff = effective_height(room);
  const double floor = ly * ly + lz_eff * lz_eff / 4.0;
  const double half = room.lx() / 2.0;
  const auto xs = critical_line_grid(room, config.x_grid_count);
  const std::size_t nx = xs.size();

  // Antenna i sits at sign[i] * offsets[index[i]]; index -1 is the centre.
  std::vector<int> index;
  std::vector<double> sign;
  for (int j = 0; j < layout.free; ++j) {
    index.push_back(j);
    sign.push_back(-1.0);
    index.push_back(j);
    sign.push_back(1.0);
  }
  if (layout.center) {
    index.push_back(-1);
    sign.push_back(0.0);
  }
  const std::size_t na = index.size();

  auto position = [&](const std::vector<double>& o, std::size_t i) -> Real {
    return index[i] < 0 ? 0.0L : static_cast<Real>(sign[i]) * o[static_cast<std::size_t>(index[i])];
  };
  auto true_objective = [&](const std::vector<double>& o) {
    Real m = std::numeric_limits<Real>::infinity();
    for (double x : xs) {
      Real s = 0.0;
      for (std::size_t i = 0; i < na; ++i) {
        const Real dx = x - position(o, i);
        s += 1.0 / (dx * dx + floor);
      }
      m = std::min(m, s);
    }
    return m;
  };

  std::vector<Real> y(nx * na);
  // Surrogate value and the index of the minimising x (first on ties).
  auto surrogate = [&](const std::vector<double>& o, std::size_t& arg) {
    Real m = std::numeric_limits<Real>::infinity();
    arg = 0;
    for (std::size_t k = 0; k < nx; ++k) {
      Real s = 0.0;
      for (std::size_t i = 0; i < na; ++i) {
        const Real dx = xs[k] - position(o, i);
        const Real yi = y[k * na + i];
        s += 2.0 * yi - yi * yi * (dx * dx + floor);
      }
      if (s < m) {
        m = s;
        arg = k;
      }
    }
    return m;
  };

  std::vector<double> o = detail::initial_offsets(room, n_t);
  Real obj = true_objective(o);
  constexpr double kMaxStretch = 1 << 20;
  const double max_base = 0.1 * room.lx();
  const double fine_base = 1e-6 * room.lx();
  const double min_base = 1e-12 * room.lx();
  double base = max_base;

  NumericResult res;
  res.history.push_back(static_cast<double>(obj));
  std::vector<double> grad(static_cast<std::size_t>(layout.free));

  for (int it = 1; it <= config.max_qt_iters; ++it) {
    res.iterations = it;
    for (std::size_t k = 0; k < nx; ++k) {
      for (std::size_t i = 0; i < na; ++i) {
        const Real dx = xs[k] - position(o, i);
        y[k * na + i] = 1.0L / (dx * dx + floor);
      }
    }

    std::size_t arg = 0;
    const Real s_old = surrogate(o, arg);
    std::vector<double> cur = o, best = o;
    Real best_s = s_old;
    for (int t = 1; t <= config.inner_steps && layout.free > 0; ++t) {
      surrogate(cur, arg);
      std::fill(grad.begin(), grad.end(), 0.0);
      for (std::size_t i = 0; i < na; ++i) {
        if (index[i] < 0) continue;
        const double yi = static_cast<double>(y[arg * na + i]);
        grad[static_cast<std::size_t>(index[i])] +=
            2.0 * yi * yi * static_cast<double>(xs[arg] - position(cur, i)) * sign[i];
      }
      double gn = 0.0;
      for (double g : grad) gn += g * g;
      gn = std::sqrt(gn);
      if (gn == 0.0) break;
      const double step = base / std::sqrt(static_cast<double>(t));
      for (std::size_t j = 0; j < grad.size(); ++j) cur[j] = std::clamp(cur[j] + step * grad[j] / gn, 0.0, half);
      std::size_t tmp = 0;
      const Real s = surrogate(cur, tmp);
      if (s > best_s) {
        best_s = s;
        best = cur;
      }
    }

    Real cand = best_s > s_old ? true_objective(best) : obj;
    if (best_s > s_old && cand >= obj) {
      // Over-relaxation: keep doubling the step along the surrogate update
      // while the true objective still improves.
      const std::vector<double> dir_from = o;
      std::vector<double> trial(o.size());
      // Stretched points stay strictly inside the box: landing exactly on
      // a1 = 0 would park the iterate on a stationary point.
      for (double k = 2.0; k <= kMaxStretch; k *= 2.0) {
        bool inside = true;
        for (std::size_t j = 0; j < o.size(); ++j) {
          trial[j] = dir_from[j] + k * (best[j] - dir_from[j]);
          inside = inside && trial[j] > 0.0 && trial[j] < half;
        }
        if (!inside) break;
        const Real t_obj = true_objective(trial);
        if (!(t_obj > cand)) break;
        cand = t_obj;
        best = trial;
      }
      const Real gain = cand - obj;
      double moved = 0.0;
      for (std::size_t j = 0; j < o.size(); ++j) moved = std::max(moved, std::abs(best[j] - o[j]));
      o = best;
      obj = cand;
      res.history.push_back(static_cast<double>(obj));
      // The next surrogate optimum is usually a similar distance away.
      base = std::clamp(4.0 * moved, min_base, max_base);
      if (gain <= config.tol * obj && base <= fine_base) {
        res.converged = true;
        break;
      }
    } else {
      res.history.push_back(static_cast<double>(obj));
      base *= 0.5;
      if (base < min_base) {
        res.converged = true;
        break;
      }
    }
  }

  res.positions = symmetric_placement(o, layout.center);
  res.objective = min_over_grid(res.positions.a, xs, ly, lz_eff);
  return res;
}

struct WorstReceiver {
  ReceiverPoint point;
  double value = 0.0;  // f_xyz at `point`
};

/// Full 3-D grid scan of f_xyz over the room. Grid points that coincide with
/// an antenna are skipped.
inline WorstReceiver worst_receiver_scan(const Room& room, const Placement& placement, std::array<int, 3> grid) {
  for (int g : grid)
    if (g < 2) throw InvalidGeometry("grid", "need at least 2 points per axis");
  auto axis = [](double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
    return v;
  };
  const auto xs = axis(-room.lx() / 2.0, room.lx() / 2.0, grid[0]);
  const auto ys = axis(0.0, room.ly(), grid[1]);
  const auto zs = axis(-room.lz() / 2.0, room.lz() / 2.0, grid[2]);

  WorstReceiver w;
  w.value = std::numeric_limits<double>::infinity();
  for (double x : xs)
    for (double y : ys)
      for (double z : zs) {
        const ReceiverPoint p{x, y, z};
        double v = 0.0;
        try {
          v = f_xyz(placement.a, room.z0(), p);
        } catch (const ZeroDistance&) {
          continue;
        }
        if (v < w.value) {
          w.value = v;
          w.point = p;
        }
      }
  return w;
}

}  // namespace nfwpt
