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

#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "nfwpt/closed_form.hpp"
#include "nfwpt/solver.hpp"

using namespace nfwpt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Reference values below were computed independently at 50 digits with mpmath.
namespace ref {
constexpr double kBoundaryA1 = 0.681250038633213;     // L_x=2, L_y=sqrt(2), L_z'=0
constexpr double kBoundaryGamma = 0.683012701892219;  // gamma*/(P c), same room
constexpr double kBoundaryEta = 1.024519052838329;
constexpr double kThreePointA1 = 0.580229839517640;  // L_x=2, L_y=0.1, L_z'=0
constexpr double kZeroCrossingRy = 0.661437827766148;  // rz = sqrt(5)/2
constexpr double kEtaSmallRy = 2.999999999964;         // ry=1e-6, rz=0
}  // namespace ref

TEST_CASE("classify uses the lower label at ties", "[closed_form]") {
  CHECK(classify({0.0, 0.0, 0.0}) == Regime::ThreePointDAS);
  CHECK(classify({0.5, 0.5, 1.25}) == Regime::ThreePointDAS);
  CHECK(classify({0.5, 0.6, 1.2500001}) == Regime::BoundaryDAS);
  CHECK(classify({0.8, 0.3, 3.0}) == Regime::BoundaryDAS);
  CHECK(classify({0.9, 0.0, 3.0000001}) == Regime::Colocated);
}

TEST_CASE("flat sqrt(2) room lands in the boundary regime", "[closed_form]") {
  const Room room(2.0, std::sqrt(2.0), 0.0);
  const auto r = solve_closed_form(room, RadioParams{});
  CHECK(r.regime == Regime::BoundaryDAS);
  CHECK_THAT(r.a1_star, WithinAbs(ref::kBoundaryA1, 1e-12));
  CHECK_THAT(r.a2_star, WithinAbs(-ref::kBoundaryA1, 1e-12));
  CHECK_THAT(r.gamma_star, WithinAbs(ref::kBoundaryGamma, 1e-12));
  CHECK_THAT(r.eta, WithinAbs(ref::kBoundaryEta, 1e-12));
  CHECK(r.x_crit == std::vector<double>{-1.0, 1.0});
}

TEST_CASE("three-point example placement", "[closed_form]") {
  const Room room(2.0, 0.1, 0.0);
  CHECK(classify(signature(room)) == Regime::ThreePointDAS);
  CHECK_THAT(optimal_a1(room), WithinAbs(ref::kThreePointA1, 1e-12));
}

TEST_CASE("rho = 4 is co-located with unit gain", "[closed_form]") {
  const Room room(1.0, 1.0, 0.0);
  const auto r = solve_closed_form(room, RadioParams{});
  CHECK(r.regime == Regime::Colocated);
  CHECK(r.a1_star == 0.0);
  CHECK_FALSE(std::signbit(r.a2_star));
  CHECK(r.eta == 1.0);
}

TEST_CASE("placement vanishes at rho = 3 on every sweep curve", "[closed_form]") {
  const double rz = std::sqrt(5.0) / 2.0;
  const double ry = std::sqrt(3.0 - rz * rz) / 2.0;
  CHECK_THAT(ry, WithinAbs(ref::kZeroCrossingRy, 1e-14));
  CHECK_THAT(optimal_a1_ratio(GeometrySignature::from_ratios(ry, rz)), WithinAbs(0.0, 1e-6));
  CHECK(optimal_a1_ratio(GeometrySignature::from_ratios(ry + 1e-9, rz)) == 0.0);
}

TEST_CASE("branches agree at the regime boundaries", "[closed_form][property]") {
  // ry, rz pairs with rho exactly representable.
  const GeometrySignature lo{0.5, 0.5, 1.25};
  CHECK_THAT(branch::a1_three_point(lo), WithinRel(branch::a1_boundary(lo), 1e-9));
  CHECK_THAT(branch::power_three_point(lo), WithinRel(branch::power_boundary(lo), 1e-9));
  CHECK_THAT(branch::gain_three_point(lo), WithinRel(branch::gain_boundary(lo), 1e-9));

  const GeometrySignature hi{std::sqrt(0.75), 0.0, 3.0};
  CHECK_THAT(branch::a1_boundary(hi), WithinAbs(0.0, 1e-9));
  CHECK_THAT(branch::power_boundary(hi), WithinRel(branch::power_colocated(hi), 1e-9));
  CHECK_THAT(branch::gain_boundary(hi), WithinRel(1.0, 1e-9));
}

TEST_CASE("boundary branch refuses complex placements", "[closed_form]") {
  CHECK_THROWS_AS(branch::a1_boundary({1.0, 0.0, 4.0}), std::domain_error);
  CHECK_THROWS_AS(branch::power_boundary({0.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("stationary points of the reference room", "[closed_form]") {
  const double ly = std::sqrt(2.0);
  const auto sp = stationary_points(1.0, ly, 0.0);
  CHECK_THAT(sp.e, WithinAbs(13.856406460551018, 1e-12));
  CHECK_THAT(sp.d, WithinAbs(12.0, 1e-12));
  REQUIRE(sp[StationaryLabel::I]);
  REQUIRE(sp[StationaryLabel::II]);
  CHECK_THAT(*sp[StationaryLabel::I], WithinAbs(ref::kBoundaryA1, 1e-12));
  CHECK(*sp[StationaryLabel::II] == -*sp[StationaryLabel::I]);
  CHECK_FALSE(sp[StationaryLabel::III]);
  CHECK(*sp[StationaryLabel::V] == 0.0);

  // Central difference of f_x(+-a, x = 1) in a vanishes at (I).
  const double a = *sp[StationaryLabel::I];
  const double h = 1e-6;
  auto fx = [&](double v) { return f_x(std::vector<double>{-v, v}, 1.0, ly, 0.0); };
  CHECK_THAT((fx(a + h) - fx(a - h)) / (2.0 * h), WithinAbs(0.0, 1e-8));
  CHECK_THAT(fx(a), WithinAbs(ref::kBoundaryGamma, 1e-12));
}

TEST_CASE("stationary points are real beyond the threshold", "[closed_form]") {
  const double ly = 0.6, lz = 0.8;
  const double t = realness_threshold(ly, lz);
  CHECK_FALSE(stationary_points(0.9 * t, ly, lz)[StationaryLabel::I]);
  const auto sp = stationary_points(1.1 * t, ly, lz);
  REQUIRE(sp[StationaryLabel::I]);
  CHECK(*sp[StationaryLabel::I] > 0.0);
  // (III) and (IV) are the mirror image at -x.
  const auto mirrored = stationary_points(-1.1 * t, ly, lz);
  REQUIRE(mirrored[StationaryLabel::III]);
  CHECK_THAT(*mirrored[StationaryLabel::III], WithinRel(*sp[StationaryLabel::I], 1e-14));
}

TEST_CASE("three-point optimum equalises the centre and the walls", "[closed_form][property]") {
  for (double ry : {0.05, 0.2, 0.4}) {
    for (double rz : {0.0, 0.3, 0.5}) {
      const auto sig = GeometrySignature::from_ratios(ry, rz);
      if (classify(sig) != Regime::ThreePointDAS) continue;
      const double a = optimal_a1_ratio(sig);
      const std::vector<double> pos{-a, a};
      const double centre = f_x(pos, 0.0, ry, rz);
      const double wall = f_x(pos, 0.5, ry, rz);
      CHECK_THAT(centre, WithinRel(wall, 1e-12));
      CHECK_THAT(wall, WithinRel(normalized_worst_case_power(sig), 1e-12));
    }
  }
}

TEST_CASE("closed form beats every other symmetric placement", "[closed_form][property]") {
  std::vector<double> xs;
  for (int i = 0; i <= 400; ++i) xs.push_back(-0.5 + i / 400.0);
  for (double ry : {0.1, 0.4, 0.6, 0.8, 1.2}) {
    for (double rz : {0.0, 0.5, 1.0}) {
      const auto sig = GeometrySignature::from_ratios(ry, rz);
      const double a = optimal_a1_ratio(sig);
      const std::vector<double> best_pos{-a, a};
      const double best = min_over_grid(best_pos, xs, ry, rz);
      CHECK_THAT(best, WithinRel(normalized_worst_case_power(sig), 1e-12));
      for (int k = 0; k <= 1000; ++k) {
        const double b = 0.5 * k / 1000.0;
        const std::vector<double> pos{-b, b};
        CHECK(min_over_grid(pos, xs, ry, rz) <= best * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("far-field gain stays within [1, 3]", "[closed_form][property]") {
  for (int i = 0; i <= 60; ++i)
    for (int j = 0; j <= 30; ++j) {
      const double eta = farfield_gain(GeometrySignature::from_ratios(0.025 * i, 0.05 * j));
      CHECK(eta >= 1.0);
      CHECK(eta <= 3.0);
    }
  CHECK_THAT(farfield_gain(GeometrySignature::from_ratios(1e-6, 0.0)), WithinAbs(ref::kEtaSmallRy, 1e-11));
  CHECK(farfield_gain(GeometrySignature::from_ratios(0.9, 0.0)) == 1.0);
}

TEST_CASE("gain is the ratio of the optimum to co-location", "[closed_form]") {
  for (double ry : {0.1, 0.5, 0.7})
    for (double rz : {0.0, 0.6}) {
      const auto sig = GeometrySignature::from_ratios(ry, rz);
      CHECK_THAT(farfield_gain(sig),
                 WithinRel(normalized_worst_case_power(sig) / normalized_colocated_power(sig), 1e-12));
    }
}

TEST_CASE("power scales with 1/L^2 and the placement with L", "[closed_form][property]") {
  const Room room(3.0, 1.2, 0.9, 0.1);
  const RadioParams p{0.01, 2.0, 5.0};
  const double g0 = worst_case_power(room, p);
  const double a0 = optimal_a1(room);
  for (double k : {0.1, 2.0, 40.0}) {
    const Room big = room.scaled(k);
    CHECK_THAT(worst_case_power(big, p), WithinRel(g0 / (k * k), 1e-12));
    CHECK_THAT(optimal_a1(big), WithinRel(a0 * k, 1e-12));
  }
}

TEST_CASE("antenna offset z0 only enters through L_z'", "[closed_form][property]") {
  const auto a = solve_closed_form(Room(2.0, 0.5, 1.0, 0.25), RadioParams{});
  const auto b = solve_closed_form(Room(2.0, 0.5, 1.5, 0.0), RadioParams{});
  const auto c = solve_closed_form(Room(2.0, 0.5, 1.0, -0.25), RadioParams{});
  CHECK(a.a1_star == b.a1_star);
  CHECK(a.a1_star == c.a1_star);
  CHECK(a.gamma_star == b.gamma_star);
}
