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
#include <numbers>
#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "nfwpt/channel.hpp"

using namespace nfwpt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("distance and its zero guard", "[channel]") {
  CHECK_THAT(distance(0.0, 0.0, {3.0, 4.0, 0.0}), WithinRel(5.0, 1e-15));
  CHECK_THAT(distance(1.0, 0.5, {1.0, 0.0, 2.5}), WithinRel(2.0, 1e-15));
  CHECK_THROWS_AS(distance(0.2, 0.1, {0.2, 0.0, 0.1}), ZeroDistance);
  CHECK_THROWS_AS(f_xyz(std::vector<double>{0.0}, 0.0, {0.0, 0.0, 0.0}), ZeroDistance);
}

TEST_CASE("channel entries have spherical amplitude and phase", "[channel]") {
  const RadioParams p{0.05, 4.0, 1.0};
  const std::vector<double> a{-0.5, 0.25};
  const ReceiverPoint rx{0.1, 1.3, -0.2};
  const auto g = channel_vector(a, 0.1, rx, p);
  REQUIRE(g.size() == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = distance(a[i], 0.1, rx);
    CHECK_THAT(std::abs(g[i]), WithinRel(2.0 / d, 1e-14));
    const auto expected = std::polar(2.0 / d, -2.0 * std::numbers::pi * d / p.wavelength);
    CHECK_THAT(std::abs(g[i] - expected), WithinAbs(0.0, 1e-13));
  }
}

TEST_CASE("MRT power equals P times the channel norm", "[channel][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const RadioParams p{0.01 + 0.1 * std::abs(u(rng)), 0.5 + std::abs(u(rng)), 0.1 + 3.0 * std::abs(u(rng))};
    std::vector<double> a{u(rng), u(rng), u(rng)};
    const ReceiverPoint rx{u(rng), 1.0 + std::abs(u(rng)), u(rng)};
    const auto g = channel_vector(a, 0.0, rx, p);
    const auto s = mrt_beamformer(g, p.tx_power);
    CHECK_THAT(squared_norm(s), WithinRel(p.tx_power, 1e-13));
    const double gamma = beamformed_power(g, s);
    CHECK_THAT(gamma, WithinRel(p.tx_power * squared_norm(g), 1e-12));
    CHECK_THAT(gamma, WithinRel(received_power(a, 0.0, rx, p), 1e-12));
  }
}

TEST_CASE("random beamformers never beat MRT", "[channel][property]") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.0);
  const RadioParams p{0.02, 1.0, 2.0};
  const std::vector<double> a{-0.4, 0.1, 0.45};
  const ReceiverPoint rx{0.3, 0.8, 0.2};
  const auto g = channel_vector(a, 0.0, rx, p);
  const double best = beamformed_power(g, mrt_beamformer(g, p.tx_power));
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Complex> s(a.size());
    for (auto& v : s) v = {n(rng), n(rng)};
    const double scale = std::sqrt(p.tx_power / squared_norm(s));
    for (auto& v : s) v *= scale;
    CHECK(beamformed_power(g, s) <= best * (1.0 + 1e-12));
  }
}

TEST_CASE("size mismatch and zero channel are rejected", "[channel]") {
  const std::vector<Complex> g{{1.0, 0.0}};
  const std::vector<Complex> s{{1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(beamformed_power(g, s), std::invalid_argument);
  const std::vector<Complex> zero{{0.0, 0.0}};
  CHECK_THROWS_AS(mrt_beamformer(zero, 1.0), ZeroChannel);
}

TEST_CASE("received power does not depend on the wavelength", "[channel][property]") {
  const std::vector<double> a{-0.3, 0.3};
  const ReceiverPoint rx{0.2, 1.1, 0.4};
  const double ref = received_power(a, 0.0, rx, RadioParams{0.01, 1.0, 1.0});
  for (double lambda : {1e-4, 0.1, 3.0, 100.0})
    CHECK_THAT(received_power(a, 0.0, rx, RadioParams{lambda, 1.0, 1.0}), WithinRel(ref, 1e-14));
}

TEST_CASE("received power scales linearly with P and c", "[channel]") {
  const std::vector<double> a{-0.3, 0.3};
  const ReceiverPoint rx{0.2, 1.1, 0.4};
  const double base = received_power(a, 0.0, rx, RadioParams{});
  CHECK_THAT(received_power(a, 0.0, rx, RadioParams{0.01, 3.0, 2.0}), WithinRel(6.0 * base, 1e-14));
}

TEST_CASE("f_xyz decreases in y and in |z - z0|", "[channel][property]") {
  const std::vector<double> a{-0.7, 0.2};
  for (double x : {-1.0, 0.0, 0.4}) {
    double prev = f_xyz(a, 0.2, {x, 0.1, 0.2});
    for (double y = 0.2; y <= 3.0; y += 0.1) {
      const double v = f_xyz(a, 0.2, {x, y, 0.2});
      CHECK(v < prev);
      prev = v;
    }
    prev = f_xyz(a, 0.2, {x, 1.0, 0.2});
    for (double dz = 0.05; dz <= 1.0; dz += 0.05) {
      const double up = f_xyz(a, 0.2, {x, 1.0, 0.2 + dz});
      const double down = f_xyz(a, 0.2, {x, 1.0, 0.2 - dz});
      CHECK_THAT(up, WithinRel(down, 1e-14));
      CHECK(up < prev);
      prev = up;
    }
  }
}

TEST_CASE("f_x is f_xyz on the critical line", "[channel]") {
  const Room room(3.0, 2.0, 1.0, 0.2);
  const std::vector<double> a{-0.8, 0.5};
  for (double x : {-1.5, -0.2, 0.0, 1.1}) {
    const double direct = f_xyz(a, room.z0(), {x, room.ly(), critical_z(room)});
    CHECK_THAT(f_x(a, x, room), WithinRel(direct, 1e-14));
    CHECK_THAT(f_x(a, x, room.ly(), effective_height(room)), WithinRel(direct, 1e-14));
  }
}

TEST_CASE("f_x of a symmetric pair is even in x", "[channel][property]") {
  const std::vector<double> a{-0.35, 0.35};
  for (double x : {0.1, 0.25, 0.5})
    CHECK_THAT(f_x(a, x, 0.7, 0.4), WithinRel(f_x(a, -x, 0.7, 0.4), 1e-15));
}

TEST_CASE("near-field distance uses the aperture", "[channel]") {
  CHECK_THAT(near_field_distance(std::vector<double>{-0.5, 0.5}, 0.01), WithinRel(200.0, 1e-15));
  CHECK(near_field_distance(std::vector<double>{0.0, 0.0}, 0.01) == 0.0);
  CHECK(near_field_distance(std::vector<double>{}, 0.01) == 0.0);
}

TEST_CASE("radio parameters and placements are validated", "[channel]") {
  auto field = [](const RadioParams& p) {
    try {
      p.validate();
    } catch (const InvalidGeometry& e) {
      return e.field();
    }
    return std::string("<ok>");
  };
  CHECK(field(RadioParams{}) == "<ok>");
  CHECK(field(RadioParams{0.0, 1.0, 1.0}) == "wavelength");
  CHECK(field(RadioParams{0.01, -1.0, 1.0}) == "ref_gain");
  CHECK(field(RadioParams{0.01, 1.0, 0.0}) == "power");

  const Room room(2.0, 1.0, 1.0);
  CHECK_NOTHROW(Placement{{-1.0, 1.0}}.check(room));
  CHECK_THROWS_AS((Placement{{-1.0, 1.01}}.check(room)), InvalidGeometry);
  CHECK_THROWS_AS(Placement{}.check(room), InvalidGeometry);
}
