// Copyright 2026 The Marsupial Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Geometry>

#include "marsupial/errors.hpp"
#include "marsupial/spatial.hpp"

using namespace marsupial;

TEST_CASE("sphere distance is collinear geometry") {
  const Obstacle o = Obstacle::sphere(Vec3(1.5, 0, 0), 0.5);
  CHECK(signed_distance(Vec3(0, 0, 0), o) == doctest::Approx(1.0));
}

TEST_CASE("point on sphere surface has zero distance") {
  const Obstacle o = Obstacle::sphere(Vec3(1.5, 0, 0), 0.5);
  CHECK(signed_distance(Vec3(1.0, 0, 0), o) == doctest::Approx(0.0));
}

TEST_CASE("sphere distance is exactly |p - c| - r") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 p(u(rng), u(rng), u(rng));
    const Vec3 c(u(rng), u(rng), u(rng));
    const double r = 0.1 + std::abs(u(rng));
    const Obstacle o = Obstacle::sphere(c, r);
    CHECK(signed_distance(p, o) == (p - c).norm() - r);
  }
}

TEST_CASE("box distance to closest face") {
  const Obstacle o = Obstacle::box(Vec3(1, -1, -1), Vec3(2, 1, 1));
  CHECK(signed_distance(Vec3(0, 0, 0), o) == doctest::Approx(1.0));
}

TEST_CASE("box distance corner and interior cases") {
  const Obstacle o = Obstacle::box(Vec3(0, 0, 0), Vec3(2, 2, 2));
  // Corner: distance to (0,0,0) from (-3,-4,0) in the xy plane.
  CHECK(signed_distance(Vec3(-3, -4, 0), o) == doctest::Approx(5.0));
  // Interior point is 0.5 from the nearest face, reported negative.
  CHECK(signed_distance(Vec3(0.5, 1, 1), o) == doctest::Approx(-0.5));
}

TEST_CASE("distance is invariant under rigid transforms") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Vec3 p(u(rng), u(rng), u(rng));
    const Vec3 c(u(rng), u(rng), u(rng));
    const double r = 0.2 + std::abs(u(rng));

    const Eigen::Quaterniond q =
        Eigen::Quaterniond(u(rng), u(rng), u(rng), u(rng)).normalized();
    const Vec3 shift(u(rng), u(rng), u(rng));

    const double before = signed_distance(p, Obstacle::sphere(c, r));
    const double after =
        signed_distance(q * p + shift, Obstacle::sphere(q * c + shift, r));
    CHECK(after == doctest::Approx(before).epsilon(1e-9));
  }
}

TEST_CASE("contact absent far from the obstacle") {
  const Obstacle o = Obstacle::sphere(Vec3(0, 0, 0), 1.0);
  CHECK(!contact_query(Vec3(5, 0, 0), 0.004, o).has_value());
}

TEST_CASE("contact depth equals node radius on the surface") {
  const Obstacle o = Obstacle::sphere(Vec3(0, 0, 0), 1.0);
  const auto c = contact_query(Vec3(1.0, 0, 0), 0.004, o);
  REQUIRE(c.has_value());
  CHECK(c->depth == doctest::Approx(0.004));
  CHECK(c->normal.x() == doctest::Approx(1.0));
}

TEST_CASE("contact depth from hand arithmetic") {
  const Obstacle o = Obstacle::sphere(Vec3(0, 0, 0), 1.0);
  const auto c = contact_query(Vec3(1.002, 0, 0), 0.004, o);
  REQUIRE(c.has_value());
  CHECK(c->depth == doctest::Approx(0.002));
}

TEST_CASE("contact normals are unit and depths bounded") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Obstacle sphere = Obstacle::sphere(Vec3(0, 0, 0), 1.0);
  const Obstacle box = Obstacle::box(Vec3(-1, -1, -1), Vec3(1, 1, 1));
  const double node_radius = 0.05;
  for (int i = 0; i < 500; ++i) {
    const Vec3 p(u(rng), u(rng), u(rng));
    for (const Obstacle& o : {sphere, box}) {
      const auto c = contact_query(p, node_radius, o);
      if (!c.has_value()) continue;
      CHECK(c->normal.norm() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(c->depth > 0.0);
      CHECK(c->depth <= node_radius + 2.0);  // radius + obstacle extent
    }
  }
}

TEST_CASE("box normal points out of the nearest face from inside") {
  const Obstacle o = Obstacle::box(Vec3(0, 0, 0), Vec3(2, 2, 2));
  const auto c = contact_query(Vec3(1.9, 1.0, 1.0), 0.004, o);
  REQUIRE(c.has_value());
  CHECK(c->normal.x() == doctest::Approx(1.0));
  CHECK(c->depth == doctest::Approx(0.1 + 0.004));
}

TEST_CASE("degenerate obstacles are rejected") {
  CHECK_THROWS_AS(Obstacle::sphere(Vec3(0, 0, 0), 0.0), InvalidParamsError);
  CHECK_THROWS_AS(Obstacle::box(Vec3(1, 0, 0), Vec3(0, 1, 1)),
                  InvalidParamsError);
  CHECK_THROWS_AS(Obstacle::sphere(Vec3(0, 0, 0), 1.0, -0.1),
                  InvalidParamsError);
}
