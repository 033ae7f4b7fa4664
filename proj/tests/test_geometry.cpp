// Copyright 2026 The hapsim Authors
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

#include "hapsim/error.hpp"
#include "hapsim/geometry.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hapsim;

TEST_SUITE("geometry")
{
    TEST_CASE("platform positions on the default circle")
    {
        const FlightPattern fp;
        const auto p0 = haps_position(fp, 0);
        CHECK(p0.x == doctest::Approx(3000.0));
        CHECK(p0.y == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(p0.z == 20000.0);
        const auto p3 = haps_position(fp, 3);
        CHECK(p3.x == doctest::Approx(0.0).scale(3000.0));
        CHECK(p3.y == doctest::Approx(3000.0));
        const auto p6 = haps_position(fp, 6);
        CHECK(p6.x == doctest::Approx(-3000.0));
        CHECK(p6.y == doctest::Approx(0.0).scale(3000.0));
    }

    TEST_CASE("every position lies on the circle")
    {
        const FlightPattern fp;
        for (int i = 0; i < fp.position_count; ++i)
        {
            CAPTURE(i);
            const double r = (haps_position(fp, i) - fp.center).norm();
            CHECK(std::abs(r - 3000.0) <= 3000.0 * 1e-9);
        }
    }

    TEST_CASE("run index out of range")
    {
        const FlightPattern fp;
        CHECK_THROWS_AS(haps_position(fp, -1), ConfigError);
        CHECK_THROWS_AS(haps_position(fp, 12), ConfigError);
    }

    TEST_CASE("link geometry examples")
    {
        const Point3 haps{0.0, 0.0, 20000.0};
        auto g = link_geometry({0.0, 0.0, 0.0}, haps);
        CHECK(g.elevation_deg == doctest::Approx(90.0));
        CHECK(g.slant_range_m == doctest::Approx(20000.0));

        g = link_geometry({20000.0, 0.0, 0.0}, haps);
        CHECK(g.elevation_deg == doctest::Approx(45.0));
        CHECK(g.slant_range_m == doctest::Approx(28284.2712474619));
        CHECK(g.azimuth_deg == doctest::Approx(180.0));

        g = link_geometry({60000.0, 0.0, 0.0}, haps);
        CHECK(g.elevation_deg == doctest::Approx(18.43494882292201));
        CHECK(g.slant_range_m == doctest::Approx(63245.553203367585));
    }

    TEST_CASE("coincident points are rejected")
    {
        CHECK_THROWS_AS(link_geometry({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}), GeometryError);
    }

    TEST_CASE("elevation decreases with horizontal distance")
    {
        Rng rng(11);
        for (int k = 0; k < testing::property_cases; ++k)
        {
            const double a = rng.uniform(0.0, 150000.0);
            const double b = a + rng.uniform(1.0, 50000.0);
            const double az = rng.uniform(0.0, 360.0);
            const Vec3 dir{std::cos(deg_to_rad(az)), std::sin(deg_to_rad(az)), 0.0};
            const Point3 haps{rng.uniform(-5000.0, 5000.0), rng.uniform(-5000.0, 5000.0), 20000.0};
            CAPTURE(k);
            CHECK(link_geometry(haps + dir * b - Vec3{0, 0, 20000.0}, haps).elevation_deg <
                  link_geometry(haps + dir * a - Vec3{0, 0, 20000.0}, haps).elevation_deg);
        }
    }

    TEST_CASE("slant range is symmetric")
    {
        Rng rng(12);
        for (int k = 0; k < testing::property_cases; ++k)
        {
            const Point3 a = testing::ground_point(rng, 100000.0);
            const Point3 b = testing::ground_point(rng, 10000.0) + Vec3{0.0, 0.0, rng.uniform(1.0, 30000.0)};
            const auto ab = link_geometry(a, b);
            const auto ba = link_geometry(b, a);
            CHECK(ab.slant_range_m == ba.slant_range_m);
            CHECK(ab.elevation_deg == doctest::Approx(-ba.elevation_deg));
        }
    }

    TEST_CASE("wrap_deg")
    {
        CHECK(wrap_deg(180.0) == doctest::Approx(-180.0));
        CHECK(wrap_deg(-190.0) == doctest::Approx(170.0));
        CHECK(wrap_deg(725.0) == doctest::Approx(5.0));
        CHECK(wrap_deg(-180.0) == doctest::Approx(-180.0));
    }
}
