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
#include "hapsim/antenna.hpp"
#include "hapsim/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace hapsim;

namespace
{
    Vec3 off_boresight(const PanelFrame &f, double across_deg, double up_deg)
    {
        const double a = deg_to_rad(across_deg);
        const double u = deg_to_rad(up_deg);
        return (f.boresight * (std::cos(u) * std::cos(a)) + f.horizontal * (std::cos(u) * std::sin(a)) +
                f.vertical * std::sin(u))
            .normalized();
    }

    double array_factor_db(const PanelArray &p, const SteeringWeights &w, const Vec3 &d, double carrier_hz)
    {
        const auto local = p.frame.to_local(d.normalized());
        return array_gain(p, w, d, carrier_hz) - element_gain(p.element, local.az_deg, local.el_deg);
    }

    // Direction (theta from +z, phi from +x) on a regular grid, with its solid-angle weight.
    template <class F>
    void sphere_grid(int n_theta, int n_phi, F &&f)
    {
        const double dt = std::numbers::pi / n_theta;
        const double dp = 2.0 * std::numbers::pi / n_phi;
        for (int i = 0; i < n_theta; ++i)
        {
            const double th = (i + 0.5) * dt;
            for (int j = 0; j < n_phi; ++j)
            {
                const double ph = (j + 0.5) * dp;
                f(Vec3{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)}, std::sin(th) * dt * dp);
            }
        }
    }
}

TEST_SUITE("antenna")
{
    TEST_CASE("element pattern examples")
    {
        const auto sc = ElementPattern::single_cell();
        CHECK(element_gain(sc, 0.0, 0.0) == doctest::Approx(8.0));
        CHECK(element_gain(sc, 32.5, 0.0) == doctest::Approx(5.0));
        CHECK(element_gain(ElementPattern::array_element(), 180.0, 0.0) == doctest::Approx(-25.0));
    }

    TEST_CASE("non-positive beam width is rejected")
    {
        ElementPattern p;
        p.hpbw_az_deg = 0.0;
        CHECK_THROWS_AS(element_gain(p, 0.0, 0.0), ConfigError);
        p = ElementPattern{};
        p.hpbw_el_deg = -3.0;
        CHECK_THROWS_AS(p.validate(), ConfigError);
    }

    TEST_CASE("element pattern symmetry")
    {
        Rng rng(21);
        for (int k = 0; k < testing::property_cases; ++k)
        {
            const ElementPattern p{rng.uniform(-5.0, 20.0), rng.uniform(5.0, 120.0), rng.uniform(5.0, 120.0),
                                   rng.uniform(0.0, 40.0)};
            const double a = rng.uniform(-180.0, 180.0);
            const double e = rng.uniform(-90.0, 90.0);
            CAPTURE(k);
            CHECK(element_gain(p, a, e) == element_gain(p, -a, e));
            CHECK(element_gain(p, a, e) == element_gain(p, a, -e));
            CHECK(element_gain(p, a, e) >= p.peak_gain_dbi - p.front_to_back_db);
            CHECK(element_gain(p, a, e) <= p.peak_gain_dbi);
        }
    }

    TEST_CASE("broadside array gains")
    {
        HexArrayConfig hex;
        const auto panels = hex.panels();
        const auto &bottom = panels[0];
        CHECK(bottom.copol_element_count() == 4);
        CHECK(bottom.total_element_count() == 8);
        CHECK(array_gain(bottom, broadside_weights(bottom), bottom.frame.boresight, 2.1e9) ==
              doctest::Approx(11.020599913279625));
        const auto &side = panels[1];
        CHECK(side.copol_element_count() == 8);
        CHECK(side.total_element_count() == 16);
        CHECK(array_gain(side, broadside_weights(side), side.frame.boresight, 2.1e9) ==
              doctest::Approx(14.030899869919436));
    }

    TEST_CASE("hex panel orientation")
    {
        const auto panels = HexArrayConfig{}.panels();
        CHECK(panels[0].frame.boresight.z == doctest::Approx(-1.0));
        for (int k = 1; k < 7; ++k)
        {
            CAPTURE(k);
            const auto &b = panels[k].frame.boresight;
            CHECK(rad_to_deg(std::asin(b.z)) == doctest::Approx(-23.0));
            CHECK(wrap_deg(rad_to_deg(std::atan2(b.y, b.x)) - 60.0 * (k - 1)) == doctest::Approx(0.0).scale(1.0));
        }
    }

    TEST_CASE("half-wavelength spacing at the design carrier")
    {
        const PanelArray p;
        CHECK(p.spacing_m() == doctest::Approx(0.5 * 299792458.0 / 2.1e9));
    }

    TEST_CASE("steering toward boresight gives equal phases")
    {
        const auto side = HexArrayConfig{}.panels()[3];
        const auto w = steering_weights(side, side.frame.boresight, 2.1e9);
        for (const auto &c : w.w)
        {
            CHECK(std::abs(c) == doctest::Approx(1.0 / std::sqrt(8.0)));
            CHECK(std::arg(c) == doctest::Approx(std::arg(w.w[0])).scale(1.0));
        }
        CHECK(array_gain(side, w, side.frame.boresight, 2.1e9) == doctest::Approx(14.030899869919436));
    }

    TEST_CASE("steering weights have unit norm")
    {
        Rng rng(22);
        const auto panels = HexArrayConfig{}.panels();
        for (int k = 0; k < testing::property_cases; ++k)
        {
            const auto &p = panels[static_cast<std::size_t>(k % 7)];
            const auto t = off_boresight(p.frame, rng.uniform(-60.0, 60.0), rng.uniform(-60.0, 60.0));
            const auto w = steering_weights(p, t, rng.uniform(1.5e9, 2.5e9));
            double s = 0.0;
            for (const auto &c : w.w)
                s += std::norm(c);
            CHECK(s == doctest::Approx(1.0));
        }
    }

    TEST_CASE("target behind the panel is out of coverage")
    {
        const auto bottom = HexArrayConfig{}.panels()[0];
        CHECK_THROWS_AS(steering_weights(bottom, {0.0, 0.0, 1.0}, 2.1e9), CoverageError);
    }

    TEST_CASE("weight count mismatch is rejected")
    {
        const auto side = HexArrayConfig{}.panels()[1];
        const auto bottom = HexArrayConfig{}.panels()[0];
        CHECK_THROWS_AS(array_gain(side, broadside_weights(bottom), side.frame.boresight, 2.1e9), ConfigError);
    }

    // Conjugate-phase weights put the array-factor peak on the target. The element pattern is
    // fixed to the panel, so the combined gain peaks on the target only when it is the boresight.
    TEST_CASE("steered array factor peaks on the target")
    {
        Rng rng(23);
        const auto panels = HexArrayConfig{}.panels();
        for (int k = 0; k < 24; ++k)
        {
            const auto &p = panels[static_cast<std::size_t>(k % 7)];
            const auto t = off_boresight(p.frame, rng.uniform(-45.0, 45.0), rng.uniform(-45.0, 45.0));
            const auto w = steering_weights(p, t, 2.1e9);
            const double at_target = array_factor_db(p, w, t, 2.1e9);
            double worst = -1e9;
            sphere_grid(90, 180, [&](const Vec3 &d, double) { worst = std::max(worst, array_factor_db(p, w, d, 2.1e9)); });
            CAPTURE(k);
            CHECK(worst <= at_target + 0.01);
        }
    }

    TEST_CASE("broadside gain is the global maximum")
    {
        for (const auto &p : HexArrayConfig{}.panels())
        {
            const auto w = steering_weights(p, p.frame.boresight, 2.1e9);
            const double peak = array_gain(p, w, p.frame.boresight, 2.1e9);
            double worst = -1e9;
            sphere_grid(90, 180, [&](const Vec3 &d, double) { worst = std::max(worst, array_gain(p, w, d, 2.1e9)); });
            CHECK(worst <= peak + 0.01);
        }
    }

    TEST_CASE("array does not create energy")
    {
        Rng rng(24);
        const auto panels = HexArrayConfig{}.panels();
        for (int k = 0; k < 7; ++k)
        {
            const auto &p = panels[static_cast<std::size_t>(k)];
            const auto t = off_boresight(p.frame, rng.uniform(-40.0, 40.0), rng.uniform(-40.0, 40.0));
            const auto w = steering_weights(p, t, 2.1e9);
            double arr = 0.0, elem = 0.0;
            sphere_grid(120, 240, [&](const Vec3 &d, double dw) {
                arr += std::pow(10.0, array_gain(p, w, d, 2.1e9) / 10.0) * dw;
                const auto l = p.frame.to_local(d);
                elem += std::pow(10.0, element_gain(p.element, l.az_deg, l.el_deg) / 10.0) * dw;
            });
            CAPTURE(k);
            CHECK(arr <= elem * p.copol_element_count());
        }
    }

    TEST_CASE("back-lobe bound")
    {
        const auto panels = HexArrayConfig{}.panels();
        Rng rng(25);
        int checked = 0;
        for (int k = 0; k < 20 * testing::property_cases; ++k)
        {
            const auto &p = panels[static_cast<std::size_t>(k % 7)];
            const auto w = steering_weights(p, off_boresight(p.frame, rng.uniform(-30.0, 30.0), 0.0), 2.1e9);
            const Vec3 d = testing::unit_vector(rng);
            const auto local = p.frame.to_local(d);
            const double floor_db = p.element.peak_gain_dbi - p.element.front_to_back_db;
            if (element_gain(p.element, local.az_deg, local.el_deg) > floor_db)
                continue;
            ++checked;
            CHECK(array_gain(p, w, d, 2.1e9) <= floor_db + 10.0 * std::log10(p.copol_element_count()) + 1e-9);
        }
        CHECK(checked > 500);
    }

    TEST_CASE("CPE gain examples")
    {
        LinkGeometry g{0.0, 40.0, 1000.0};
        CHECK(cpe_gain(40.0, g) == doctest::Approx(12.0));
        g.elevation_deg = 30.0;
        CHECK(cpe_gain(40.0, g) == doctest::Approx(9.0));
        // 12 (90 / 60)^2 = 27 dB stays above the 30 dB floor.
        g.elevation_deg = 90.0;
        CHECK(cpe_gain(40.0, g) == doctest::Approx(-15.0));
        g = LinkGeometry{0.0, 220.0, 1000.0};
        CHECK(cpe_gain(40.0, g) == doctest::Approx(-18.0));
    }

    TEST_CASE("CPE azimuth wraps")
    {
        const LinkGeometry g{10.0, 355.0, 1000.0};
        CHECK(cpe_gain(5.0, g) == doctest::Approx(cpe_gain(345.0, g)));
    }

    TEST_CASE("single-cell antenna")
    {
        const auto p = single_cell_antenna();
        CHECK(array_gain(p, broadside_weights(p), {0.0, 0.0, -1.0}, 2.1e9) == doctest::Approx(8.0));
        const Vec3 d{std::sin(deg_to_rad(32.5)), 0.0, -std::cos(deg_to_rad(32.5))};
        CHECK(array_gain(p, broadside_weights(p), d, 2.1e9) == doctest::Approx(5.0));
    }
}
