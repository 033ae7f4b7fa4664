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
#include "hapsim/channel.hpp"
#include "hapsim/error.hpp"
#include "hapsim/simulation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace hapsim;

TEST_SUITE("channel")
{
    TEST_CASE("free-space path loss examples")
    {
        CHECK(fspl_db(3.65e9, 50000.0) == doctest::Approx(137.67304059773326).epsilon(1e-12));
        CHECK(fspl_db(2.1e9, 20000.0) == doctest::Approx(124.91276902984139).epsilon(1e-12));
        CHECK(fspl_db(1.8e9, 20000.0) == doctest::Approx(123.57383323722912).epsilon(1e-12));
        CHECK(fspl_db(2.1e9, 40000.0) - fspl_db(2.1e9, 20000.0) == doctest::Approx(6.0205999132796239));
    }

    TEST_CASE("free-space path loss domain")
    {
        CHECK_THROWS_AS(fspl_db(0.0, 1000.0), DomainError);
        CHECK_THROWS_AS(fspl_db(2e9, 0.0), DomainError);
        CHECK_THROWS_AS(fspl_db(2e9, -5.0), DomainError);
    }

    TEST_CASE("free-space path loss is increasing in both arguments")
    {
        Rng rng(31);
        for (int k = 0; k < testing::property_cases; ++k)
        {
            const double f = rng.uniform(1e8, 1e11);
            const double d = rng.uniform(1.0, 2e5);
            const double s = 1.0 + rng.uniform(1e-6, 1.0);
            CHECK(fspl_db(f * s, d) > fspl_db(f, d));
            CHECK(fspl_db(f, d * s) > fspl_db(f, d));
        }
    }

    TEST_CASE("feeder loss examples")
    {
        const Point3 gw{45000.0, 0.0, 0.0};
        // sqrt(42000^2 + 20000^2) = 46 518.8 m
        CHECK(feeder_loss_db({3000.0, 0.0, 20000.0}, gw) == doctest::Approx(137.0462130753582).epsilon(1e-12));
        CHECK(feeder_loss_db({-3000.0, 0.0, 20000.0}, gw) == doctest::Approx(138.01370738370883).epsilon(1e-12));
        CHECK(feeder_loss_db({45000.0, 0.0, 20000.0}, gw) == doctest::Approx(fspl_db(3.65e9, 20000.0)));
    }

    TEST_CASE("feeder loss stays within 1 dB of the circle-center value")
    {
        const FlightPattern fp;
        const Point3 gw{45000.0, 0.0, 0.0};
        const double center = feeder_loss_db(fp.center, gw);
        CHECK(center == doctest::Approx(137.54075794039568));
        double lo = 1e9, hi = -1e9;
        for (int i = 0; i < fp.position_count; ++i)
        {
            const double fl = feeder_loss_db(haps_position(fp, i), gw);
            lo = std::min(lo, fl);
            hi = std::max(hi, fl);
            CHECK(std::abs(fl - center) <= 1.0);
        }
        CHECK(lo == doctest::Approx(137.0462130753582));
        CHECK(hi == doctest::Approx(138.01370738370883));
    }

    TEST_CASE("nearest-bin lookup")
    {
        const auto t = NtnTables::rural_default();
        CHECK(t.lookup(10.0).elevation_deg == 10.0);
        CHECK(t.lookup(14.9).elevation_deg == 10.0);
        CHECK(t.lookup(15.0).elevation_deg == 20.0);
        CHECK(t.lookup(88.0).elevation_deg == 90.0);
        CHECK(t.lookup(3.0).elevation_deg == 10.0);
        CHECK_FALSE(t.in_range(3.0));
        CHECK(t.in_range(45.0));
    }

    TEST_CASE("shipped table file matches the built-in table")
    {
        const auto file = NtnTables::load(HAPSIM_TEST_DATA_DIR "/ntn_rural_sband.csv");
        const auto builtin = NtnTables::rural_default();
        REQUIRE(file.bins().size() == builtin.bins().size());
        for (std::size_t i = 0; i < file.bins().size(); ++i)
        {
            const auto &a = file.bins()[i];
            const auto &b = builtin.bins()[i];
            CHECK(a.elevation_deg == b.elevation_deg);
            CHECK(a.los_probability == b.los_probability);
            CHECK(a.shadow_std_los_db == b.shadow_std_los_db);
            CHECK(a.shadow_std_nlos_db == b.shadow_std_nlos_db);
            CHECK(a.clutter_loss_nlos_db == b.clutter_loss_nlos_db);
        }
    }

    TEST_CASE("table parse errors carry a position")
    {
        std::istringstream bad_header("elevation_deg,los,shadow_std_los_db,shadow_std_nlos_db,clutter_loss_nlos_db\n");
        CHECK_THROWS_AS(NtnTables::parse(bad_header), ParseError);

        std::istringstream bad_value("# c\nelevation_deg,los_probability,shadow_std_los_db,shadow_std_nlos_db,"
                                     "clutter_loss_nlos_db\n10,0.5,1,x,2\n");
        try
        {
            NtnTables::parse(bad_value);
            FAIL("expected a parse error");
        }
        catch (const ParseError &e)
        {
            CHECK(e.line() == 3);
            CHECK(e.column() == 10);
        }

        std::istringstream empty("");
        CHECK_THROWS_AS(NtnTables::parse(empty), ParseError);
        CHECK_THROWS_AS(NtnTables::load("/nonexistent/table.csv"), ConfigError);
    }

    TEST_CASE("invalid bins are rejected")
    {
        CHECK_THROWS_AS(NtnTables({}), ConfigError);
        CHECK_THROWS_AS(NtnTables({{10.0, 1.2, 1.0, 1.0, 1.0}}), ConfigError);
        CHECK_THROWS_AS(NtnTables({{10.0, 0.5, 1.0, 1.0, -1.0}}), ConfigError);
        CHECK_THROWS_AS(NtnTables({{10.0, 0.5, 1.0, 1.0, 1.0}, {10.0, 0.6, 1.0, 1.0, 1.0}}), ConfigError);
        CHECK_THROWS_AS(NtnTables({{10.0, 0.9, 1.0, 1.0, 1.0}, {20.0, 0.6, 1.0, 1.0, 1.0}}), ConfigError);
    }

    TEST_CASE("certain LOS bin always draws LOS")
    {
        const NtnTables t({{10.0, 1.0, 0.0, 0.0, 0.0}, {90.0, 1.0, 0.0, 0.0, 0.0}});
        Rng rng(32);
        for (int k = 0; k < 1000; ++k)
            CHECK(assign_los(rng.uniform(10.0, 90.0), t, rng) == LosState::los);
    }

    TEST_CASE("access path loss examples")
    {
        const auto t = NtnTables::rural_default();
        const LinkGeometry nadir{90.0, 0.0, 20000.0};
        const auto los = access_path_loss(2.1e9, nadir, LosState::los, t, 0.0);
        CHECK(los.total_db == doctest::Approx(124.91276902984139));
        CHECK(los.clutter_db == 0.0);

        const NtnTables no_clutter({{90.0, 0.5, 1.0, 1.0, 0.0}});
        CHECK(access_path_loss(2.1e9, nadir, LosState::nlos, no_clutter, 0.0).total_db ==
              access_path_loss(2.1e9, nadir, LosState::los, no_clutter, 0.0).total_db);

        const auto nlos = access_path_loss(2.1e9, nadir, LosState::nlos, t, 1.5);
        CHECK(nlos.total_db == doctest::Approx(124.91276902984139 + 16.30 + 1.5));
    }

    TEST_CASE("LOS loss never exceeds NLOS loss")
    {
        const auto t = NtnTables::rural_default();
        Rng rng(33);
        for (int k = 0; k < testing::property_cases; ++k)
        {
            const LinkGeometry g{rng.uniform(5.0, 90.0), rng.uniform(0.0, 360.0), rng.uniform(20000.0, 110000.0)};
            const double f = rng.uniform(1e9, 4e9);
            CHECK(access_path_loss(f, g, LosState::los, t, 0.0).total_db <=
                  access_path_loss(f, g, LosState::nlos, t, 0.0).total_db);
        }
    }

    TEST_CASE("default drops match the LOS targets")
    {
        const auto single = prepare_campaign(ScenarioConfig{});
        CHECK(single.terminals.size() == 20);
        CHECK(std::count_if(single.terminals.begin(), single.terminals.end(),
                            [](const Terminal &t) { return t.los == LosState::los; }) == 17);

        const auto multi = prepare_campaign(preset("multi-cell-bp-steering-ue"));
        CHECK(multi.terminals.size() == 210);
        CHECK(std::count_if(multi.terminals.begin(), multi.terminals.end(),
                            [](const Terminal &t) { return t.los == LosState::los; }) == 175);
    }

    TEST_CASE("default access losses lie in the 121..200 dB range")
    {
        for (const auto &name : preset_names())
        {
            const auto c = prepare_campaign(preset(name));
            for (int run = 0; run < c.config.flight.position_count; ++run)
            {
                const auto links = compute_links(c, make_haps_state(c.config, c.layout, run));
                for (const auto &l : links)
                {
                    CAPTURE(name);
                    CHECK(l.dl_loss.total_db >= 121.0);
                    CHECK(l.dl_loss.total_db <= 200.0);
                    CHECK(l.ul_loss.total_db >= 121.0);
                    CHECK(l.ul_loss.total_db <= 200.0);
                }
            }
        }
    }

    TEST_CASE("loss map is reproducible")
    {
        const auto a = prepare_campaign(preset("multi-cell-rg-selection-cpe"));
        const auto b = prepare_campaign(preset("multi-cell-rg-selection-cpe"));
        const auto la = compute_links(a, make_haps_state(a.config, a.layout, 5));
        const auto lb = compute_links(b, make_haps_state(b.config, b.layout, 5));
        REQUIRE(la.size() == lb.size());
        for (std::size_t i = 0; i < la.size(); ++i)
        {
            CHECK(la[i].dl_loss.total_db == lb[i].dl_loss.total_db);
            CHECK(la[i].ul_loss.total_db == lb[i].ul_loss.total_db);
        }
    }
}
