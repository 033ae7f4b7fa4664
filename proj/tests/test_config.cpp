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
#include "hapsim/config.hpp"
#include "hapsim/error.hpp"
#include "hapsim/text.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>
#include <sstream>
#include <string>

using namespace hapsim;

namespace
{
    std::string error_of(const std::string &text)
    {
        try
        {
            parse_config_string(text);
        }
        catch (const std::exception &e)
        {
            return e.what();
        }
        return {};
    }
}

TEST_SUITE("config")
{
    TEST_CASE("empty file gives the single-cell bent-pipe defaults")
    {
        const auto cfg = parse_config_string("");
        CHECK(dump_config(cfg) == dump_config(ScenarioConfig{}));
        CHECK(cfg.layout == LayoutMode::single_cell);
        CHECK(cfg.arch.architecture == Architecture::bent_pipe);
        CHECK(cfg.terminal_count == 20);
        CHECK(cfg.target_los == 17);
        CHECK(cfg.service_radius_m == 60000.0);
        CHECK(cfg.flight.center.z == 20000.0);
        CHECK(cfg.flight.diameter_m == 6000.0);
        CHECK(cfg.gateway == Point3{45000.0, 0.0, 0.0});
        CHECK(cfg.feeder_carrier_hz == 3.65e9);
        CHECK(cfg.dl_carrier_hz == 2.1e9);
        CHECK(cfg.dl_bandwidth_hz == 20e6);
        CHECK(cfg.ul_carrier_hz == 1.8e9);
        CHECK(cfg.ul_block_count() == 1);
        CHECK(cfg.ul_tti_count() == 1000);
        CHECK(cfg.ue_tx_power_dbm == 23.0);
        CHECK(cfg.arch.repeater.gain_db == 105.0);
        CHECK(cfg.arch.gateway_antenna_gain_dbi == 32.3);
        CHECK_FALSE(cfg.arch.repeater.limit_output);
        CHECK_FALSE(cfg.arch.model_repeater_noise);
    }

    TEST_CASE("comments and blank lines are ignored")
    {
        const auto cfg = parse_config_string("# scenario\n\n  seed = 9   # trailing\narchitecture=rg\n");
        CHECK(cfg.seed == 9);
        CHECK(cfg.arch.architecture == Architecture::regenerative);
    }

    TEST_CASE("layout selects layout defaults wherever it appears")
    {
        const auto cfg = parse_config_string("seed = 3\nlayout = seven_cell\n");
        CHECK(cfg.terminal_count == 210);
        CHECK(cfg.target_los == 175);
        CHECK(cfg.service_radius_m == 100000.0);
        const auto own = parse_config_string("terminal_count = 50\nlayout = seven_cell\ntarget_los = none\n");
        CHECK(own.terminal_count == 50);
        CHECK_FALSE(own.target_los);
    }

    TEST_CASE("invalid architecture names the field")
    {
        const auto e = error_of("architecture = XX\n");
        CHECK(e.find("architecture") != std::string::npos);
        CHECK(e.find("XX") != std::string::npos);
        CHECK_THROWS_AS(parse_config_string("architecture = XX\n"), ConfigError);
    }

    TEST_CASE("syntax errors carry line and column")
    {
        try
        {
            parse_config_string("seed = 1\n\n   bogus_key = 4\n");
            FAIL("expected a parse error");
        }
        catch (const ParseError &e)
        {
            CHECK(e.line() == 3);
            CHECK(e.column() == 4);
        }
        CHECK_THROWS_AS(parse_config_string("seed 1\n"), ParseError);
        CHECK_THROWS_AS(parse_config_string(" = 1\n"), ParseError);
        CHECK_THROWS_AS(parse_config_string("seed = 1\nseed = 2\n"), ParseError);
    }

    TEST_CASE("validation rejects impossible values")
    {
        const char *bad[] = {
            "antenna.element.hpbw_az_deg = 0\n",
            "antenna.cpe.hpbw_el_deg = -5\n",
            "terminal_count = 0\n",
            "target_los = 21\n",
            "dl.bandwidth_hz = -1\n",
            "ue.noise_figure_db = -1\n",
            "haps.angular_step_deg = 20\n",
            "gateway.z_m = 25000\n",
            "ul.block_bandwidth_hz = 300000\n",
            "ul.tti_s = 0.0007\n",
            "layout = seven_cell\nouter_center_fraction = 1.5\n",
            "link.dl.attenuation = 0\n",
            "link.ul.se_max = -2\n",
            "consumption.bs_mixer.efficiency = 0\n",
            "threads = 0\n",
            "seed = -4\n",
            "seed = 12abc\n",
            "repeater.limit_output = yes\n",
        };
        for (const char *text : bad)
        {
            CAPTURE(text);
            CHECK_THROWS_AS(parse_config_string(text), ConfigError);
        }
        CHECK(error_of("link.ul.se_max = -2\n").find("link.ul.se_max") != std::string::npos);
    }

    TEST_CASE("outer center fraction accepts auto or a number")
    {
        auto cfg = parse_config_string("layout = seven_cell\nouter_center_fraction = auto\n");
        CHECK_FALSE(cfg.outer_center_fraction);
        cfg = parse_config_string("layout = seven_cell\nouter_center_fraction = 0.6666666666666666\n");
        REQUIRE(cfg.outer_center_fraction);
        CHECK(*cfg.outer_center_fraction == 0.6666666666666666);
        CHECK(dump_config(cfg).find("outer_center_fraction = 0.6666666666666666\n") != std::string::npos);
    }

    TEST_CASE("canonical form round trips")
    {
        for (const auto &name : preset_names())
        {
            const auto cfg = preset(name);
            const auto once = dump_config(cfg);
            const auto twice = dump_config(parse_config_string(once));
            CAPTURE(name);
            CHECK(once == twice);
        }
    }

    TEST_CASE("canonicalization is idempotent for random configs")
    {
        Rng rng(71);
        for (int k = 0; k < 50; ++k)
        {
            std::ostringstream text;
            text << "seed = " << rng.next_u64() << '\n'
                 << "architecture = " << (rng.bernoulli(0.5) ? "bp" : "rg") << '\n'
                 << "ue.tx_power_dbm = " << text::format_double(rng.uniform(0.0, 30.0)) << '\n'
                 << "repeater.gain_db = " << text::format_double(rng.uniform(90.0, 120.0)) << '\n'
                 << "link.dl.attenuation = " << text::format_double(rng.uniform(0.1, 1.0)) << '\n'
                 << "antenna.side_downtilt_deg = " << text::format_double(rng.uniform(5.0, 60.0)) << '\n'
                 << "gateway.antenna_gain_dbi = " << rng.uniform(20.0, 40.0) << '\n';
            const auto canonical = dump_config(parse_config_string(text.str()));
            CHECK(dump_config(parse_config_string(canonical)) == canonical);
        }
    }

    TEST_CASE("every key appears once in the canonical form")
    {
        const auto keys = config_keys();
        const std::set<std::string> unique(keys.begin(), keys.end());
        CHECK(unique.size() == keys.size());
        const auto dump = dump_config(ScenarioConfig{});
        for (const auto &k : keys)
            CHECK(dump.find(k + " = ") != std::string::npos);
    }

    TEST_CASE("missing config file")
    {
        CHECK_THROWS_AS(load_config("/nonexistent/scenario.cfg"), ConfigError);
    }

    TEST_CASE("presets")
    {
        CHECK(preset_names().size() == 10);
        CHECK(preset_group("all").size() == 10);
        CHECK(preset_group("single-cell").size() == 2);
        CHECK(preset_group("multi-cell").size() == 8);
        CHECK(preset_group("single-cell-bp").empty());
        const auto p = preset("multi-cell-rg-selection-cpe");
        CHECK(p.layout == LayoutMode::seven_cell);
        CHECK(p.arch.architecture == Architecture::regenerative);
        CHECK(p.attachment == AttachmentMode::beam_selection);
        CHECK(p.terminal_kind == TerminalKind::cpe_directional);
        CHECK_THROWS_AS(preset("multi-cell-xx-selection-cpe"), ConfigError);
        CHECK_THROWS_AS(preset("nope"), ConfigError);
    }

    TEST_CASE("number formatting round trips")
    {
        Rng rng(72);
        for (int k = 0; k < 1000; ++k)
        {
            const double v = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.uniform(-60.0, 60.0)));
            double back = 0.0;
            REQUIRE(text::parse_double(text::format_double(v), back));
            CHECK(back == v);
        }
        CHECK(text::format_double(3650000000.0) == "3650000000");
        CHECK(text::format_double(0.001) == "0.001");
        double d;
        CHECK_FALSE(text::parse_double("1.5x", d));
        CHECK_FALSE(text::parse_double("", d));
    }
}
