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

#include <cmath>
#include <fstream>
#include <limits>
#include <functional>
#include <map>
#include <sstream>

namespace
{
    using hapsim::ConfigError;
    using hapsim::ScenarioConfig;
    namespace text = hapsim::text;

    struct Field
    {
        std::string key;
        std::function<std::string(const ScenarioConfig &)> get;
        std::function<void(ScenarioConfig &, std::string_view)> set;
    };

    [[noreturn]] void bad_value(const std::string &key, std::string_view value, const std::string &expected)
    {
        throw ConfigError(key + ": invalid value '" + std::string(value) + "', expected " + expected + ".");
    }

    double to_double(const std::string &key, std::string_view v)
    {
        double d;
        if (!text::parse_double(v, d) || !std::isfinite(d))
            bad_value(key, v, "a finite number");
        return d;
    }

    int to_int(const std::string &key, std::string_view v)
    {
        long long i;
        if (!text::parse_int64(v, i) || i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max())
            bad_value(key, v, "an integer");
        return static_cast<int>(i);
    }

    bool to_bool(const std::string &key, std::string_view v)
    {
        if (v == "true")
            return true;
        if (v == "false")
            return false;
        bad_value(key, v, "true or false");
    }

    // Fields reached through a lambda returning a reference (nested members).
    template <class Ref>
    Field number_ref(std::string key, Ref ref)
    {
        return {key, [ref](const ScenarioConfig &c) { return text::format_double(ref(const_cast<ScenarioConfig &>(c))); },
                [ref, key](ScenarioConfig &c, std::string_view v) { ref(c) = to_double(key, v); }};
    }

    template <class Ref>
    Field integer_ref(std::string key, Ref ref)
    {
        return {key, [ref](const ScenarioConfig &c) { return std::to_string(ref(const_cast<ScenarioConfig &>(c))); },
                [ref, key](ScenarioConfig &c, std::string_view v) { ref(c) = to_int(key, v); }};
    }

    template <class Ref>
    Field boolean_ref(std::string key, Ref ref)
    {
        return {key, [ref](const ScenarioConfig &c) { return std::string(ref(const_cast<ScenarioConfig &>(c)) ? "true" : "false"); },
                [ref, key](ScenarioConfig &c, std::string_view v) { ref(c) = to_bool(key, v); }};
    }

    template <class E, class Get, class Set>
    Field enumeration(std::string key, std::string expected, std::optional<E> (*parse)(std::string_view), Get get,
                      Set set)
    {
        return {key, [get](const ScenarioConfig &c) { return to_string(get(c)); },
                [key, expected, parse, set](ScenarioConfig &c, std::string_view v)
                {
                    const auto parsed = parse(v);
                    if (!parsed)
                        bad_value(key, v, expected);
                    set(c, *parsed);
                }};
    }

    void add_pattern(std::vector<Field> &f, const std::string &prefix,
                     hapsim::ElementPattern &(*pick)(ScenarioConfig &))
    {
        f.push_back(number_ref(prefix + ".peak_gain_dbi", [pick](ScenarioConfig &c) -> double & { return pick(c).peak_gain_dbi; }));
        f.push_back(number_ref(prefix + ".hpbw_az_deg", [pick](ScenarioConfig &c) -> double & { return pick(c).hpbw_az_deg; }));
        f.push_back(number_ref(prefix + ".hpbw_el_deg", [pick](ScenarioConfig &c) -> double & { return pick(c).hpbw_el_deg; }));
        f.push_back(number_ref(prefix + ".front_to_back_db", [pick](ScenarioConfig &c) -> double & { return pick(c).front_to_back_db; }));
    }

    void add_stage(std::vector<Field> &f, const std::string &prefix,
                   hapsim::EfficiencyStage &(*pick)(ScenarioConfig &))
    {
        f.push_back(number_ref(prefix + ".gain", [pick](ScenarioConfig &c) -> double & { return pick(c).gain; }));
        f.push_back(number_ref(prefix + ".efficiency", [pick](ScenarioConfig &c) -> double & { return pick(c).efficiency; }));
    }

#define REF(expr) [](ScenarioConfig &c) -> auto & { return expr; }

    const std::vector<Field> &fields()
    {
        static const std::vector<Field> f = []
        {
            std::vector<Field> f;
            f.push_back({"name", [](const ScenarioConfig &c) { return c.name; },
                         [](ScenarioConfig &c, std::string_view v)
                         {
                             if (v.empty())
                                 bad_value("name", v, "a non-empty name");
                             c.name = std::string(v);
                         }});
            f.push_back(enumeration(
                "layout", "single or seven_cell", &hapsim::parse_layout, [](const ScenarioConfig &c) { return c.layout; },
                [](ScenarioConfig &c, hapsim::LayoutMode m) { c.layout = m; }));
            f.push_back(enumeration(
                "architecture", "bp or rg", &hapsim::parse_architecture,
                [](const ScenarioConfig &c) { return c.arch.architecture; },
                [](ScenarioConfig &c, hapsim::Architecture a) { c.arch.architecture = a; }));
            f.push_back(enumeration(
                "terminal_kind", "ue or cpe", &hapsim::parse_terminal_kind,
                [](const ScenarioConfig &c) { return c.terminal_kind; },
                [](ScenarioConfig &c, hapsim::TerminalKind k) { c.terminal_kind = k; }));
            f.push_back(enumeration(
                "attachment", "steering or selection", &hapsim::parse_attachment,
                [](const ScenarioConfig &c) { return c.attachment; },
                [](ScenarioConfig &c, hapsim::AttachmentMode m) { c.attachment = m; }));
            f.push_back(integer_ref("terminal_count", REF(c.terminal_count)));
            f.push_back({"target_los",
                         [](const ScenarioConfig &c) { return c.target_los ? std::to_string(*c.target_los) : std::string("none"); },
                         [](ScenarioConfig &c, std::string_view v)
                         {
                             if (v == "none")
                                 c.target_los.reset();
                             else
                                 c.target_los = to_int("target_los", v);
                         }});
            f.push_back({"seed", [](const ScenarioConfig &c) { return std::to_string(c.seed); },
                         [](ScenarioConfig &c, std::string_view v)
                         {
                             unsigned long long s;
                             if (!text::parse_uint64(v, s))
                                 bad_value("seed", v, "an unsigned 64-bit integer");
                             c.seed = s;
                         }});
            f.push_back(integer_ref("threads", REF(c.threads)));
            f.push_back(number_ref("service_radius_m", REF(c.service_radius_m)));
            f.push_back({"outer_center_fraction",
                         [](const ScenarioConfig &c)
                         { return c.outer_center_fraction ? text::format_double(*c.outer_center_fraction) : std::string("auto"); },
                         [](ScenarioConfig &c, std::string_view v)
                         {
                             if (v == "auto")
                                 c.outer_center_fraction.reset();
                             else
                                 c.outer_center_fraction = to_double("outer_center_fraction", v);
                         }});

            f.push_back(number_ref("haps.center_x_m", REF(c.flight.center.x)));
            f.push_back(number_ref("haps.center_y_m", REF(c.flight.center.y)));
            f.push_back(number_ref("haps.altitude_m", REF(c.flight.center.z)));
            f.push_back(number_ref("haps.flight_diameter_m", REF(c.flight.diameter_m)));
            f.push_back(integer_ref("haps.position_count", REF(c.flight.position_count)));
            f.push_back(number_ref("haps.angular_step_deg", REF(c.flight.angular_step_deg)));
            f.push_back(number_ref("haps.speed_kmh", REF(c.flight.speed_kmh)));

            f.push_back(number_ref("gateway.x_m", REF(c.gateway.x)));
            f.push_back(number_ref("gateway.y_m", REF(c.gateway.y)));
            f.push_back(number_ref("gateway.z_m", REF(c.gateway.z)));
            f.push_back(number_ref("gateway.tx_power_dbm", REF(c.arch.gateway_tx_power_dbm)));
            f.push_back(number_ref("gateway.antenna_gain_dbi", REF(c.arch.gateway_antenna_gain_dbi)));
            f.push_back(number_ref("gateway.noise_figure_db", REF(c.arch.gateway_noise_figure_db)));
            f.push_back(number_ref("feeder.carrier_hz", REF(c.feeder_carrier_hz)));

            f.push_back(number_ref("repeater.gain_db", REF(c.arch.repeater.gain_db)));
            f.push_back(number_ref("repeater.noise_figure_db", REF(c.arch.repeater.noise_figure_db)));
            f.push_back(number_ref("repeater.max_output_power_dbm", REF(c.arch.repeater.max_output_power_dbm)));
            f.push_back(boolean_ref("repeater.limit_output", REF(c.arch.repeater.limit_output)));
            f.push_back(boolean_ref("repeater.model_noise", REF(c.arch.model_repeater_noise)));

            f.push_back(number_ref("bs.tx_power_dbm", REF(c.arch.bs_tx_power_dbm)));
            f.push_back(number_ref("bs.noise_figure_db", REF(c.arch.bs_noise_figure_db)));

            f.push_back(number_ref("dl.carrier_hz", REF(c.dl_carrier_hz)));
            f.push_back(number_ref("dl.bandwidth_hz", REF(c.dl_bandwidth_hz)));
            f.push_back(number_ref("ul.carrier_hz", REF(c.ul_carrier_hz)));
            f.push_back(number_ref("ul.bandwidth_hz", REF(c.ul_bandwidth_hz)));
            f.push_back(number_ref("ul.block_bandwidth_hz", REF(c.ul_block_bandwidth_hz)));
            f.push_back(number_ref("ul.tti_s", REF(c.ul_tti_s)));
            f.push_back(number_ref("ue.tx_power_dbm", REF(c.ue_tx_power_dbm)));
            f.push_back(number_ref("ue.noise_figure_db", REF(c.ue_noise_figure_db)));

            add_pattern(f, "antenna.single_cell", +[](ScenarioConfig &c) -> hapsim::ElementPattern & { return c.single_cell_pattern; });
            add_pattern(f, "antenna.element", +[](ScenarioConfig &c) -> hapsim::ElementPattern & { return c.hex.element; });
            add_pattern(f, "antenna.cpe", +[](ScenarioConfig &c) -> hapsim::ElementPattern & { return c.cpe_pattern; });
            f.push_back(integer_ref("antenna.bottom_rows", REF(c.hex.bottom_rows)));
            f.push_back(integer_ref("antenna.bottom_cols", REF(c.hex.bottom_cols)));
            f.push_back(integer_ref("antenna.side_rows", REF(c.hex.side_rows)));
            f.push_back(integer_ref("antenna.side_cols", REF(c.hex.side_cols)));
            f.push_back(integer_ref("antenna.polarizations", REF(c.hex.polarizations)));
            f.push_back(number_ref("antenna.spacing_wavelengths", REF(c.hex.spacing_wavelengths)));
            f.push_back(number_ref("antenna.design_carrier_hz", REF(c.hex.design_carrier_hz)));
            f.push_back(number_ref("antenna.side_downtilt_deg", REF(c.hex.side_downtilt_deg)));
            f.push_back(number_ref("antenna.azimuth_offset_deg", REF(c.hex.azimuth_offset_deg)));

            f.push_back(number_ref("link.dl.attenuation", REF(c.dl_link.attenuation)));
            f.push_back(number_ref("link.dl.sinr_min_db", REF(c.dl_link.sinr_min_db)));
            f.push_back(number_ref("link.dl.se_max", REF(c.dl_link.se_max)));
            f.push_back(number_ref("link.ul.attenuation", REF(c.ul_link.attenuation)));
            f.push_back(number_ref("link.ul.sinr_min_db", REF(c.ul_link.sinr_min_db)));
            f.push_back(number_ref("link.ul.se_max", REF(c.ul_link.se_max)));

            f.push_back({"ntn_table", [](const ScenarioConfig &c) { return c.ntn_table; },
                         [](ScenarioConfig &c, std::string_view v) { c.ntn_table = std::string(v); }});
            f.push_back({"output_dir", [](const ScenarioConfig &c) { return c.output_dir; },
                         [](ScenarioConfig &c, std::string_view v)
                         {
                             if (v.empty())
                                 bad_value("output_dir", v, "a directory path");
                             c.output_dir = std::string(v);
                         }});

            add_stage(f, "consumption.repeater_mixer", +[](ScenarioConfig &c) -> hapsim::EfficiencyStage & { return c.chains.repeater_mixer; });
            add_stage(f, "consumption.repeater_amplifier", +[](ScenarioConfig &c) -> hapsim::EfficiencyStage & { return c.chains.repeater_amplifier; });
            add_stage(f, "consumption.bs_baseband_amp", +[](ScenarioConfig &c) -> hapsim::EfficiencyStage & { return c.chains.bs_baseband_amp; });
            add_stage(f, "consumption.bs_mixer", +[](ScenarioConfig &c) -> hapsim::EfficiencyStage & { return c.chains.bs_mixer; });
            add_stage(f, "consumption.bs_rf_amp", +[](ScenarioConfig &c) -> hapsim::EfficiencyStage & { return c.chains.bs_rf_amp; });
            f.push_back(number_ref("consumption.g_rx_relay", REF(c.chains.g_rx_relay)));
            f.push_back(number_ref("consumption.g_rx_sink", REF(c.chains.g_rx_sink)));
            f.push_back(number_ref("consumption.sweep_max_distance_m", REF(c.sweep_max_distance_m)));
            f.push_back(number_ref("consumption.sweep_step_m", REF(c.sweep_step_m)));
            return f;
        }();
        return f;
    }

#undef REF

    const Field *find_field(std::string_view key)
    {
        for (const auto &f : fields())
            if (f.key == key)
                return &f;
        return nullptr;
    }
}

hapsim::ScenarioConfig hapsim::parse_config(std::istream &in, const std::string &source)
{
    struct Entry
    {
        std::string key;
        std::string value;
        int line;
        int value_column;
    };
    std::vector<Entry> entries;
    std::map<std::string, int> seen;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        if (text::trim(body).empty())
            continue;

        const auto eq = body.find('=');
        const int key_col = static_cast<int>(body.find_first_not_of(" \t")) + 1;
        if (eq == std::string_view::npos)
            throw ParseError(source + ": expected 'key = value'", line_no, key_col);
        const auto key = text::trim(body.substr(0, eq));
        if (key.empty())
            throw ParseError(source + ": missing key before '='", line_no, static_cast<int>(eq) + 1);
        if (find_field(key) == nullptr)
            throw ParseError(source + ": unknown key '" + std::string(key) + "'", line_no, key_col);
        if (const auto it = seen.find(std::string(key)); it != seen.end())
            throw ParseError(source + ": key '" + std::string(key) + "' repeats line " + std::to_string(it->second),
                             line_no, key_col);
        seen.emplace(std::string(key), line_no);

        const auto raw_value = body.substr(eq + 1);
        const auto value = text::trim(raw_value);
        const auto value_col = value.empty() ? static_cast<int>(eq) + 2
                                             : static_cast<int>(value.data() - line.data()) + 1;
        entries.push_back({std::string(key), std::string(value), line_no, value_col});
    }

    auto apply = [&](ScenarioConfig &cfg, const Entry &e)
    {
        try
        {
            find_field(e.key)->set(cfg, e.value);
        }
        catch (const ConfigError &err)
        {
            throw ConfigError(source + ":" + std::to_string(e.line) + ": " + err.what());
        }
    };

    LayoutMode layout = LayoutMode::single_cell;
    for (const auto &e : entries)
        if (e.key == "layout")
        {
            ScenarioConfig probe;
            apply(probe, e);
            layout = probe.layout;
        }

    ScenarioConfig cfg = ScenarioConfig::defaults(layout);
    for (const auto &e : entries)
        apply(cfg, e);
    cfg.validate();
    return cfg;
}

hapsim::ScenarioConfig hapsim::parse_config_string(const std::string &text)
{
    std::istringstream in(text);
    return parse_config(in, "<string>");
}

hapsim::ScenarioConfig hapsim::load_config(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("Cannot open config file '" + path + "'.");
    return parse_config(f, path);
}

std::string hapsim::dump_config(const ScenarioConfig &cfg)
{
    std::string out;
    for (const auto &f : fields())
    {
        out += f.key;
        out += " = ";
        out += f.get(cfg);
        out += '\n';
    }
    return out;
}

std::vector<std::string> hapsim::config_keys()
{
    std::vector<std::string> keys;
    for (const auto &f : fields())
        keys.push_back(f.key);
    return keys;
}
