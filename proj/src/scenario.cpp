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

#include "hapsim/scenario.hpp"
#include "hapsim/error.hpp"
#include "hapsim/text.hpp"

#include <cmath>

void hapsim::LinkAbstraction::validate(std::string_view prefix) const
{
    const std::string p(prefix);
    if (!(attenuation > 0.0 && attenuation <= 1.0))
        throw ConfigError(p + ".attenuation: must be in (0, 1].");
    if (!std::isfinite(sinr_min_db))
        throw ConfigError(p + ".sinr_min_db: must be finite.");
    if (!(se_max > 0.0) || !std::isfinite(se_max))
        throw ConfigError(p + ".se_max: must be positive.");
}

int hapsim::ScenarioConfig::ul_block_count() const
{
    return static_cast<int>(std::lround(ul_bandwidth_hz / ul_block_bandwidth_hz));
}

double hapsim::ScenarioConfig::resolved_outer_center_fraction() const
{
    if (outer_center_fraction)
        return *outer_center_fraction;
    const double ground_m = flight.altitude_m() / std::tan(deg_to_rad(hex.side_downtilt_deg));
    return ground_m / service_radius_m;
}

std::int64_t hapsim::ScenarioConfig::ul_tti_count() const
{
    return std::llround(1.0 / ul_tti_s);
}

hapsim::ScenarioConfig hapsim::ScenarioConfig::defaults(LayoutMode layout)
{
    ScenarioConfig c;
    c.layout = layout;
    if (layout == LayoutMode::seven_cell)
    {
        c.name = "multi-cell-bp-steering-ue";
        c.terminal_count = 210;
        c.target_los = 175;
        c.service_radius_m = 100000.0;
        c.sweep_max_distance_m = 100000.0;
    }
    return c;
}

void hapsim::ScenarioConfig::validate() const
{
    auto positive = [](double v, const char *field)
    {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ConfigError(std::string(field) + ": must be positive.");
    };
    auto finite = [](double v, const char *field)
    {
        if (!std::isfinite(v))
            throw ConfigError(std::string(field) + ": must be finite.");
    };
    auto non_negative = [](double v, const char *field)
    {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ConfigError(std::string(field) + ": cannot be negative.");
    };
    auto pattern = [&](const ElementPattern &p, const std::string &prefix)
    {
        finite(p.peak_gain_dbi, (prefix + ".peak_gain_dbi").c_str());
        positive(p.hpbw_az_deg, (prefix + ".hpbw_az_deg").c_str());
        positive(p.hpbw_el_deg, (prefix + ".hpbw_el_deg").c_str());
        non_negative(p.front_to_back_db, (prefix + ".front_to_back_db").c_str());
    };

    if (name.empty())
        throw ConfigError("name: cannot be empty.");
    if (terminal_count <= 0)
        throw ConfigError("terminal_count: must be positive.");
    if (target_los && (*target_los < 0 || *target_los > terminal_count))
        throw ConfigError("target_los: must be within [0, terminal_count].");
    if (threads < 1)
        throw ConfigError("threads: must be at least 1.");
    positive(service_radius_m, "service_radius_m");

    positive(flight.center.z, "haps.altitude_m");
    finite(flight.center.x, "haps.center_x_m");
    finite(flight.center.y, "haps.center_y_m");
    non_negative(flight.diameter_m, "haps.flight_diameter_m");
    non_negative(flight.speed_kmh, "haps.speed_kmh");
    if (flight.position_count <= 0)
        throw ConfigError("haps.position_count: must be positive.");
    positive(flight.angular_step_deg, "haps.angular_step_deg");
    if (std::abs(flight.position_count * flight.angular_step_deg - 360.0) > 1e-9)
        throw ConfigError("haps.angular_step_deg: position_count * angular_step_deg must equal 360.");

    finite(gateway.x, "gateway.x_m");
    finite(gateway.y, "gateway.y_m");
    non_negative(gateway.z, "gateway.z_m");
    if (gateway.z >= flight.center.z)
        throw ConfigError("gateway.z_m: gateway must be below the platform.");
    positive(feeder_carrier_hz, "feeder.carrier_hz");

    positive(dl_carrier_hz, "dl.carrier_hz");
    positive(dl_bandwidth_hz, "dl.bandwidth_hz");
    positive(ul_carrier_hz, "ul.carrier_hz");
    positive(ul_bandwidth_hz, "ul.bandwidth_hz");
    positive(ul_block_bandwidth_hz, "ul.block_bandwidth_hz");
    if (!(ul_tti_s > 0.0 && ul_tti_s <= 1.0) || std::abs(1.0 / ul_tti_s - std::round(1.0 / ul_tti_s)) > 1e-6)
        throw ConfigError("ul.tti_s: must divide the 1 s scheduling interval a whole number of times.");
    {
        const double blocks = ul_bandwidth_hz / ul_block_bandwidth_hz;
        if (blocks < 1.0 || std::abs(blocks - std::round(blocks)) > 1e-9)
            throw ConfigError("ul.block_bandwidth_hz: must divide ul.bandwidth_hz a whole number of times.");
    }

    finite(ue_tx_power_dbm, "ue.tx_power_dbm");
    non_negative(ue_noise_figure_db, "ue.noise_figure_db");

    finite(arch.bs_tx_power_dbm, "bs.tx_power_dbm");
    non_negative(arch.bs_noise_figure_db, "bs.noise_figure_db");
    finite(arch.gateway_tx_power_dbm, "gateway.tx_power_dbm");
    finite(arch.gateway_antenna_gain_dbi, "gateway.antenna_gain_dbi");
    non_negative(arch.gateway_noise_figure_db, "gateway.noise_figure_db");
    positive(arch.repeater.gain_db, "repeater.gain_db");
    non_negative(arch.repeater.noise_figure_db, "repeater.noise_figure_db");
    finite(arch.repeater.max_output_power_dbm, "repeater.max_output_power_dbm");

    pattern(single_cell_pattern, "antenna.single_cell");
    pattern(hex.element, "antenna.element");
    pattern(cpe_pattern, "antenna.cpe");
    if (hex.bottom_rows <= 0 || hex.bottom_cols <= 0 || hex.side_rows <= 0 || hex.side_cols <= 0 ||
        hex.polarizations <= 0)
        throw ConfigError("antenna.*_rows/cols/polarizations: must be positive.");
    positive(hex.spacing_wavelengths, "antenna.spacing_wavelengths");
    positive(hex.design_carrier_hz, "antenna.design_carrier_hz");
    if (!(hex.side_downtilt_deg > 0.0 && hex.side_downtilt_deg < 90.0))
        throw ConfigError("antenna.side_downtilt_deg: must be in (0, 90).");
    finite(hex.azimuth_offset_deg, "antenna.azimuth_offset_deg");

    if (layout == LayoutMode::seven_cell)
    {
        const double f = resolved_outer_center_fraction();
        if (!(f > 0.0 && f <= 1.0))
            throw ConfigError("outer_center_fraction: must be in (0, 1], got " + text::format_double(f) + ".");
    }

    dl_link.validate("link.dl");
    ul_link.validate("link.ul");

    try
    {
        chains.validate();
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(std::string("consumption.*: ") + e.what());
    }
    positive(sweep_max_distance_m, "consumption.sweep_max_distance_m");
    positive(sweep_step_m, "consumption.sweep_step_m");
}

std::string hapsim::to_string(LayoutMode v) { return v == LayoutMode::single_cell ? "single" : "seven_cell"; }
std::string hapsim::to_string(TerminalKind v) { return v == TerminalKind::ue_omni ? "ue" : "cpe"; }
std::string hapsim::to_string(AttachmentMode v)
{
    return v == AttachmentMode::beam_steering ? "steering" : "selection";
}
std::string hapsim::to_string(Architecture v) { return v == Architecture::bent_pipe ? "bp" : "rg"; }

std::optional<hapsim::LayoutMode> hapsim::parse_layout(std::string_view s)
{
    if (s == "single")
        return LayoutMode::single_cell;
    if (s == "seven_cell")
        return LayoutMode::seven_cell;
    return std::nullopt;
}

std::optional<hapsim::TerminalKind> hapsim::parse_terminal_kind(std::string_view s)
{
    if (s == "ue")
        return TerminalKind::ue_omni;
    if (s == "cpe")
        return TerminalKind::cpe_directional;
    return std::nullopt;
}

std::optional<hapsim::AttachmentMode> hapsim::parse_attachment(std::string_view s)
{
    if (s == "steering")
        return AttachmentMode::beam_steering;
    if (s == "selection")
        return AttachmentMode::beam_selection;
    return std::nullopt;
}

std::optional<hapsim::Architecture> hapsim::parse_architecture(std::string_view s)
{
    if (s == "bp")
        return Architecture::bent_pipe;
    if (s == "rg")
        return Architecture::regenerative;
    return std::nullopt;
}

std::vector<std::string> hapsim::preset_names()
{
    std::vector<std::string> names{"single-cell-bp", "single-cell-rg"};
    for (const char *arch : {"bp", "rg"})
        for (const char *mode : {"steering", "selection"})
            for (const char *kind : {"ue", "cpe"})
                names.push_back(std::string("multi-cell-") + arch + "-" + mode + "-" + kind);
    return names;
}

hapsim::ScenarioConfig hapsim::preset(std::string_view name)
{
    if (name == "single-cell-bp" || name == "single-cell-rg")
    {
        auto c = ScenarioConfig::defaults(LayoutMode::single_cell);
        c.name = std::string(name);
        c.arch.architecture = name.ends_with("rg") ? Architecture::regenerative : Architecture::bent_pipe;
        return c;
    }

    constexpr std::string_view prefix = "multi-cell-";
    if (name.starts_with(prefix))
    {
        const std::string rest(name.substr(prefix.size()));
        const auto first = rest.find('-');
        const auto second = first == std::string::npos ? std::string::npos : rest.find('-', first + 1);
        if (second != std::string::npos)
        {
            const auto arch = parse_architecture(rest.substr(0, first));
            const auto mode = parse_attachment(rest.substr(first + 1, second - first - 1));
            const auto kind = parse_terminal_kind(rest.substr(second + 1));
            if (arch && mode && kind)
            {
                auto c = ScenarioConfig::defaults(LayoutMode::seven_cell);
                c.name = std::string(name);
                c.arch.architecture = *arch;
                c.attachment = *mode;
                c.terminal_kind = *kind;
                return c;
            }
        }
    }
    throw ConfigError("Unknown preset '" + std::string(name) + "'.");
}

std::vector<std::string> hapsim::preset_group(std::string_view name)
{
    auto all = preset_names();
    if (name == "all")
        return all;
    if (name == "single-cell")
        return {all.begin(), all.begin() + 2};
    if (name == "multi-cell")
        return {all.begin() + 2, all.end()};
    return {};
}
