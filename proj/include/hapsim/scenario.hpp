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

#ifndef HAPSIM_SCENARIO_HPP
#define HAPSIM_SCENARIO_HPP

#include "hapsim/antenna.hpp"
#include "hapsim/architecture.hpp"
#include "hapsim/consumption.hpp"
#include "hapsim/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hapsim
{
    enum class LayoutMode
    {
        single_cell,
        seven_cell
    };

    enum class TerminalKind
    {
        ue_omni,
        cpe_directional
    };

    enum class AttachmentMode
    {
        beam_steering,
        beam_selection
    };

    // Truncated, attenuated Shannon mapping from SINR to spectral efficiency.
    struct LinkAbstraction
    {
        double attenuation = 0.6;
        double sinr_min_db = -10.0;
        double se_max = 4.4; // bit/s/Hz

        static LinkAbstraction downlink() { return {}; }
        static LinkAbstraction uplink() { return {0.4, -10.0, 2.0}; }

        // `prefix` names the config section in error messages.
        void validate(std::string_view prefix = "link") const;
    };

    /// Full description of one simulation campaign. Every field has a default; the defaults of
    /// a default-constructed config describe the single-cell bent-pipe case.
    struct ScenarioConfig
    {
        std::string name = "single-cell-bp";

        LayoutMode layout = LayoutMode::single_cell;
        TerminalKind terminal_kind = TerminalKind::ue_omni;
        AttachmentMode attachment = AttachmentMode::beam_steering;
        ArchitectureParams arch{};

        int terminal_count = 20;
        std::optional<int> target_los = 17; // nullopt: plain Bernoulli draws
        std::uint64_t seed = 1;
        int threads = 1;

        double service_radius_m = 60000.0;
        // Seven-cell outer centers as a fraction of the radius. Unset: the ground point of the
        // side-panel boresight seen from the flight-circle center.
        std::optional<double> outer_center_fraction;
        double resolved_outer_center_fraction() const;

        FlightPattern flight{};
        Point3 gateway{45000.0, 0.0, 0.0};
        double feeder_carrier_hz = 3.65e9;

        double dl_carrier_hz = 2.1e9;
        double dl_bandwidth_hz = 20e6;
        double ul_carrier_hz = 1.8e9;
        double ul_bandwidth_hz = 1e6;       // uplink channel
        double ul_block_bandwidth_hz = 1e6; // allocation per terminal

        // Uplink blocks per cell and scheduling round (channel / allocation).
        int ul_block_count() const;

        double ul_tti_s = 1e-3;
        // Uplink TTIs per scheduling interval.
        std::int64_t ul_tti_count() const;

        double ue_tx_power_dbm = 23.0;
        double ue_noise_figure_db = 7.0;

        ElementPattern single_cell_pattern = ElementPattern::single_cell();
        HexArrayConfig hex{};
        ElementPattern cpe_pattern = ElementPattern::cpe();

        LinkAbstraction dl_link = LinkAbstraction::downlink();
        LinkAbstraction ul_link = LinkAbstraction::uplink();

        // Empty: $HAPSIM_NTN_TABLE if set, else the built-in rural table.
        std::string ntn_table;

        std::string output_dir = "hapsim-out";

        RelayChains chains{};
        double sweep_max_distance_m = 60000.0;
        double sweep_step_m = 5000.0;

        // Defaults for a layout: terminal count, LOS target and service radius differ.
        static ScenarioConfig defaults(LayoutMode layout);

        void validate() const;
    };

    std::string to_string(LayoutMode v);
    std::string to_string(TerminalKind v);
    std::string to_string(AttachmentMode v);
    std::string to_string(Architecture v);
    std::optional<LayoutMode> parse_layout(std::string_view s);
    std::optional<TerminalKind> parse_terminal_kind(std::string_view s);
    std::optional<AttachmentMode> parse_attachment(std::string_view s);
    std::optional<Architecture> parse_architecture(std::string_view s);

    // Two single-cell presets (bent pipe, regenerative) and eight seven-cell presets
    // ({bp, rg} x {steering, selection} x {ue, cpe}).
    std::vector<std::string> preset_names();
    ScenarioConfig preset(std::string_view name);

    // Named groups: "single-cell" (2), "multi-cell" (8), "all" (10).
    std::vector<std::string> preset_group(std::string_view name);
}

#endif
