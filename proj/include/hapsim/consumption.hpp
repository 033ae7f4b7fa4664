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

#ifndef HAPSIM_CONSUMPTION_HPP
#define HAPSIM_CONSUMPTION_HPP

#include "hapsim/geometry.hpp"

#include <span>
#include <string>
#include <vector>

namespace hapsim
{
    // One component of a transmit chain. Antennas are stages with efficiency 1.
    struct EfficiencyStage
    {
        double gain = 1.0;       // linear
        double efficiency = 1.0; // (0, 1]
    };

    /// Power-efficiency factor of a cascaded chain ordered source to antenna:
    ///
    ///     H = { 1 + sum_k (1/eta_k - 1) / (G_1 ... G_{k-1}) }^-1
    ///
    /// The loss of each stage is divided by the gain accumulated ahead of it, so a lossy stage
    /// late in the chain weighs less. Returns a value in (0, 1]; H = 1 is a lossless chain.
    double power_efficiency_factor(std::span<const EfficiencyStage> stages);

    // Repeater: mixer then RF amplifier (antennas lossless).
    double h_relay(const EfficiencyStage &mixer, const EfficiencyStage &amplifier);

    // On-board base station: baseband amplifier, mixer, RF amplifier.
    double h_source(const EfficiencyStage &baseband_amp, const EfficiencyStage &mixer, const EfficiencyStage &rf_amp);

    struct RelayScenario
    {
        double d1_m;        // source -> relay
        double d2_m;        // relay -> sink
        double d3_m;        // source -> sink
        double g_rx_relay;  // linear
        double g_rx_sink;   // linear
        double h_relay;
        double h_source;
    };

    enum class RelayVerdict
    {
        relay_preferred,
        direct_preferred
    };

    struct RelayAdvantage
    {
        double rhs;    // (d1/d3)^2 / (G_relay/G_sink) + (d2/d3)^2 / (H_relay/H_source)
        double margin; // 1 - rhs, positive when the relay wins
        RelayVerdict verdict;
    };

    // Free-space relay ellipse test: a relay saves energy iff rhs < 1.
    RelayAdvantage relay_advantage(const RelayScenario &s);

    std::string to_string(RelayVerdict v);

    struct RelayChains
    {
        EfficiencyStage repeater_mixer{1.0, 0.5};
        EfficiencyStage repeater_amplifier{1000.0, 0.4};
        EfficiencyStage bs_baseband_amp{10.0, 0.3};
        EfficiencyStage bs_mixer{1.0, 0.5};
        EfficiencyStage bs_rf_amp{1000.0, 0.4};
        double g_rx_relay = 3.1622776601683795e10; // 105 dB repeater gain
        double g_rx_sink = 1.0;                    // 0 dBi handset

        void validate() const;
    };

    struct RelayAssessmentRow
    {
        Point3 terminal;
        double d1_m;
        double d2_m;
        double d3_m;
        double d1_d3_squared;
        bool within_distance_bound; // (d1/d3)^2 < 25/4
        RelayAdvantage advantage;
    };

    struct RelayAssessment
    {
        double h_relay;
        double h_source;
        std::vector<RelayAssessmentRow> rows;
    };

    // Per-terminal verdicts with d1 = platform-gateway slant and d2 = d3 = platform-terminal slant.
    RelayAssessment haps_relay_assessment(const Point3 &haps, const Point3 &gateway,
                                          std::span<const Point3> terminals, const RelayChains &chains);
}

#endif
