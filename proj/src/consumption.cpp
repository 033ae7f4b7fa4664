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

#include "hapsim/consumption.hpp"
#include "hapsim/error.hpp"

#include <cmath>

namespace
{
    void check_stage(const hapsim::EfficiencyStage &s)
    {
        if (!(s.efficiency > 0.0))
            throw hapsim::DomainError("Stage efficiency must be positive (zero efficiency consumes infinite power).");
        if (s.efficiency > 1.0)
            throw hapsim::DomainError("Stage efficiency cannot exceed 1.");
        if (!(s.gain > 0.0) || !std::isfinite(s.gain))
            throw hapsim::DomainError("Stage gain must be positive and finite.");
    }
}

double hapsim::power_efficiency_factor(std::span<const EfficiencyStage> stages)
{
    if (stages.empty())
        throw DomainError("Efficiency chain needs at least one stage.");
    for (const auto &s : stages)
        check_stage(s);

    // 1 + (1/eta_1 - 1) + rest = 1/eta_1 + rest, so H = eta_1 / (1 + eta_1 * rest). This form
    // returns eta exactly for a single stage.
    double rest = 0.0;
    double gain_before = stages.front().gain;
    for (std::size_t k = 1; k < stages.size(); ++k)
    {
        rest += (1.0 / stages[k].efficiency - 1.0) / gain_before;
        gain_before *= stages[k].gain;
    }
    const double eta1 = stages.front().efficiency;
    return eta1 / (1.0 + eta1 * rest);
}

double hapsim::h_relay(const EfficiencyStage &mixer, const EfficiencyStage &amplifier)
{
    check_stage(mixer);
    check_stage(amplifier);
    return 1.0 / (1.0 + (1.0 / mixer.efficiency - 1.0) + (1.0 / mixer.gain) * (1.0 / amplifier.efficiency - 1.0));
}

double hapsim::h_source(const EfficiencyStage &bb, const EfficiencyStage &mixer, const EfficiencyStage &rf)
{
    check_stage(bb);
    check_stage(mixer);
    check_stage(rf);
    return 1.0 / (1.0 + (1.0 / bb.efficiency - 1.0) + (1.0 / bb.gain) * (1.0 / mixer.efficiency - 1.0) +
                  (1.0 / (bb.gain * mixer.gain)) * (1.0 / rf.efficiency - 1.0));
}

hapsim::RelayAdvantage hapsim::relay_advantage(const RelayScenario &s)
{
    if (!(s.d3_m > 0.0))
        throw DomainError("Direct source-sink distance d3 must be positive.");
    if (!(s.d1_m > 0.0) || !(s.d2_m > 0.0))
        throw DomainError("Relay hop distances must be positive.");
    if (!(s.g_rx_relay > 0.0) || !(s.g_rx_sink > 0.0))
        throw DomainError("Receive gains must be positive.");
    if (!(s.h_relay > 0.0 && s.h_relay <= 1.0) || !(s.h_source > 0.0 && s.h_source <= 1.0))
        throw DomainError("Power-efficiency factors must be in (0, 1].");

    const double r1 = s.d1_m / s.d3_m;
    const double r2 = s.d2_m / s.d3_m;
    const double rhs = r1 * r1 / (s.g_rx_relay / s.g_rx_sink) + r2 * r2 / (s.h_relay / s.h_source);
    return {rhs, 1.0 - rhs, rhs < 1.0 ? RelayVerdict::relay_preferred : RelayVerdict::direct_preferred};
}

std::string hapsim::to_string(RelayVerdict v)
{
    return v == RelayVerdict::relay_preferred ? "relay_preferred" : "direct_preferred";
}

void hapsim::RelayChains::validate() const
{
    for (const auto *s : {&repeater_mixer, &repeater_amplifier, &bs_baseband_amp, &bs_mixer, &bs_rf_amp})
    {
        if (!(s->efficiency > 0.0 && s->efficiency <= 1.0))
            throw ConfigError("Chain stage efficiency must be in (0, 1].");
        if (!(s->gain > 0.0) || !std::isfinite(s->gain))
            throw ConfigError("Chain stage gain must be positive and finite.");
    }
    if (!(g_rx_relay > 0.0) || !(g_rx_sink > 0.0))
        throw ConfigError("Relay and sink receive gains must be positive.");
}

hapsim::RelayAssessment hapsim::haps_relay_assessment(const Point3 &haps, const Point3 &gateway,
                                                      std::span<const Point3> terminals, const RelayChains &chains)
{
    chains.validate();
    RelayAssessment out;
    out.h_relay = h_relay(chains.repeater_mixer, chains.repeater_amplifier);
    out.h_source = h_source(chains.bs_baseband_amp, chains.bs_mixer, chains.bs_rf_amp);

    const double d1 = (haps - gateway).norm();
    for (const auto &t : terminals)
    {
        const double d3 = (haps - t).norm();
        RelayAssessmentRow row;
        row.terminal = t;
        row.d1_m = d1;
        row.d2_m = d3;
        row.d3_m = d3;
        row.advantage = relay_advantage({d1, d3, d3, chains.g_rx_relay, chains.g_rx_sink, out.h_relay, out.h_source});
        row.d1_d3_squared = (d1 / d3) * (d1 / d3);
        row.within_distance_bound = row.d1_d3_squared < 25.0 / 4.0;
        out.rows.push_back(row);
    }
    return out;
}
