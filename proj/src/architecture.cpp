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

#include "hapsim/architecture.hpp"
#include "hapsim/error.hpp"

#include <algorithm>
#include <cmath>

namespace
{
    constexpr double kt_dbm_per_hz = -174.0;
}

double hapsim::db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double hapsim::linear_to_db(double lin) { return 10.0 * std::log10(lin); }

void hapsim::RepeaterModel::validate() const
{
    if (!(gain_db > 0.0))
        throw ConfigError("Repeater gain must be positive.");
    if (!(noise_figure_db >= 0.0))
        throw ConfigError("Repeater noise figure cannot be negative.");
    if (!std::isfinite(max_output_power_dbm))
        throw ConfigError("Repeater output limit must be finite.");
}

hapsim::CascadeStage hapsim::CascadeStage::from_db(double gain_db, double noise_figure_db)
{
    return {db_to_linear(gain_db), db_to_linear(noise_figure_db)};
}

double hapsim::cascade_noise_figure_db(std::span<const CascadeStage> stages)
{
    if (stages.empty())
        throw DomainError("Noise cascade needs at least one stage.");
    double f = 0.0;
    double gain_before = 1.0;
    for (std::size_t k = 0; k < stages.size(); ++k)
    {
        const auto &s = stages[k];
        if (!(s.gain > 0.0) || !(s.noise_factor >= 1.0))
            throw DomainError("Cascade stage needs gain > 0 and noise factor >= 1.");
        f += k == 0 ? s.noise_factor : (s.noise_factor - 1.0) / gain_before;
        gain_before *= s.gain;
    }
    return linear_to_db(f);
}

double hapsim::thermal_noise_dbm(double bandwidth_hz, double noise_figure_db)
{
    if (!(bandwidth_hz > 0.0))
        throw DomainError("Noise bandwidth must be positive.");
    return kt_dbm_per_hz + linear_to_db(bandwidth_hz) + noise_figure_db;
}

double hapsim::power_sum_dbm(std::span<const double> powers_dbm)
{
    double mw = 0.0;
    for (double p : powers_dbm)
        mw += db_to_linear(p);
    return mw > 0.0 ? std::max(linear_to_db(mw), no_power_dbm) : no_power_dbm;
}

double hapsim::bp_repeater_output_dbm(double gateway_tx_dbm, double gateway_gain_dbi, double feeder_db,
                                      const RepeaterModel &rep)
{
    rep.validate();
    double out = gateway_tx_dbm + gateway_gain_dbi - feeder_db + rep.gain_db;
    if (rep.limit_output)
        out = std::min(out, rep.max_output_power_dbm);
    return out;
}

double hapsim::bp_effective_dl_eirp_dbm(double gateway_tx_dbm, double gateway_gain_dbi, double feeder_db,
                                        const RepeaterModel &rep, double panel_gain_dbi)
{
    return bp_repeater_output_dbm(gateway_tx_dbm, gateway_gain_dbi, feeder_db, rep) + panel_gain_dbi;
}

double hapsim::repeater_noise_at_ue_dbm(const RepeaterModel &rep, double access_loss_db, double bandwidth_hz)
{
    return thermal_noise_dbm(bandwidth_hz) + rep.gain_db + rep.noise_figure_db - access_loss_db;
}

void hapsim::ArchitectureParams::validate() const
{
    repeater.validate();
    for (double v : {bs_tx_power_dbm, gateway_tx_power_dbm, gateway_antenna_gain_dbi})
        if (!std::isfinite(v))
            throw ConfigError("Architecture power and gain terms must be finite.");
    if (bs_noise_figure_db < 0.0 || gateway_noise_figure_db < 0.0)
        throw ConfigError("Noise figures cannot be negative.");
}

double hapsim::dl_panel_power_dbm(const ArchitectureParams &arch, double feeder_db)
{
    if (arch.architecture == Architecture::regenerative)
        return arch.bs_tx_power_dbm;
    return bp_repeater_output_dbm(arch.gateway_tx_power_dbm, arch.gateway_antenna_gain_dbi, feeder_db, arch.repeater);
}

double hapsim::ul_noise_figure_db(const ArchitectureParams &arch)
{
    if (arch.architecture == Architecture::regenerative)
        return arch.bs_noise_figure_db;
    const CascadeStage chain[] = {CascadeStage::from_db(arch.repeater.gain_db, arch.repeater.noise_figure_db),
                                  CascadeStage::from_db(0.0, arch.gateway_noise_figure_db)};
    return cascade_noise_figure_db(chain);
}

hapsim::LinkBudget hapsim::dl_sinr(const ArchitectureParams &arch, const DownlinkLink &link, double feeder_db)
{
    LinkBudget b;
    b.tx_power_dbm = dl_panel_power_dbm(arch, feeder_db);
    b.tx_gain_dbi = link.serving_gain_dbi;
    b.path_loss_db = link.path_loss_db;
    b.rx_gain_dbi = link.rx_gain_dbi;

    std::vector<double> noise{thermal_noise_dbm(link.bandwidth_hz, link.noise_figure_db)};
    if (arch.architecture == Architecture::bent_pipe && arch.model_repeater_noise)
        noise.push_back(repeater_noise_at_ue_dbm(arch.repeater, link.path_loss_db, link.bandwidth_hz));
    b.noise_power_dbm = power_sum_dbm(noise);

    std::vector<double> interference;
    interference.reserve(link.interferer_gains_dbi.size());
    for (double g : link.interferer_gains_dbi)
        interference.push_back(b.tx_power_dbm + g - link.path_loss_db + link.rx_gain_dbi);
    b.interference_power_dbm = power_sum_dbm(interference);

    const double ni[] = {b.noise_power_dbm, b.interference_power_dbm};
    b.sinr_db = b.received_power_dbm() - power_sum_dbm(ni);
    return b;
}

hapsim::LinkBudget hapsim::ul_sinr(const ArchitectureParams &arch, const UplinkLink &link)
{
    LinkBudget b;
    b.tx_power_dbm = link.signal.tx_power_dbm;
    b.tx_gain_dbi = link.signal.tx_gain_dbi;
    b.path_loss_db = link.signal.path_loss_db;
    b.rx_gain_dbi = link.signal.rx_gain_dbi;
    b.noise_power_dbm = thermal_noise_dbm(link.bandwidth_hz, ul_noise_figure_db(arch));

    std::vector<double> interference;
    interference.reserve(link.interferers.size());
    for (const auto &i : link.interferers)
        interference.push_back(i.tx_power_dbm + i.tx_gain_dbi - i.path_loss_db + i.rx_gain_dbi);
    b.interference_power_dbm = power_sum_dbm(interference);

    const double ni[] = {b.noise_power_dbm, b.interference_power_dbm};
    b.sinr_db = b.received_power_dbm() - power_sum_dbm(ni);
    return b;
}
