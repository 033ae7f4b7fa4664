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

#ifndef HAPSIM_ARCHITECTURE_HPP
#define HAPSIM_ARCHITECTURE_HPP

#include <span>
#include <vector>

namespace hapsim
{
    enum class Architecture
    {
        bent_pipe,    // RF repeater on the platform, base station at the gateway
        regenerative, // base station on the platform
    };

    // Amplify-and-forward payload. The output limit is off by default: with it on, the
    // 30 dBm ceiling sits well below the ~42.6 dBm needed to match an on-board base station.
    struct RepeaterModel
    {
        double gain_db = 105.0;
        double noise_figure_db = 7.0;
        double max_output_power_dbm = 30.0;
        bool limit_output = false;

        void validate() const;
    };

    struct CascadeStage
    {
        double gain = 1.0;         // linear
        double noise_factor = 1.0; // linear, >= 1

        static CascadeStage from_db(double gain_db, double noise_figure_db);
    };

    // Friis cascade: F = F1 + sum_k (F_k - 1) / (G_1 ... G_{k-1}). Returns dB.
    double cascade_noise_figure_db(std::span<const CascadeStage> stages);

    // kTB at 290 K plus noise figure.
    double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db = 0.0);

    double db_to_linear(double db);
    double linear_to_db(double lin);

    // Power sum of dBm values; an empty span yields no_power_dbm.
    double power_sum_dbm(std::span<const double> powers_dbm);

    // Stand-in for "no power" that keeps budgets finite.
    constexpr double no_power_dbm = -300.0;

    // Repeater output before the access antenna: gateway EIRP after the feeder, amplified.
    double bp_repeater_output_dbm(double gateway_tx_dbm, double gateway_gain_dbi, double feeder_db,
                                  const RepeaterModel &rep);

    double bp_effective_dl_eirp_dbm(double gateway_tx_dbm, double gateway_gain_dbi, double feeder_db,
                                    const RepeaterModel &rep, double panel_gain_dbi);

    // Repeater input noise, amplified and carried to the terminal over the access link.
    double repeater_noise_at_ue_dbm(const RepeaterModel &rep, double access_loss_db, double bandwidth_hz);

    struct LinkBudget
    {
        double tx_power_dbm = 0.0;
        double tx_gain_dbi = 0.0;
        double path_loss_db = 0.0;
        double rx_gain_dbi = 0.0;
        double noise_power_dbm = 0.0;
        double interference_power_dbm = no_power_dbm;
        double sinr_db = 0.0;

        double received_power_dbm() const { return tx_power_dbm + tx_gain_dbi - path_loss_db + rx_gain_dbi; }
    };

    // Everything about the radio chain that depends on the architecture choice.
    struct ArchitectureParams
    {
        Architecture architecture = Architecture::bent_pipe;
        RepeaterModel repeater{};
        double bs_tx_power_dbm = 43.0; // per panel, regenerative
        double bs_noise_figure_db = 5.0;
        double gateway_tx_power_dbm = 43.0;
        double gateway_antenna_gain_dbi = 32.3;
        double gateway_noise_figure_db = 3.0;
        bool model_repeater_noise = false;

        void validate() const;
    };

    // Conducted power into each panel for the downlink. Bent pipe depends on the feeder loss
    // at the current platform position.
    double dl_panel_power_dbm(const ArchitectureParams &arch, double feeder_db);

    // Noise figure of the uplink receive chain referred to the platform antenna port. Bent pipe
    // cascades repeater and gateway receiver; the feeder loss is compensated inside the cascade.
    double ul_noise_figure_db(const ArchitectureParams &arch);

    struct DownlinkLink
    {
        double serving_gain_dbi = 0.0;
        std::vector<double> interferer_gains_dbi; // co-channel beams of other cells
        double path_loss_db = 0.0;
        double rx_gain_dbi = 0.0;
        double noise_figure_db = 7.0;
        double bandwidth_hz = 20e6;
    };

    // All beams share the platform position, hence the path loss. Interfering beams transmit
    // at the same panel power as the serving beam.
    LinkBudget dl_sinr(const ArchitectureParams &arch, const DownlinkLink &link, double feeder_db);

    struct UplinkSource
    {
        double tx_power_dbm = 23.0;
        double tx_gain_dbi = 0.0;
        double path_loss_db = 0.0;
        double rx_gain_dbi = 0.0; // platform panel gain toward this terminal
    };

    struct UplinkLink
    {
        UplinkSource signal{};
        std::vector<UplinkSource> interferers; // same resource block, other cells
        double bandwidth_hz = 1e6;
    };

    LinkBudget ul_sinr(const ArchitectureParams &arch, const UplinkLink &link);
}

#endif
