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

#ifndef HAPSIM_SIMULATION_HPP
#define HAPSIM_SIMULATION_HPP

#include "hapsim/antenna.hpp"
#include "hapsim/architecture.hpp"
#include "hapsim/channel.hpp"
#include "hapsim/geometry.hpp"
#include "hapsim/rng.hpp"
#include "hapsim/scenario.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hapsim
{
    // Ground cells. Cell i is served by beam (panel) i.
    struct CellLayout
    {
        LayoutMode mode = LayoutMode::single_cell;
        double radius_m = 60000.0;
        std::vector<Point3> cell_centers;

        static CellLayout single(double radius_m = 60000.0);

        // Center cell at the origin plus six outer cells at outer_center_fraction * radius,
        // azimuths azimuth_offset + 0, 60, ..., 300 degrees.
        static CellLayout seven_cell(double radius_m, double outer_center_fraction, double azimuth_offset_deg = 0.0);

        int cell_count() const { return static_cast<int>(cell_centers.size()); }

        // Geographic cell: nearest center in the ground plane, lowest index on ties.
        int nearest_cell(const Point3 &p) const;
    };

    struct Terminal
    {
        int id = 0;
        Point3 position{};
        TerminalKind kind = TerminalKind::ue_omni;
        double tx_power_dbm = 23.0;
        double noise_figure_db = 7.0;
        LosState los = LosState::los;
        double shadow_db = 0.0; // fixed for the whole campaign
    };

    // Terminal antenna gain toward the platform. `to_haps` is the terminal -> platform link.
    double terminal_gain_dbi(const Terminal &t, const LinkGeometry &to_haps, const ElementPattern &cpe_pattern);

    struct DropParams
    {
        int count = 20;
        TerminalKind kind = TerminalKind::ue_omni;
        double tx_power_dbm = 23.0;
        double noise_figure_db = 7.0;
        std::optional<int> target_los;
        Point3 reference{0.0, 0.0, 20000.0}; // platform position used for LOS and shadow statistics
        long max_attempts = 2'000'000;
    };

    /// Uniform drop over the service disc. LOS states are Bernoulli draws from the elevation bin
    /// seen from `reference`; with a target LOS count the draw is repeated until the count matches.
    /// Shadow fading is drawn once per terminal from the bin's LOS or NLOS spread. The random
    /// stream does not depend on the terminal kind, so UE and CPE campaigns share a drop.
    std::vector<Terminal> drop_terminals(const CellLayout &layout, const DropParams &params, const NtnTables &tables,
                                         Rng &rng);

    // Panels and their current weights (downlink and uplink carriers) for one platform position.
    struct HapsState
    {
        int run_index = 0;
        Point3 position{};
        double feeder_db = 0.0;
        std::vector<PanelArray> panels;
        std::vector<SteeringWeights> dl_weights;
        std::vector<SteeringWeights> ul_weights;
    };

    // Beam steering points every beam at its cell center; beam selection keeps broadside weights.
    HapsState make_haps_state(const ScenarioConfig &cfg, const CellLayout &layout, int run_index);

    // Serving beam, or nullopt (outage) when the terminal is behind every eligible panel.
    std::optional<int> attach(const Terminal &t, const HapsState &haps, const CellLayout &layout, AttachmentMode mode,
                              double dl_carrier_hz);

    // Length of the scheduling interval simulated at each platform position.
    inline constexpr double scheduling_interval_s = 1.0;

    struct PacketRecord
    {
        double bits = 0.0;
        double duration_s = 1.0;
        double bandwidth_hz = 0.0;
    };

    // Equal share of each cell's bandwidth among its attached terminals (0 for detached ones).
    std::vector<double> schedule_downlink(std::span<const std::optional<int>> serving, int cell_count,
                                          double bandwidth_hz);

    // Per-cell round-robin over the uplink blocks. Each TTI a cell hands its blocks to the next
    // attached terminals in terminal-id order, one block per terminal; a cell with fewer
    // terminals than blocks leaves the rest empty. The TTI count is global, so consecutive
    // positions continue the rotation. Terminals of different cells holding the same block in
    // the same TTI collide.
    class UplinkScheduler
    {
    public:
        UplinkScheduler(std::span<const std::optional<int>> serving, int cell_count, int block_count);

        int cell_count() const { return static_cast<int>(members_.size()); }
        int block_count() const { return blocks_; }
        std::span<const int> members(int cell) const { return members_.at(static_cast<std::size_t>(cell)); }

        // Terminal on (tti, block) in `cell`, nullopt if the block is unused.
        std::optional<int> at(int cell, std::int64_t tti, int block) const;

    private:
        std::vector<std::vector<int>> members_;
        int blocks_;
    };

    double sinr_to_se(double sinr_db, const LinkAbstraction &params);

    struct UserSe
    {
        double se = 0.0;
        bool outage = false;
    };

    // Bits over time-bandwidth product across all packets; no packets means outage.
    UserSe user_se(std::span<const PacketRecord> packets);

    struct DirectionStats
    {
        double mean_se = 0.0;
        double cell_edge_se = 0.0; // mean of the lowest ceil(5 %) users
        int outage_count = 0;
    };

    DirectionStats aggregate(std::span<const UserSe> users);

    // Number of users in the cell-edge statistic: ceil(0.05 * n).
    int cell_edge_count(std::size_t n);

    // Drop and tables for one campaign, immutable once built.
    struct Campaign
    {
        ScenarioConfig config;
        CellLayout layout;
        NtnTables tables;
        std::vector<Terminal> terminals;
    };

    // Resolves the NTN table named by the config (or the environment / built-in default).
    NtnTables resolve_tables(const ScenarioConfig &cfg);

    Campaign prepare_campaign(const ScenarioConfig &cfg);

    struct TerminalPositionResult
    {
        std::optional<int> serving_beam;
        LinkBudget dl{};
        LinkBudget ul{}; // best uplink TTI of the interval
        std::optional<PacketRecord> dl_packet;
        std::optional<PacketRecord> ul_packet;
    };

    struct PositionResult
    {
        int run_index = 0;
        double feeder_db = 0.0;
        std::vector<TerminalPositionResult> terminals;
    };

    // Per-terminal link state at one platform position.
    struct TerminalLinks
    {
        LinkGeometry to_haps{};   // terminal -> platform
        Vec3 direction{};         // unit vector platform -> terminal
        LinkLoss dl_loss{};
        LinkLoss ul_loss{};
        double terminal_gain_dbi = 0.0;
        std::vector<double> dl_beam_gains_dbi; // every beam's gain toward the terminal
        std::vector<double> ul_beam_gains_dbi;
    };

    std::vector<TerminalLinks> compute_links(const Campaign &campaign, const HapsState &haps);

    // Downlink budget of one terminal against its serving beam with every other beam as a
    // co-channel interferer. Throws SchedulingError for a detached terminal.
    LinkBudget terminal_dl_sinr(const Campaign &campaign, const HapsState &haps, std::span<const TerminalLinks> links,
                                std::span<const std::optional<int>> serving, int terminal);

    // Uplink budget of one terminal received on its serving beam, with `interferers` (terminal
    // indices) transmitting on the same block. Throws SchedulingError for a detached terminal.
    LinkBudget terminal_ul_sinr(const Campaign &campaign, std::span<const TerminalLinks> links,
                                std::span<const std::optional<int>> serving, int terminal,
                                std::span<const int> interferers);

    PositionResult evaluate_position(const Campaign &campaign, int run_index);

    struct UserRow
    {
        int terminal_id = 0;
        double x_m = 0.0;
        double y_m = 0.0;
        TerminalKind kind = TerminalKind::ue_omni;
        LosState los = LosState::los;
        int serving_cell = -1; // most frequent serving beam over the positions, -1 if never attached
        UserSe dl{};
        UserSe ul{};
    };

    struct SeReport
    {
        std::string name;
        std::vector<UserRow> users;
        DirectionStats dl{};
        DirectionStats ul{};
    };

    // Per-user SE averaged over the positions (in the order given), then aggregated.
    SeReport summarize(const Campaign &campaign, std::span<const PositionResult> positions);

    // All flight positions, evaluated on cfg.threads workers. Output is independent of the
    // thread count.
    SeReport run_campaign(const Campaign &campaign);
    SeReport run_campaign(const ScenarioConfig &cfg);
}

#endif
