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

#include "hapsim/simulation.hpp"
#include "hapsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <numbers>
#include <thread>

hapsim::CellLayout hapsim::CellLayout::single(double radius_m)
{
    if (!(radius_m > 0.0))
        throw ConfigError("Cell radius must be positive.");
    return {LayoutMode::single_cell, radius_m, {Point3{0.0, 0.0, 0.0}}};
}

hapsim::CellLayout hapsim::CellLayout::seven_cell(double radius_m, double outer_center_fraction,
                                                  double azimuth_offset_deg)
{
    if (!(radius_m > 0.0))
        throw ConfigError("Service radius must be positive.");
    if (!(outer_center_fraction > 0.0 && outer_center_fraction <= 1.0))
        throw ConfigError("Outer cell center fraction must be in (0, 1].");
    CellLayout l{LayoutMode::seven_cell, radius_m, {Point3{0.0, 0.0, 0.0}}};
    const double r = outer_center_fraction * radius_m;
    for (int k = 0; k < 6; ++k)
    {
        const double az = deg_to_rad(azimuth_offset_deg + 60.0 * k);
        l.cell_centers.push_back({r * std::cos(az), r * std::sin(az), 0.0});
    }
    return l;
}

int hapsim::CellLayout::nearest_cell(const Point3 &p) const
{
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cell_count(); ++i)
    {
        const Vec3 d = p - cell_centers[i];
        const double h = d.horizontal_norm();
        if (h < best_d)
        {
            best = i;
            best_d = h;
        }
    }
    return best;
}

double hapsim::terminal_gain_dbi(const Terminal &t, const LinkGeometry &to_haps, const ElementPattern &cpe_pattern)
{
    if (t.kind == TerminalKind::ue_omni)
        return 0.0;
    // Optimum azimuth orientation, boresight on the horizon.
    return cpe_gain(to_haps.azimuth_deg, to_haps, cpe_pattern);
}

std::vector<hapsim::Terminal> hapsim::drop_terminals(const CellLayout &layout, const DropParams &params,
                                                     const NtnTables &tables, Rng &rng)
{
    if (params.count <= 0)
        throw ConfigError("Terminal count must be positive.");
    if (params.target_los && (*params.target_los < 0 || *params.target_los > params.count))
        throw ConfigError("Target LOS count must be within [0, terminal count].");

    std::vector<Terminal> terms(static_cast<std::size_t>(params.count));
    std::vector<double> elevation(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
    {
        const double r = layout.radius_m * std::sqrt(rng.uniform());
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        auto &t = terms[i];
        t.id = static_cast<int>(i);
        t.position = {r * std::cos(phi), r * std::sin(phi), 0.0};
        t.kind = params.kind;
        t.tx_power_dbm = params.tx_power_dbm;
        t.noise_figure_db = params.noise_figure_db;
        elevation[i] = link_geometry(t.position, params.reference).elevation_deg;
    }

    for (long attempt = 0;; ++attempt)
    {
        if (attempt >= params.max_attempts)
            throw ConfigError("Could not match the target LOS count of " + std::to_string(*params.target_los) +
                              " after " + std::to_string(params.max_attempts) + " draws.");
        int los_count = 0;
        for (std::size_t i = 0; i < terms.size(); ++i)
        {
            terms[i].los = assign_los(elevation[i], tables, rng);
            los_count += terms[i].los == LosState::los;
        }
        if (!params.target_los || los_count == *params.target_los)
            break;
    }

    for (std::size_t i = 0; i < terms.size(); ++i)
    {
        const auto &bin = tables.lookup(elevation[i]);
        const double sd = terms[i].los == LosState::los ? bin.shadow_std_los_db : bin.shadow_std_nlos_db;
        terms[i].shadow_db = rng.normal(0.0, sd);
    }
    return terms;
}

hapsim::HapsState hapsim::make_haps_state(const ScenarioConfig &cfg, const CellLayout &layout, int run_index)
{
    HapsState s;
    s.run_index = run_index;
    s.position = haps_position(cfg.flight, run_index);
    s.feeder_db = feeder_loss_db(s.position, cfg.gateway, cfg.feeder_carrier_hz);

    if (cfg.layout == LayoutMode::single_cell)
        s.panels = {single_cell_antenna(cfg.single_cell_pattern)};
    else
    {
        const auto hex = cfg.hex.panels();
        s.panels.assign(hex.begin(), hex.end());
    }
    if (static_cast<int>(s.panels.size()) != layout.cell_count())
        throw ConfigError("Antenna panel count does not match the cell layout.");

    for (std::size_t i = 0; i < s.panels.size(); ++i)
    {
        const auto &panel = s.panels[i];
        if (cfg.attachment == AttachmentMode::beam_steering)
        {
            const Vec3 target = (layout.cell_centers[i] - s.position).normalized();
            s.dl_weights.push_back(steering_weights(panel, target, cfg.dl_carrier_hz));
            s.ul_weights.push_back(steering_weights(panel, target, cfg.ul_carrier_hz));
        }
        else
        {
            s.dl_weights.push_back(broadside_weights(panel));
            s.ul_weights.push_back(broadside_weights(panel));
        }
    }
    return s;
}

std::optional<int> hapsim::attach(const Terminal &t, const HapsState &haps, const CellLayout &layout,
                                  AttachmentMode mode, double dl_carrier_hz)
{
    const Vec3 dir = (t.position - haps.position).normalized();
    auto in_front = [&](std::size_t beam) { return dir.dot(haps.panels[beam].frame.boresight) > 0.0; };

    if (mode == AttachmentMode::beam_steering)
    {
        const int cell = layout.nearest_cell(t.position);
        if (!in_front(static_cast<std::size_t>(cell)))
            return std::nullopt;
        return cell;
    }

    std::optional<int> best;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < haps.panels.size(); ++b)
    {
        if (!in_front(b))
            continue;
        const double g = array_gain(haps.panels[b], haps.dl_weights[b], dir, dl_carrier_hz);
        if (g > best_gain)
        {
            best_gain = g;
            best = static_cast<int>(b);
        }
    }
    return best;
}

std::vector<double> hapsim::schedule_downlink(std::span<const std::optional<int>> serving, int cell_count,
                                              double bandwidth_hz)
{
    std::vector<int> load(static_cast<std::size_t>(cell_count), 0);
    for (const auto &s : serving)
        if (s)
            ++load.at(static_cast<std::size_t>(*s));
    std::vector<double> share(serving.size(), 0.0);
    for (std::size_t i = 0; i < serving.size(); ++i)
        if (serving[i])
            share[i] = bandwidth_hz / load[static_cast<std::size_t>(*serving[i])];
    return share;
}

hapsim::UplinkScheduler::UplinkScheduler(std::span<const std::optional<int>> serving, int cell_count,
                                         int block_count)
    : members_(static_cast<std::size_t>(cell_count)), blocks_(block_count)
{
    if (block_count <= 0)
        throw ConfigError("Uplink block count must be positive.");
    for (std::size_t i = 0; i < serving.size(); ++i)
        if (serving[i])
            members_.at(static_cast<std::size_t>(*serving[i])).push_back(static_cast<int>(i));
}

std::optional<int> hapsim::UplinkScheduler::at(int cell, std::int64_t tti, int block) const
{
    const auto &m = members_.at(static_cast<std::size_t>(cell));
    const auto n = static_cast<std::int64_t>(m.size());
    const std::int64_t per_tti = std::min<std::int64_t>(n, blocks_);
    if (block < 0 || block >= per_tti)
        return std::nullopt;
    return m[static_cast<std::size_t>((tti * per_tti + block) % n)];
}

double hapsim::sinr_to_se(double sinr_db, const LinkAbstraction &p)
{
    if (sinr_db < p.sinr_min_db)
        return 0.0;
    return std::min(p.attenuation * std::log2(1.0 + db_to_linear(sinr_db)), p.se_max);
}

hapsim::UserSe hapsim::user_se(std::span<const PacketRecord> packets)
{
    if (packets.empty())
        return {0.0, true};
    double bits = 0.0;
    double resources = 0.0;
    for (const auto &p : packets)
    {
        bits += p.bits;
        resources += p.duration_s * p.bandwidth_hz;
    }
    return {resources > 0.0 ? bits / resources : 0.0, false};
}

int hapsim::cell_edge_count(std::size_t n)
{
    return static_cast<int>((5 * n + 99) / 100);
}

hapsim::DirectionStats hapsim::aggregate(std::span<const UserSe> users)
{
    if (users.empty())
        throw DomainError("Cannot aggregate an empty user list.");
    std::vector<double> se;
    se.reserve(users.size());
    DirectionStats st;
    double sum = 0.0;
    for (const auto &u : users)
    {
        se.push_back(u.se);
        sum += u.se;
        st.outage_count += u.outage;
    }
    st.mean_se = sum / static_cast<double>(se.size());

    std::sort(se.begin(), se.end());
    const int k = cell_edge_count(se.size());
    double edge = 0.0;
    for (int i = 0; i < k; ++i)
        edge += se[static_cast<std::size_t>(i)];
    st.cell_edge_se = edge / k;
    return st;
}

hapsim::NtnTables hapsim::resolve_tables(const ScenarioConfig &cfg)
{
    if (!cfg.ntn_table.empty())
        return NtnTables::load(cfg.ntn_table);
    if (const char *env = std::getenv("HAPSIM_NTN_TABLE"); env != nullptr && *env != '\0')
        return NtnTables::load(env);
    return NtnTables::rural_default();
}

hapsim::Campaign hapsim::prepare_campaign(const ScenarioConfig &cfg)
{
    cfg.validate();
    CellLayout layout = cfg.layout == LayoutMode::single_cell
                            ? CellLayout::single(cfg.service_radius_m)
                            : CellLayout::seven_cell(cfg.service_radius_m, cfg.resolved_outer_center_fraction(),
                                                     cfg.hex.azimuth_offset_deg);
    NtnTables tables = resolve_tables(cfg);

    DropParams dp;
    dp.count = cfg.terminal_count;
    dp.kind = cfg.terminal_kind;
    dp.tx_power_dbm = cfg.ue_tx_power_dbm;
    dp.noise_figure_db = cfg.ue_noise_figure_db;
    dp.target_los = cfg.target_los;
    dp.reference = cfg.flight.center;

    Rng rng(cfg.seed);
    auto terminals = drop_terminals(layout, dp, tables, rng);
    return Campaign{cfg, std::move(layout), std::move(tables), std::move(terminals)};
}

std::vector<hapsim::TerminalLinks> hapsim::compute_links(const Campaign &campaign, const HapsState &haps)
{
    const auto &cfg = campaign.config;
    std::vector<TerminalLinks> out(campaign.terminals.size());
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        const auto &t = campaign.terminals[i];
        auto &l = out[i];
        l.to_haps = link_geometry(t.position, haps.position);
        l.direction = (t.position - haps.position).normalized();
        l.dl_loss = access_path_loss(cfg.dl_carrier_hz, l.to_haps, t.los, campaign.tables, t.shadow_db);
        l.ul_loss = access_path_loss(cfg.ul_carrier_hz, l.to_haps, t.los, campaign.tables, t.shadow_db);
        l.terminal_gain_dbi = terminal_gain_dbi(t, l.to_haps, cfg.cpe_pattern);
        for (std::size_t b = 0; b < haps.panels.size(); ++b)
        {
            l.dl_beam_gains_dbi.push_back(array_gain(haps.panels[b], haps.dl_weights[b], l.direction, cfg.dl_carrier_hz));
            l.ul_beam_gains_dbi.push_back(array_gain(haps.panels[b], haps.ul_weights[b], l.direction, cfg.ul_carrier_hz));
        }
    }
    return out;
}

hapsim::LinkBudget hapsim::terminal_dl_sinr(const Campaign &campaign, const HapsState &haps,
                                            std::span<const TerminalLinks> links,
                                            std::span<const std::optional<int>> serving, int terminal)
{
    const auto i = static_cast<std::size_t>(terminal);
    if (!serving[i])
        throw SchedulingError("Terminal " + std::to_string(terminal) + " is not attached to any beam.");
    const auto &cfg = campaign.config;
    const auto &l = links[i];
    const auto beam = static_cast<std::size_t>(*serving[i]);

    DownlinkLink dl;
    dl.serving_gain_dbi = l.dl_beam_gains_dbi[beam];
    for (std::size_t b = 0; b < l.dl_beam_gains_dbi.size(); ++b)
        if (b != beam)
            dl.interferer_gains_dbi.push_back(l.dl_beam_gains_dbi[b]);
    dl.path_loss_db = l.dl_loss.total_db;
    dl.rx_gain_dbi = l.terminal_gain_dbi;
    dl.noise_figure_db = campaign.terminals[i].noise_figure_db;
    dl.bandwidth_hz = cfg.dl_bandwidth_hz;
    return dl_sinr(cfg.arch, dl, haps.feeder_db);
}

hapsim::LinkBudget hapsim::terminal_ul_sinr(const Campaign &campaign, std::span<const TerminalLinks> links,
                                            std::span<const std::optional<int>> serving, int terminal,
                                            std::span<const int> interferers)
{
    const auto i = static_cast<std::size_t>(terminal);
    if (!serving[i])
        throw SchedulingError("Terminal " + std::to_string(terminal) + " is not attached.");
    const auto &cfg = campaign.config;
    const auto beam = static_cast<std::size_t>(*serving[i]);

    auto source = [&](std::size_t j)
    {
        return UplinkSource{campaign.terminals[j].tx_power_dbm, links[j].terminal_gain_dbi,
                            links[j].ul_loss.total_db, links[j].ul_beam_gains_dbi[beam]};
    };

    UplinkLink ul;
    ul.signal = source(i);
    ul.bandwidth_hz = cfg.ul_block_bandwidth_hz;
    ul.interferers.reserve(interferers.size());
    for (int j : interferers)
        ul.interferers.push_back(source(static_cast<std::size_t>(j)));
    return ul_sinr(cfg.arch, ul);
}

hapsim::PositionResult hapsim::evaluate_position(const Campaign &campaign, int run_index)
{
    const auto &cfg = campaign.config;
    const HapsState haps = make_haps_state(cfg, campaign.layout, run_index);
    const auto links = compute_links(campaign, haps);
    const std::size_t n = campaign.terminals.size();

    std::vector<std::optional<int>> serving(n);
    for (std::size_t i = 0; i < n; ++i)
        serving[i] = attach(campaign.terminals[i], haps, campaign.layout, cfg.attachment, cfg.dl_carrier_hz);

    const int cells = campaign.layout.cell_count();
    const auto dl_share = schedule_downlink(serving, cells, cfg.dl_bandwidth_hz);

    PositionResult r;
    r.run_index = run_index;
    r.feeder_db = haps.feeder_db;
    r.terminals.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        auto &tr = r.terminals[i];
        tr.serving_beam = serving[i];
        if (!serving[i])
            continue;
        tr.dl = terminal_dl_sinr(campaign, haps, links, serving, static_cast<int>(i));
        if (tr.dl.sinr_db >= cfg.dl_link.sinr_min_db)
            tr.dl_packet = PacketRecord{sinr_to_se(tr.dl.sinr_db, cfg.dl_link) * scheduling_interval_s * dl_share[i],
                                        scheduling_interval_s, dl_share[i]};
    }

    // Uplink: every TTI of the interval, each block carries one terminal per cell.
    const UplinkScheduler scheduler(serving, cells, cfg.ul_block_count());
    const std::int64_t ttis = cfg.ul_tti_count();
    const double tti_s = scheduling_interval_s / static_cast<double>(ttis);
    const double block_hz = cfg.ul_block_bandwidth_hz;
    std::vector<double> ul_bits(n, 0.0), ul_time(n, 0.0);
    std::vector<bool> ul_seen(n, false);
    std::vector<int> active, others;
    for (std::int64_t t = run_index * ttis; t < (run_index + 1) * ttis; ++t)
    {
        for (int b = 0; b < scheduler.block_count(); ++b)
        {
            active.clear();
            for (int c = 0; c < cells; ++c)
                if (const auto k = scheduler.at(c, t, b))
                    active.push_back(*k);
            for (int k : active)
            {
                others.clear();
                for (int j : active)
                    if (j != k)
                        others.push_back(j);
                const auto budget = terminal_ul_sinr(campaign, links, serving, k, others);
                const auto ku = static_cast<std::size_t>(k);
                auto &tr = r.terminals[ku];
                if (!ul_seen[ku] || budget.sinr_db > tr.ul.sinr_db)
                    tr.ul = budget;
                ul_seen[ku] = true;
                // A failed TTI still occupies the block.
                ul_time[ku] += tti_s;
                if (budget.sinr_db >= cfg.ul_link.sinr_min_db)
                    ul_bits[ku] += sinr_to_se(budget.sinr_db, cfg.ul_link) * tti_s * block_hz;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (ul_bits[i] > 0.0)
            r.terminals[i].ul_packet = PacketRecord{ul_bits[i], ul_time[i], block_hz};
    return r;
}

hapsim::SeReport hapsim::summarize(const Campaign &campaign, std::span<const PositionResult> positions)
{
    if (positions.empty())
        throw DomainError("No positions to summarize.");
    const std::size_t n = campaign.terminals.size();
    const double p = static_cast<double>(positions.size());

    SeReport rep;
    rep.name = campaign.config.name;
    std::vector<UserSe> dl(n), ul(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto &t = campaign.terminals[i];
        double dl_sum = 0.0, ul_sum = 0.0;
        bool dl_any = false, ul_any = false;
        std::map<int, int> beam_votes;
        for (const auto &pos : positions)
        {
            const auto &tr = pos.terminals[i];
            std::vector<PacketRecord> dl_packets, ul_packets;
            if (tr.dl_packet)
                dl_packets.push_back(*tr.dl_packet);
            if (tr.ul_packet)
                ul_packets.push_back(*tr.ul_packet);
            const auto d = user_se(dl_packets);
            const auto u = user_se(ul_packets);
            dl_sum += d.se;
            ul_sum += u.se;
            dl_any |= !d.outage;
            ul_any |= !u.outage;
            if (tr.serving_beam)
                ++beam_votes[*tr.serving_beam];
        }
        dl[i] = {dl_sum / p, !dl_any};
        ul[i] = {ul_sum / p, !ul_any};

        UserRow row;
        row.terminal_id = t.id;
        row.x_m = t.position.x;
        row.y_m = t.position.y;
        row.kind = t.kind;
        row.los = t.los;
        int best_votes = 0;
        for (const auto &[beam, votes] : beam_votes)
            if (votes > best_votes)
            {
                best_votes = votes;
                row.serving_cell = beam;
            }
        row.dl = dl[i];
        row.ul = ul[i];
        rep.users.push_back(row);
    }
    rep.dl = aggregate(dl);
    rep.ul = aggregate(ul);
    return rep;
}

hapsim::SeReport hapsim::run_campaign(const Campaign &campaign)
{
    const int count = campaign.config.flight.position_count;
    const int workers = std::clamp(campaign.config.threads, 1, count);
    std::vector<PositionResult> results(static_cast<std::size_t>(count));

    if (workers == 1)
    {
        for (int run = 0; run < count; ++run)
            results[static_cast<std::size_t>(run)] = evaluate_position(campaign, run);
    }
    else
    {
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        {
            std::vector<std::jthread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w]
                                  {
                                      try
                                      {
                                          for (int run = w; run < count; run += workers)
                                              results[static_cast<std::size_t>(run)] = evaluate_position(campaign, run);
                                      }
                                      catch (...)
                                      {
                                          errors[static_cast<std::size_t>(w)] = std::current_exception();
                                      } });
        }
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    return summarize(campaign, results);
}

hapsim::SeReport hapsim::run_campaign(const ScenarioConfig &cfg)
{
    return run_campaign(prepare_campaign(cfg));
}
