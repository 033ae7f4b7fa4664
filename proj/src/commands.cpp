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

#include "hapsim/commands.hpp"
#include "hapsim/error.hpp"
#include "hapsim/report.hpp"
#include "hapsim/text.hpp"

#include <cmath>
#include <fstream>

namespace
{
    namespace fs = std::filesystem;

    void ensure_dir(const fs::path &dir)
    {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec)
            throw std::runtime_error("Cannot create output directory '" + dir.string() + "': " + ec.message());
    }

    template <class Writer>
    void write_file(const fs::path &path, Writer &&writer)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("Cannot open '" + path.string() + "' for writing.");
        writer(f);
        f.flush();
        if (!f)
            throw std::runtime_error("Write to '" + path.string() + "' failed.");
    }

    std::ifstream open_read(const fs::path &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("Cannot reopen '" + path.string() + "' for validation.");
        return f;
    }

    void check(bool ok, const fs::path &path, const std::string &what)
    {
        if (!ok)
            throw std::runtime_error("Validation of '" + path.string() + "' failed: " + what);
    }
}

hapsim::RunArtifacts hapsim::cmd_run(const ScenarioConfig &cfg, const fs::path &out_dir)
{
    RunArtifacts a;
    a.result = run_campaign(cfg);
    ensure_dir(out_dir);

    a.users_csv = out_dir / (cfg.name + ".users.csv");
    a.report = out_dir / (cfg.name + ".report.txt");
    a.dl_cdf = out_dir / (cfg.name + ".dl_cdf.txt");
    a.ul_cdf = out_dir / (cfg.name + ".ul_cdf.txt");

    std::vector<double> dl, ul;
    for (const auto &u : a.result.users)
    {
        dl.push_back(u.dl.se);
        ul.push_back(u.ul.se);
    }

    write_file(a.users_csv, [&](std::ostream &o) { write_user_csv(o, a.result); });
    write_file(a.report, [&](std::ostream &o) { write_report(o, cfg, a.result); });
    write_file(a.dl_cdf, [&](std::ostream &o) { write_cdf(o, dl); });
    write_file(a.ul_cdf, [&](std::ostream &o) { write_cdf(o, ul); });

    try
    {
        auto users_in = open_read(a.users_csv);
        const auto rows = read_user_csv(users_in);
        check(rows.size() == a.result.users.size(), a.users_csv, "row count mismatch");

        auto report_in = open_read(a.report);
        const auto summary = read_report(report_in);
        check(summary.name == cfg.name, a.report, "name mismatch");

        auto dl_in = open_read(a.dl_cdf);
        auto ul_in = open_read(a.ul_cdf);
        check(read_cdf(dl_in).size() == dl.size(), a.dl_cdf, "point count mismatch");
        check(read_cdf(ul_in).size() == ul.size(), a.ul_cdf, "point count mismatch");
    }
    catch (const ParseError &e)
    {
        throw std::runtime_error(std::string("Artifact validation failed: ") + e.what());
    }
    return a;
}

void hapsim::write_summary(const fs::path &path, std::span<const RunArtifacts> runs)
{
    write_file(path, [&](std::ostream &o)
               {
                   o << "name,dl_mean_se,dl_cell_edge_se,ul_mean_se,ul_cell_edge_se\n";
                   for (const auto &r : runs)
                       o << r.result.name << ',' << text::format_fixed(r.result.dl.mean_se, 6) << ','
                         << text::format_fixed(r.result.dl.cell_edge_se, 6) << ','
                         << text::format_fixed(r.result.ul.mean_se, 6) << ','
                         << text::format_fixed(r.result.ul.cell_edge_se, 6) << '\n'; });
}

hapsim::RelayAssessment hapsim::consumption_assessment(const ScenarioConfig &cfg)
{
    cfg.validate();
    std::vector<Point3> terminals;
    const int steps = static_cast<int>(std::floor(cfg.sweep_max_distance_m / cfg.sweep_step_m + 1e-9));
    for (int i = 0; i <= steps; ++i)
        terminals.push_back({cfg.flight.center.x + i * cfg.sweep_step_m, cfg.flight.center.y, 0.0});
    return haps_relay_assessment(cfg.flight.center, cfg.gateway, terminals, cfg.chains);
}

fs::path hapsim::cmd_consumption(const ScenarioConfig &cfg, const fs::path &out_dir)
{
    const auto assessment = consumption_assessment(cfg);
    ensure_dir(out_dir);
    const auto path = out_dir / (cfg.name + ".consumption.csv");
    write_file(path, [&](std::ostream &o) { write_consumption_csv(o, assessment); });
    try
    {
        auto in = open_read(path);
        check(read_consumption_csv(in).size() == assessment.rows.size(), path, "row count mismatch");
    }
    catch (const ParseError &e)
    {
        throw std::runtime_error(std::string("Artifact validation failed: ") + e.what());
    }
    return path;
}
