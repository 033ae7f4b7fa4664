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

// hapsim command-line front end.
//
//   hapsim run --preset single-cell-bp --out results/
//   hapsim run --preset multi-cell --seed 7          (group: all eight seven-cell presets)
//   hapsim run --config my.cfg --arch rg
//   hapsim consumption --preset single-cell-bp
//   hapsim validate --config my.cfg                  (prints the canonical config)

#include "hapsim/commands.hpp"
#include "hapsim/config.hpp"
#include "hapsim/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{
    struct CommonOptions
    {
        std::string config_path;
        std::vector<std::string> presets;
        std::optional<unsigned long long> seed;
        std::optional<std::string> arch;
        std::optional<int> threads;
        std::string out_dir;
    };

    void add_common(CLI::App *cmd, CommonOptions &o, bool with_out)
    {
        cmd->add_option("--config", o.config_path, "Scenario file (key = value)")->check(CLI::ExistingFile);
        cmd->add_option("--preset", o.presets, "Preset name or group (single-cell, multi-cell, all); repeatable");
        cmd->add_option("--seed", o.seed, "Override the drop seed");
        cmd->add_option("--arch", o.arch, "Override the architecture")->check(CLI::IsMember({"bp", "rg"}));
        cmd->add_option("--threads", o.threads, "Worker threads per campaign")->check(CLI::PositiveNumber);
        if (with_out)
            cmd->add_option("--out", o.out_dir, "Output directory (default: output_dir from the config)");
    }

    void apply_overrides(hapsim::ScenarioConfig &cfg, const CommonOptions &o)
    {
        if (o.seed)
            cfg.seed = *o.seed;
        if (o.arch)
            cfg.arch.architecture = *hapsim::parse_architecture(*o.arch);
        if (o.threads)
            cfg.threads = *o.threads;
        if (!o.out_dir.empty())
            cfg.output_dir = o.out_dir;
        cfg.validate();
    }

    std::vector<hapsim::ScenarioConfig> resolve(const CommonOptions &o)
    {
        std::vector<hapsim::ScenarioConfig> out;
        if (!o.config_path.empty() && !o.presets.empty())
            throw hapsim::ConfigError("Use either --config or --preset, not both.");
        if (!o.config_path.empty())
            out.push_back(hapsim::load_config(o.config_path));
        for (const auto &p : o.presets)
        {
            const auto group = hapsim::preset_group(p);
            if (group.empty())
                out.push_back(hapsim::preset(p));
            else
                for (const auto &name : group)
                    out.push_back(hapsim::preset(name));
        }
        if (out.empty())
            out.push_back(hapsim::ScenarioConfig{});
        for (auto &cfg : out)
            apply_overrides(cfg, o);
        return out;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"HAPS bent-pipe / regenerative system simulator"};
    app.require_subcommand(0, 1);

    CommonOptions run_opts, cons_opts, val_opts;
    auto *run = app.add_subcommand("run", "Run campaigns and write per-user CSV, report and CDF files");
    add_common(run, run_opts, true);
    auto *cons = app.add_subcommand("consumption", "Consumption-factor relay assessment CSV");
    add_common(cons, cons_opts, true);
    auto *val = app.add_subcommand("validate", "Validate a scenario and print its canonical form");
    add_common(val, val_opts, false);
    bool list_presets = false;
    app.add_flag("--list-presets", list_presets, "Print the preset names and exit");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e);
    }

    if (list_presets)
    {
        for (const auto &n : hapsim::preset_names())
            std::cout << n << '\n';
        return 0;
    }
    if (app.get_subcommands().empty())
    {
        std::cerr << app.help();
        return 2;
    }

    try
    {
        if (*run)
        {
            std::vector<hapsim::RunArtifacts> runs;
            std::filesystem::path out_dir;
            for (const auto &cfg : resolve(run_opts))
            {
                out_dir = cfg.output_dir;
                runs.push_back(hapsim::cmd_run(cfg, cfg.output_dir));
                const auto &r = runs.back().result;
                std::cout << cfg.name << ": DL mean " << r.dl.mean_se << " edge " << r.dl.cell_edge_se
                          << " | UL mean " << r.ul.mean_se << " edge " << r.ul.cell_edge_se << '\n';
            }
            if (runs.size() > 1)
                hapsim::write_summary(out_dir / "summary.csv", runs);
        }
        else if (*cons)
        {
            for (const auto &cfg : resolve(cons_opts))
                std::cout << hapsim::cmd_consumption(cfg, cfg.output_dir).string() << '\n';
        }
        else if (*val)
        {
            for (const auto &cfg : resolve(val_opts))
                std::cout << hapsim::dump_config(cfg);
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "hapsim: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
