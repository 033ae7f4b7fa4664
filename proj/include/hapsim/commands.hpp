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

#ifndef HAPSIM_COMMANDS_HPP
#define HAPSIM_COMMANDS_HPP

#include "hapsim/consumption.hpp"
#include "hapsim/scenario.hpp"
#include "hapsim/simulation.hpp"

#include <filesystem>
#include <span>
#include <vector>

namespace hapsim
{
    struct RunArtifacts
    {
        std::filesystem::path users_csv;
        std::filesystem::path report;
        std::filesystem::path dl_cdf;
        std::filesystem::path ul_cdf;
        SeReport result;
    };

    // Runs the campaign and writes <name>.users.csv, <name>.report.txt, <name>.dl_cdf.txt and
    // <name>.ul_cdf.txt into out_dir. Every file is read back and checked before returning.
    RunArtifacts cmd_run(const ScenarioConfig &cfg, const std::filesystem::path &out_dir);

    // One line per run: name and the four aggregate SE values.
    void write_summary(const std::filesystem::path &path, std::span<const RunArtifacts> runs);

    // Relay assessment along the +x axis from the flight-circle center out to
    // cfg.sweep_max_distance_m, with the platform at the circle center.
    RelayAssessment consumption_assessment(const ScenarioConfig &cfg);

    // Writes <name>.consumption.csv into out_dir and reads it back.
    std::filesystem::path cmd_consumption(const ScenarioConfig &cfg, const std::filesystem::path &out_dir);
}

#endif
