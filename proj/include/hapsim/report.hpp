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

#ifndef HAPSIM_REPORT_HPP
#define HAPSIM_REPORT_HPP

#include "hapsim/consumption.hpp"
#include "hapsim/scenario.hpp"
#include "hapsim/simulation.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hapsim
{
    // Per-user CSV:
    // terminal_id,x_m,y_m,kind,los,serving_cell,dl_se,ul_se,outage
    // `outage` is one of none, dl, ul, both.
    void write_user_csv(std::ostream &out, const SeReport &report);
    std::vector<UserRow> read_user_csv(std::istream &in);

    // Aggregate report, `key = value` lines.
    void write_report(std::ostream &out, const ScenarioConfig &cfg, const SeReport &report);

    struct ReportSummary
    {
        std::string name;
        DirectionStats dl{};
        DirectionStats ul{};
    };
    ReportSummary read_report(std::istream &in);

    // Empirical CDF: header line then `se cumulative_fraction` pairs, SE ascending.
    void write_cdf(std::ostream &out, std::vector<double> values);
    std::vector<std::pair<double, double>> read_cdf(std::istream &in);

    // Relay assessment CSV:
    // x_m,y_m,d1_m,d2_m,d3_m,d1_d3_squared,within_distance_bound,h_relay,h_source,rhs,margin,verdict
    void write_consumption_csv(std::ostream &out, const RelayAssessment &assessment);

    struct ConsumptionRow
    {
        double x_m, y_m, d1_m, d2_m, d3_m, d1_d3_squared;
        bool within_distance_bound;
        double h_relay, h_source, rhs, margin;
        RelayVerdict verdict;
    };
    std::vector<ConsumptionRow> read_consumption_csv(std::istream &in);
}

#endif
