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
#include "hapsim/channel.hpp"
#include "hapsim/commands.hpp"
#include "hapsim/config.hpp"
#include "hapsim/consumption.hpp"
#include "hapsim/error.hpp"
#include "hapsim/simulation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace hapsim;

namespace
{
    py::dict stats_dict(const DirectionStats &s)
    {
        py::dict d;
        d["mean_se"] = s.mean_se;
        d["cell_edge_se"] = s.cell_edge_se;
        d["outage_count"] = s.outage_count;
        return d;
    }

    py::dict report_dict(const SeReport &r)
    {
        py::list users;
        for (const auto &u : r.users)
        {
            py::dict d;
            d["terminal_id"] = u.terminal_id;
            d["x_m"] = u.x_m;
            d["y_m"] = u.y_m;
            d["kind"] = to_string(u.kind);
            d["los"] = u.los == LosState::los;
            d["serving_cell"] = u.serving_cell;
            d["dl_se"] = u.dl.se;
            d["ul_se"] = u.ul.se;
            d["dl_outage"] = u.dl.outage;
            d["ul_outage"] = u.ul.outage;
            users.append(d);
        }
        py::dict out;
        out["name"] = r.name;
        out["dl"] = stats_dict(r.dl);
        out["ul"] = stats_dict(r.ul);
        out["users"] = users;
        return out;
    }

    std::vector<EfficiencyStage> stages_from(const std::vector<std::pair<double, double>> &chain)
    {
        std::vector<EfficiencyStage> out;
        for (const auto &[g, eta] : chain)
            out.push_back({g, eta});
        return out;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "HAPS bent-pipe / regenerative system simulator";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
    py::register_exception<CoverageError>(m, "CoverageError", PyExc_RuntimeError);
    py::register_exception<SchedulingError>(m, "SchedulingError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<ScenarioConfig>(m, "Scenario")
        .def(py::init<>())
        .def_static("from_preset", &preset, py::arg("name"))
        .def_static("from_text", &parse_config_string, py::arg("text"))
        .def_static("load", &load_config, py::arg("path"))
        .def("to_text", &dump_config)
        .def("validate", &ScenarioConfig::validate)
        .def_readwrite("name", &ScenarioConfig::name)
        .def_readwrite("seed", &ScenarioConfig::seed)
        .def_readwrite("threads", &ScenarioConfig::threads)
        .def_readwrite("terminal_count", &ScenarioConfig::terminal_count)
        .def_property(
            "architecture", [](const ScenarioConfig &c) { return to_string(c.arch.architecture); },
            [](ScenarioConfig &c, const std::string &v)
            {
                const auto a = parse_architecture(v);
                if (!a)
                    throw ConfigError("architecture: expected bp or rg.");
                c.arch.architecture = *a;
            })
        .def_property(
            "model_repeater_noise", [](const ScenarioConfig &c) { return c.arch.model_repeater_noise; },
            [](ScenarioConfig &c, bool v) { c.arch.model_repeater_noise = v; })
        .def("__repr__", [](const ScenarioConfig &c) { return "<Scenario " + c.name + ">"; });

    m.def("preset_names", &preset_names);
    m.def(
        "run_campaign", [](const ScenarioConfig &cfg)
        {
            SeReport r;
            {
                py::gil_scoped_release release;
                r = run_campaign(cfg);
            }
            return report_dict(r);
        },
        py::arg("scenario"), "Runs every platform position and returns per-user and aggregate SE.");
    m.def(
        "run",
        [](const ScenarioConfig &cfg, const std::string &out_dir)
        {
            RunArtifacts a;
            {
                py::gil_scoped_release release;
                a = cmd_run(cfg, out_dir);
            }
            py::dict files;
            files["users_csv"] = a.users_csv.string();
            files["report"] = a.report.string();
            files["dl_cdf"] = a.dl_cdf.string();
            files["ul_cdf"] = a.ul_cdf.string();
            auto out = report_dict(a.result);
            out["files"] = files;
            return out;
        },
        py::arg("scenario"), py::arg("out_dir"), "Runs a campaign and writes the CSV, report and CDF files.");
    m.def(
        "consumption", [](const ScenarioConfig &cfg)
        {
            const auto a = consumption_assessment(cfg);
            py::list rows;
            for (const auto &r : a.rows)
            {
                py::dict d;
                d["x_m"] = r.terminal.x;
                d["d1_m"] = r.d1_m;
                d["d2_m"] = r.d2_m;
                d["d3_m"] = r.d3_m;
                d["d1_d3_squared"] = r.d1_d3_squared;
                d["within_distance_bound"] = r.within_distance_bound;
                d["rhs"] = r.advantage.rhs;
                d["margin"] = r.advantage.margin;
                d["verdict"] = to_string(r.advantage.verdict);
                rows.append(d);
            }
            py::dict out;
            out["h_relay"] = a.h_relay;
            out["h_source"] = a.h_source;
            out["rows"] = rows;
            return out;
        },
        py::arg("scenario"));

    m.def("fspl_db", &fspl_db, py::arg("carrier_hz"), py::arg("distance_m"));
    m.def(
        "feeder_loss_db",
        [](std::array<double, 3> haps, std::array<double, 3> gateway, double carrier_hz)
        { return feeder_loss_db({haps[0], haps[1], haps[2]}, {gateway[0], gateway[1], gateway[2]}, carrier_hz); },
        py::arg("haps"), py::arg("gateway"), py::arg("carrier_hz") = 3.65e9);
    m.def(
        "element_gain",
        [](double peak_dbi, double hpbw_deg, double front_to_back_db, double az_deg, double el_deg)
        { return element_gain({peak_dbi, hpbw_deg, hpbw_deg, front_to_back_db}, az_deg, el_deg); },
        py::arg("peak_dbi"), py::arg("hpbw_deg"), py::arg("front_to_back_db"), py::arg("az_deg"), py::arg("el_deg"));
    m.def(
        "cascade_noise_figure_db",
        [](const std::vector<std::pair<double, double>> &stages)
        {
            std::vector<CascadeStage> s;
            for (const auto &[g, nf] : stages)
                s.push_back(CascadeStage::from_db(g, nf));
            return cascade_noise_figure_db(s);
        },
        py::arg("stages"), "Stages as (gain_db, noise_figure_db) pairs, input first.");
    m.def("thermal_noise_dbm", &thermal_noise_dbm, py::arg("bandwidth_hz"), py::arg("noise_figure_db") = 0.0);
    m.def(
        "repeater_noise_at_ue_dbm", [](double access_loss_db, double bandwidth_hz, double gain_db, double nf_db)
        { return repeater_noise_at_ue_dbm({gain_db, nf_db}, access_loss_db, bandwidth_hz); },
        py::arg("access_loss_db"), py::arg("bandwidth_hz") = 20e6, py::arg("gain_db") = 105.0,
        py::arg("noise_figure_db") = 7.0);
    m.def(
        "sinr_to_se", [](double sinr_db, double attenuation, double sinr_min_db, double se_max)
        { return sinr_to_se(sinr_db, {attenuation, sinr_min_db, se_max}); },
        py::arg("sinr_db"), py::arg("attenuation") = 0.6, py::arg("sinr_min_db") = -10.0, py::arg("se_max") = 4.4);
    m.def(
        "aggregate",
        [](const std::vector<double> &se)
        {
            std::vector<UserSe> users;
            for (double v : se)
                users.push_back({v, v == 0.0});
            return stats_dict(aggregate(users));
        },
        py::arg("se"), "Mean and cell-edge SE of a list of per-user values; zeros count as outages.");
    m.def(
        "power_efficiency_factor",
        [](const std::vector<std::pair<double, double>> &chain) { return power_efficiency_factor(stages_from(chain)); },
        py::arg("chain"), "Stages as (linear gain, efficiency) pairs, source first.");
    m.def(
        "relay_advantage",
        [](double d1, double d2, double d3, double g_relay, double g_sink, double h_relay, double h_source)
        {
            const auto a = relay_advantage({d1, d2, d3, g_relay, g_sink, h_relay, h_source});
            py::dict d;
            d["rhs"] = a.rhs;
            d["margin"] = a.margin;
            d["verdict"] = to_string(a.verdict);
            return d;
        },
        py::arg("d1_m"), py::arg("d2_m"), py::arg("d3_m"), py::arg("g_rx_relay"), py::arg("g_rx_sink"),
        py::arg("h_relay"), py::arg("h_source"));
}
