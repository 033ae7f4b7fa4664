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

#include "hapsim/report.hpp"
#include "hapsim/error.hpp"
#include "hapsim/text.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

namespace
{
    using namespace hapsim;

    const char *user_header = "terminal_id,x_m,y_m,kind,los,serving_cell,dl_se,ul_se,outage";
    const char *consumption_header =
        "x_m,y_m,d1_m,d2_m,d3_m,d1_d3_squared,within_distance_bound,h_relay,h_source,rhs,margin,verdict";

    std::string outage_label(const UserRow &r)
    {
        if (r.dl.outage && r.ul.outage)
            return "both";
        if (r.dl.outage)
            return "dl";
        if (r.ul.outage)
            return "ul";
        return "none";
    }

    struct Row
    {
        int line = 0;
        std::vector<std::string> fields;
        std::vector<int> columns; // 1-based start column of each field

        [[noreturn]] void fail(std::size_t i, const std::string &what) const
        {
            throw ParseError(what + " '" + fields[i] + "'", line, columns[i]);
        }

        double num(std::size_t i) const
        {
            double d;
            if (!text::parse_double(fields[i], d))
                fail(i, "not a number");
            return d;
        }

        int integer(std::size_t i) const
        {
            long long v;
            if (!text::parse_int64(fields[i], v))
                fail(i, "not an integer");
            return static_cast<int>(v);
        }
    };

    // Reads a header line and the data rows of a simple CSV (no quoting).
    std::vector<Row> read_rows(std::istream &in, const std::string &header, std::size_t columns)
    {
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (!text::trim(line).empty())
                break;
        }
        if (text::trim(line) != header)
            throw ParseError("unexpected CSV header", line_no, 1);

        std::vector<Row> rows;
        while (std::getline(in, line))
        {
            ++line_no;
            if (text::trim(line).empty())
                continue;
            const auto f = text::split(line, ',');
            if (f.size() != columns)
                throw ParseError("expected " + std::to_string(columns) + " fields", line_no, 1);
            Row r;
            r.line = line_no;
            for (const auto &field : f)
            {
                const auto t = text::trim(field);
                r.fields.emplace_back(t);
                r.columns.push_back(static_cast<int>(t.data() - line.data()) + 1);
            }
            rows.push_back(std::move(r));
        }
        return rows;
    }

    double num(const std::string &s, int line)
    {
        double d;
        if (!text::parse_double(s, d))
            throw ParseError("not a number '" + s + "'", line, 1);
        return d;
    }

    int integer(const std::string &s, int line)
    {
        long long v;
        if (!text::parse_int64(s, v))
            throw ParseError("not an integer '" + s + "'", line, 1);
        return static_cast<int>(v);
    }
}

void hapsim::write_user_csv(std::ostream &out, const SeReport &report)
{
    out << user_header << '\n';
    for (const auto &r : report.users)
        out << r.terminal_id << ',' << text::format_double(r.x_m) << ',' << text::format_double(r.y_m) << ','
            << to_string(r.kind) << ',' << (r.los == LosState::los ? "los" : "nlos") << ',' << r.serving_cell << ','
            << text::format_double(r.dl.se) << ',' << text::format_double(r.ul.se) << ',' << outage_label(r) << '\n';
}

std::vector<hapsim::UserRow> hapsim::read_user_csv(std::istream &in)
{
    std::vector<UserRow> out;
    for (const auto &row : read_rows(in, user_header, 9))
    {
        const auto &f = row.fields;
        UserRow r;
        r.terminal_id = row.integer(0);
        r.x_m = row.num(1);
        r.y_m = row.num(2);
        const auto kind = parse_terminal_kind(f[3]);
        if (!kind)
            row.fail(3, "bad terminal kind");
        r.kind = *kind;
        if (f[4] != "los" && f[4] != "nlos")
            row.fail(4, "bad LOS state");
        r.los = f[4] == "los" ? LosState::los : LosState::nlos;
        r.serving_cell = row.integer(5);
        r.dl.se = row.num(6);
        r.ul.se = row.num(7);
        const auto &o = f[8];
        if (o != "none" && o != "dl" && o != "ul" && o != "both")
            row.fail(8, "bad outage label");
        r.dl.outage = o == "dl" || o == "both";
        r.ul.outage = o == "ul" || o == "both";
        out.push_back(r);
    }
    return out;
}

void hapsim::write_report(std::ostream &out, const ScenarioConfig &cfg, const SeReport &report)
{
    out << "name = " << report.name << '\n'
        << "architecture = " << to_string(cfg.arch.architecture) << '\n'
        << "layout = " << to_string(cfg.layout) << '\n'
        << "terminal_kind = " << to_string(cfg.terminal_kind) << '\n'
        << "attachment = " << to_string(cfg.attachment) << '\n'
        << "seed = " << cfg.seed << '\n'
        << "terminals = " << report.users.size() << '\n'
        << "positions = " << cfg.flight.position_count << '\n'
        << "dl_mean_se = " << text::format_fixed(report.dl.mean_se, 6) << '\n'
        << "dl_cell_edge_se = " << text::format_fixed(report.dl.cell_edge_se, 6) << '\n'
        << "ul_mean_se = " << text::format_fixed(report.ul.mean_se, 6) << '\n'
        << "ul_cell_edge_se = " << text::format_fixed(report.ul.cell_edge_se, 6) << '\n'
        << "dl_outage_count = " << report.dl.outage_count << '\n'
        << "ul_outage_count = " << report.ul.outage_count << '\n';
}

hapsim::ReportSummary hapsim::read_report(std::istream &in)
{
    std::map<std::string, std::pair<std::string, int>> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (text::trim(line).empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line_no, 1);
        kv[std::string(text::trim(std::string_view(line).substr(0, eq)))] = {
            std::string(text::trim(std::string_view(line).substr(eq + 1))), line_no};
    }
    auto get = [&](const std::string &k) -> const std::pair<std::string, int> &
    {
        const auto it = kv.find(k);
        if (it == kv.end())
            throw ParseError("report is missing '" + k + "'", line_no, 1);
        return it->second;
    };
    auto real = [&](const std::string &k) { const auto &[v, l] = get(k); return num(v, l); };
    auto count = [&](const std::string &k) { const auto &[v, l] = get(k); return integer(v, l); };
    ReportSummary s;
    s.name = get("name").first;
    s.dl = {real("dl_mean_se"), real("dl_cell_edge_se"), count("dl_outage_count")};
    s.ul = {real("ul_mean_se"), real("ul_cell_edge_se"), count("ul_outage_count")};
    return s;
}

void hapsim::write_cdf(std::ostream &out, std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    out << "# se_bps_per_hz cumulative_fraction\n";
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out << text::format_double(values[i]) << ' ' << text::format_double(static_cast<double>(i + 1) / n) << '\n';
}

std::vector<std::pair<double, double>> hapsim::read_cdf(std::istream &in)
{
    std::vector<std::pair<double, double>> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto t = text::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto f = text::split(t, ' ');
        double a, b;
        if (f.size() != 2 || !text::parse_double(f[0], a) || !text::parse_double(f[1], b))
            throw ParseError("expected two numbers", line_no, 1);
        out.emplace_back(a, b);
    }
    return out;
}

void hapsim::write_consumption_csv(std::ostream &out, const RelayAssessment &a)
{
    out << consumption_header << '\n';
    for (const auto &r : a.rows)
        out << text::format_double(r.terminal.x) << ',' << text::format_double(r.terminal.y) << ','
            << text::format_double(r.d1_m) << ',' << text::format_double(r.d2_m) << ','
            << text::format_double(r.d3_m) << ',' << text::format_double(r.d1_d3_squared) << ','
            << (r.within_distance_bound ? "true" : "false") << ',' << text::format_double(a.h_relay) << ','
            << text::format_double(a.h_source) << ',' << text::format_double(r.advantage.rhs) << ','
            << text::format_double(r.advantage.margin) << ',' << to_string(r.advantage.verdict) << '\n';
}

std::vector<hapsim::ConsumptionRow> hapsim::read_consumption_csv(std::istream &in)
{
    std::vector<ConsumptionRow> out;
    for (const auto &row : read_rows(in, consumption_header, 12))
    {
        const auto &f = row.fields;
        if (f[6] != "true" && f[6] != "false")
            row.fail(6, "bad boolean");
        if (f[11] != "relay_preferred" && f[11] != "direct_preferred")
            row.fail(11, "bad verdict");
        out.push_back({row.num(0), row.num(1), row.num(2), row.num(3), row.num(4), row.num(5), f[6] == "true",
                       row.num(7), row.num(8), row.num(9), row.num(10),
                       f[11] == "relay_preferred" ? RelayVerdict::relay_preferred : RelayVerdict::direct_preferred});
    }
    return out;
}
