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

#include "hapsim/channel.hpp"
#include "hapsim/error.hpp"
#include "hapsim/text.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

hapsim::NtnTables::NtnTables(std::vector<NtnBin> bins) : bins_(std::move(bins))
{
    if (bins_.empty())
        throw ConfigError("NTN table has no elevation bins.");
    std::sort(bins_.begin(), bins_.end(),
              [](const NtnBin &a, const NtnBin &b) { return a.elevation_deg < b.elevation_deg; });
    for (std::size_t i = 0; i < bins_.size(); ++i)
    {
        const auto &b = bins_[i];
        const std::string at = " (elevation bin " + text::format_double(b.elevation_deg) + ")";
        if (!(b.elevation_deg > 0.0 && b.elevation_deg <= 90.0))
            throw ConfigError("NTN table elevation must be in (0, 90]" + at);
        if (!(b.los_probability >= 0.0 && b.los_probability <= 1.0))
            throw ConfigError("NTN table LOS probability must be in [0, 1]" + at);
        if (!(b.shadow_std_los_db >= 0.0) || !(b.shadow_std_nlos_db >= 0.0))
            throw ConfigError("NTN table shadow-fading std cannot be negative" + at);
        if (!(b.clutter_loss_nlos_db >= 0.0))
            throw ConfigError("NTN table clutter loss cannot be negative" + at);
        if (i > 0)
        {
            if (b.elevation_deg == bins_[i - 1].elevation_deg)
                throw ConfigError("NTN table has a duplicate elevation bin" + at);
            if (b.los_probability < bins_[i - 1].los_probability)
                throw ConfigError("NTN table LOS probability must not decrease with elevation" + at);
        }
    }
}

hapsim::NtnTables hapsim::NtnTables::rural_default()
{
    return NtnTables({
        {10.0, 0.782, 1.79, 8.93, 19.52},
        {20.0, 0.869, 1.14, 9.08, 18.17},
        {30.0, 0.919, 1.14, 8.78, 18.42},
        {40.0, 0.929, 0.92, 10.25, 18.28},
        {50.0, 0.935, 1.42, 10.56, 18.63},
        {60.0, 0.940, 1.56, 10.74, 17.68},
        {70.0, 0.949, 0.85, 10.17, 16.50},
        {80.0, 0.952, 0.72, 11.52, 16.30},
        {90.0, 0.998, 0.72, 11.52, 16.30},
    });
}

hapsim::NtnTables hapsim::NtnTables::parse(std::istream &in, const std::string &source)
{
    std::vector<NtnBin> bins;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto t = text::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto fields = text::split(t, ',');
        if (!header_seen)
        {
            static const char *expected[] = {"elevation_deg", "los_probability", "shadow_std_los_db",
                                             "shadow_std_nlos_db", "clutter_loss_nlos_db"};
            if (fields.size() != 5)
                throw ParseError(source + ": NTN table header must have 5 columns", line_no, 1);
            for (int i = 0; i < 5; ++i)
                if (text::trim(fields[i]) != expected[i])
                    throw ParseError(source + ": unexpected NTN table column '" + std::string(text::trim(fields[i])) +
                                         "', expected '" + expected[i] + "'",
                                     line_no, static_cast<int>(fields[i].data() - t.data()) + 1);
            header_seen = true;
            continue;
        }
        if (fields.size() != 5)
            throw ParseError(source + ": NTN table row must have 5 fields", line_no, 1);
        double v[5];
        for (int i = 0; i < 5; ++i)
            if (!text::parse_double(fields[i], v[i]))
                throw ParseError(source + ": not a number '" + std::string(text::trim(fields[i])) + "'", line_no,
                                 static_cast<int>(fields[i].data() - t.data()) + 1);
        bins.push_back({v[0], v[1], v[2], v[3], v[4]});
    }
    if (!header_seen)
        throw ParseError(source + ": NTN table is empty", line_no, 1);
    return NtnTables(std::move(bins));
}

hapsim::NtnTables hapsim::NtnTables::load(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("Cannot open NTN table '" + path + "'.");
    return parse(f, path);
}

bool hapsim::NtnTables::in_range(double elevation_deg) const
{
    return elevation_deg >= bins_.front().elevation_deg && elevation_deg <= bins_.back().elevation_deg;
}

const hapsim::NtnBin &hapsim::NtnTables::lookup(double elevation_deg) const
{
    // Nearest bin; ties go to the higher bin.
    const NtnBin *best = &bins_.front();
    double best_d = std::abs(elevation_deg - best->elevation_deg);
    for (const auto &b : bins_)
    {
        const double d = std::abs(elevation_deg - b.elevation_deg);
        if (d <= best_d)
        {
            best = &b;
            best_d = d;
        }
    }
    return *best;
}

double hapsim::fspl_db(double carrier_hz, double distance_m)
{
    if (!(carrier_hz > 0.0) || !(distance_m > 0.0))
        throw DomainError("Free-space path loss needs a positive carrier and distance.");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * carrier_hz / speed_of_light_mps);
}

hapsim::LosState hapsim::assign_los(double elevation_deg, const NtnTables &tables, Rng &rng)
{
    if (!tables.in_range(elevation_deg))
        std::clog << "hapsim: elevation " << elevation_deg << " deg outside NTN table range, using nearest bin\n";
    const auto &bin = tables.lookup(elevation_deg);
    return rng.bernoulli(bin.los_probability) ? LosState::los : LosState::nlos;
}

hapsim::LinkLoss hapsim::access_path_loss(double carrier_hz, const LinkGeometry &geom, LosState los,
                                          const NtnTables &tables, double shadow_draw_db)
{
    LinkLoss l;
    l.los_state = los;
    l.fspl_db = fspl_db(carrier_hz, geom.slant_range_m);
    l.shadow_db = shadow_draw_db;
    l.clutter_db = los == LosState::nlos ? tables.lookup(geom.elevation_deg).clutter_loss_nlos_db : 0.0;
    l.total_db = l.fspl_db + l.shadow_db + l.clutter_db;
    return l;
}

double hapsim::feeder_loss_db(const Point3 &haps, const Point3 &gateway, double carrier_hz)
{
    return fspl_db(carrier_hz, (haps - gateway).norm());
}
