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

#ifndef HAPSIM_CHANNEL_HPP
#define HAPSIM_CHANNEL_HPP

#include "hapsim/geometry.hpp"
#include "hapsim/rng.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hapsim
{
    constexpr double speed_of_light_mps = 299792458.0;

    enum class LosState
    {
        los,
        nlos
    };

    struct NtnBin
    {
        double elevation_deg;
        double los_probability;
        double shadow_std_los_db;
        double shadow_std_nlos_db;
        double clutter_loss_nlos_db;
    };

    /// Elevation-binned large-scale parameters (LOS probability, shadow-fading spread, clutter
    /// loss). Lookup is nearest-bin; elevations outside the covered range clamp to the end bins.
    class NtnTables
    {
    public:
        explicit NtnTables(std::vector<NtnBin> bins);

        // Rural S-band values, identical to data/ntn_rural_sband.csv.
        static NtnTables rural_default();

        // CSV with header elevation_deg,los_probability,shadow_std_los_db,shadow_std_nlos_db,
        // clutter_loss_nlos_db; '#' starts a comment line. `source` names the input in errors.
        static NtnTables parse(std::istream &in, const std::string &source = "<stream>");
        static NtnTables load(const std::string &path);

        const NtnBin &lookup(double elevation_deg) const;
        bool in_range(double elevation_deg) const;
        const std::vector<NtnBin> &bins() const { return bins_; }

    private:
        std::vector<NtnBin> bins_;
    };

    double fspl_db(double carrier_hz, double distance_m);

    LosState assign_los(double elevation_deg, const NtnTables &tables, Rng &rng);

    struct LinkLoss
    {
        double fspl_db = 0.0;
        double shadow_db = 0.0;
        double clutter_db = 0.0;
        double total_db = 0.0;
        LosState los_state = LosState::los;
    };

    LinkLoss access_path_loss(double carrier_hz, const LinkGeometry &geom, LosState los, const NtnTables &tables,
                              double shadow_draw_db);

    double feeder_loss_db(const Point3 &haps, const Point3 &gateway, double carrier_hz = 3.65e9);
}

#endif
