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

#include "hapsim/geometry.hpp"
#include "hapsim/error.hpp"

#include <string>

hapsim::Vec3 hapsim::Vec3::normalized() const
{
    const double n = norm();
    if (n == 0.0)
        throw GeometryError("Cannot normalize a zero-length vector.");
    return {x / n, y / n, z / n};
}

double hapsim::wrap_deg(double deg)
{
    double w = std::fmod(deg + 180.0, 360.0);
    if (w < 0.0)
        w += 360.0;
    return w - 180.0;
}

void hapsim::FlightPattern::validate() const
{
    if (center.z <= 0.0)
        throw ConfigError("Flight pattern altitude must be positive.");
    if (diameter_m < 0.0)
        throw ConfigError("Flight pattern diameter cannot be negative.");
    if (position_count <= 0)
        throw ConfigError("Flight pattern needs at least one position.");
    if (angular_step_deg <= 0.0)
        throw ConfigError("Flight pattern angular step must be positive.");
    if (std::abs(position_count * angular_step_deg - 360.0) > 1e-9)
        throw ConfigError("Flight pattern positions times angular step must cover 360 degrees.");
    if (speed_kmh < 0.0)
        throw ConfigError("Flight speed cannot be negative.");
}

hapsim::Point3 hapsim::haps_position(const FlightPattern &pattern, int run_index)
{
    if (run_index < 0 || run_index >= pattern.position_count)
        throw ConfigError("Run index " + std::to_string(run_index) + " outside [0, " +
                          std::to_string(pattern.position_count) + ").");

    // Exact multiples of 90 degrees are common (runs 0, 3, 6, 9); snap them so the
    // quadrant points carry no rounding residue from cos/sin.
    const double az_deg = run_index * pattern.angular_step_deg;
    const double radius = 0.5 * pattern.diameter_m;
    double c = std::cos(deg_to_rad(az_deg));
    double s = std::sin(deg_to_rad(az_deg));
    const double quarter = az_deg / 90.0;
    if (quarter == std::floor(quarter))
    {
        static constexpr double cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const int q = static_cast<int>(quarter) % 4;
        c = cs[q][0];
        s = cs[q][1];
    }
    return {pattern.center.x + radius * c, pattern.center.y + radius * s, pattern.center.z};
}

hapsim::LinkGeometry hapsim::link_geometry(const Point3 &a, const Point3 &b)
{
    const Vec3 d = b - a;
    const double slant = d.norm();
    if (slant == 0.0)
        throw GeometryError("Link endpoints coincide.");

    LinkGeometry g;
    g.slant_range_m = slant;
    g.elevation_deg = rad_to_deg(std::atan2(d.z, d.horizontal_norm()));
    double az = rad_to_deg(std::atan2(d.y, d.x));
    if (az < 0.0)
        az += 360.0;
    if (az >= 360.0)
        az -= 360.0;
    g.azimuth_deg = az;
    return g;
}
