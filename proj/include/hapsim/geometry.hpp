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

#ifndef HAPSIM_GEOMETRY_HPP
#define HAPSIM_GEOMETRY_HPP

#include <cmath>

namespace hapsim
{
    // Local flat-earth ENU frame: x east, y north, z altitude above the ground plane (meters).
    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
        constexpr bool operator==(const Vec3 &) const = default;

        constexpr double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
        constexpr Vec3 cross(const Vec3 &o) const
        {
            return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
        }
        double norm() const { return std::sqrt(dot(*this)); }
        double horizontal_norm() const { return std::hypot(x, y); }
        Vec3 normalized() const;
    };

    using Point3 = Vec3;

    // Station-keeping circle flown by the platform. The circle lies in the horizontal plane at
    // center.z; run i places the platform at azimuth i * angular_step_deg from the x-axis.
    struct FlightPattern
    {
        Point3 center{0.0, 0.0, 20000.0};
        double diameter_m = 6000.0;
        int position_count = 12;
        double angular_step_deg = 30.0;
        double speed_kmh = 100.0; // metadata only, no Doppler model

        double altitude_m() const { return center.z; }
        void validate() const;
    };

    Point3 haps_position(const FlightPattern &pattern, int run_index);

    struct LinkGeometry
    {
        double elevation_deg = 0.0; // angle of the a->b ray above a's horizontal plane
        double azimuth_deg = 0.0;   // [0, 360), counter-clockwise from +x
        double slant_range_m = 0.0;
    };

    // Geometry of the ray from a to b. Throws GeometryError for coincident points.
    LinkGeometry link_geometry(const Point3 &a, const Point3 &b);

    constexpr double deg_to_rad(double deg) { return deg * 0.017453292519943295; }
    constexpr double rad_to_deg(double rad) { return rad * 57.29577951308232; }

    // Wraps an angle into [-180, 180).
    double wrap_deg(double deg);
}

#endif
