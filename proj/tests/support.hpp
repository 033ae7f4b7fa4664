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

// Hand-rolled generators for the property tests. Every generator draws from a seeded Rng so a
// failing case can be replayed from the seed printed by CAPTURE.

#ifndef HAPSIM_TESTS_SUPPORT_HPP
#define HAPSIM_TESTS_SUPPORT_HPP

#include "hapsim/consumption.hpp"
#include "hapsim/geometry.hpp"
#include "hapsim/rng.hpp"

#include <cmath>
#include <vector>

namespace hapsim::testing
{
    inline constexpr int property_cases = 200;

    inline Point3 ground_point(Rng &rng, double radius_m)
    {
        const double r = radius_m * std::sqrt(rng.uniform());
        const double a = rng.uniform(0.0, 360.0);
        return {r * std::cos(deg_to_rad(a)), r * std::sin(deg_to_rad(a)), 0.0};
    }

    // Unit vector uniform on the sphere.
    inline Vec3 unit_vector(Rng &rng)
    {
        const double z = rng.uniform(-1.0, 1.0);
        const double phi = rng.uniform(0.0, 2.0 * 3.141592653589793);
        const double s = std::sqrt(1.0 - z * z);
        return {s * std::cos(phi), s * std::sin(phi), z};
    }

    inline std::vector<EfficiencyStage> chain(Rng &rng, int max_stages = 5)
    {
        const int n = 1 + static_cast<int>(rng.uniform() * max_stages);
        std::vector<EfficiencyStage> out;
        for (int i = 0; i < n; ++i)
            out.push_back({std::pow(10.0, rng.uniform(-1.0, 4.0)), rng.uniform(0.05, 1.0)});
        return out;
    }
}

#endif
