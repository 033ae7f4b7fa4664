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

#ifndef HAPSIM_ANTENNA_HPP
#define HAPSIM_ANTENNA_HPP

#include "hapsim/geometry.hpp"

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace hapsim
{
    // Parabolic-in-dB element pattern with a hard floor at peak_gain - front_to_back.
    struct ElementPattern
    {
        double peak_gain_dbi = 5.0;
        double hpbw_az_deg = 90.0;
        double hpbw_el_deg = 90.0;
        double front_to_back_db = 30.0;

        void validate() const;

        static ElementPattern single_cell() { return {8.0, 65.0, 65.0, 30.0}; }
        static ElementPattern array_element() { return {5.0, 90.0, 90.0, 30.0}; }
        static ElementPattern cpe() { return {12.0, 60.0, 60.0, 30.0}; }
    };

    // Gain at the given angular offsets from boresight, angles in [-180, 180].
    double element_gain(const ElementPattern &p, double off_boresight_az_deg, double off_boresight_el_deg);

    struct LocalAngles
    {
        double az_deg;
        double el_deg;
    };

    // Orthonormal panel frame. `horizontal` spans the columns and `vertical` the rows.
    struct PanelFrame
    {
        Vec3 boresight{0.0, 0.0, -1.0};
        Vec3 horizontal{0.0, 1.0, 0.0};
        Vec3 vertical{1.0, 0.0, 0.0};

        // Boresight at compass azimuth az (from +x) and elevation el (negative = below horizon).
        static PanelFrame pointing(double azimuth_deg, double elevation_deg);
        static PanelFrame nadir() { return pointing(0.0, -90.0); }

        LocalAngles to_local(const Vec3 &unit_direction) const;
    };

    struct PanelArray
    {
        int rows = 1;
        int cols = 1;
        int polarizations = 2;
        ElementPattern element{};
        double spacing_wavelengths = 0.5;
        double design_carrier_hz = 2.1e9; // spacing is spacing_wavelengths * lambda at this frequency
        PanelFrame frame{};

        int copol_element_count() const { return rows * cols; }
        int total_element_count() const { return rows * cols * polarizations; }
        double spacing_m() const;

        // Element positions of one co-polarized subarray, centered on the panel origin.
        // Index = row * cols + col.
        std::vector<Vec3> element_positions() const;

        void validate() const;
    };

    // Complex per-element weights of one co-polarized subarray, sum |w|^2 = 1.
    struct SteeringWeights
    {
        std::vector<std::complex<double>> w;
    };

    SteeringWeights broadside_weights(const PanelArray &panel);

    // Conjugate-phase weights that put the array-factor peak on `target` (unit vector, HAPS to
    // ground). Throws CoverageError when the target is not in front of the panel.
    SteeringWeights steering_weights(const PanelArray &panel, const Vec3 &target, double carrier_hz);

    // Element gain plus array factor of one co-polarized subarray toward `direction`.
    double array_gain(const PanelArray &panel, const SteeringWeights &weights, const Vec3 &direction, double carrier_hz);

    // Directional CPE: boresight on the horizon at azimuth pointing_az_deg.
    double cpe_gain(double pointing_az_deg, const LinkGeometry &link, const ElementPattern &pattern = ElementPattern::cpe());

    // Seven-panel hexagonal array: panel 0 looks straight down, panels 1..6 look outward at
    // azimuths azimuth_offset + 60 * (k - 1), tilted side_downtilt_deg below the horizon.
    struct HexArrayConfig
    {
        int bottom_rows = 2;
        int bottom_cols = 2;
        int side_rows = 4;
        int side_cols = 2;
        int polarizations = 2;
        ElementPattern element = ElementPattern::array_element();
        double spacing_wavelengths = 0.5;
        double design_carrier_hz = 2.1e9;
        double side_downtilt_deg = 23.0;
        double azimuth_offset_deg = 0.0;

        std::array<PanelArray, 7> panels() const;
    };

    PanelArray single_cell_antenna(const ElementPattern &pattern = ElementPattern::single_cell());
}

#endif
