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

#include "hapsim/antenna.hpp"
#include "hapsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace
{
    constexpr double speed_of_light = 299792458.0;

    // Array nulls are floored so that gains stay finite.
    constexpr double min_array_factor_power = 1e-12;

    double wavenumber(double carrier_hz)
    {
        if (!(carrier_hz > 0.0))
            throw hapsim::ConfigError("Carrier frequency must be positive.");
        return 2.0 * std::numbers::pi * carrier_hz / speed_of_light;
    }
}

void hapsim::ElementPattern::validate() const
{
    if (!(hpbw_az_deg > 0.0) || !(hpbw_el_deg > 0.0))
        throw ConfigError("Element half-power beam width must be positive.");
    if (front_to_back_db < 0.0)
        throw ConfigError("Front-to-back ratio cannot be negative.");
    if (!std::isfinite(peak_gain_dbi))
        throw ConfigError("Element peak gain must be finite.");
}

double hapsim::element_gain(const ElementPattern &p, double off_az_deg, double off_el_deg)
{
    p.validate();
    const double a = off_az_deg / p.hpbw_az_deg;
    const double e = off_el_deg / p.hpbw_el_deg;
    const double attenuation = std::min(12.0 * (a * a + e * e), p.front_to_back_db);
    return p.peak_gain_dbi - attenuation;
}

hapsim::PanelFrame hapsim::PanelFrame::pointing(double azimuth_deg, double elevation_deg)
{
    const double az = deg_to_rad(azimuth_deg);
    const double el = deg_to_rad(elevation_deg);
    PanelFrame f;
    f.boresight = Vec3{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)}.normalized();
    f.horizontal = Vec3{-std::sin(az), std::cos(az), 0.0};
    f.vertical = f.boresight.cross(f.horizontal).normalized();
    return f;
}

hapsim::LocalAngles hapsim::PanelFrame::to_local(const Vec3 &d) const
{
    const double along = d.dot(boresight);
    const double across = d.dot(horizontal);
    const double up = std::clamp(d.dot(vertical), -1.0, 1.0);
    return {rad_to_deg(std::atan2(across, along)), rad_to_deg(std::asin(up))};
}

double hapsim::PanelArray::spacing_m() const
{
    return spacing_wavelengths * speed_of_light / design_carrier_hz;
}

std::vector<hapsim::Vec3> hapsim::PanelArray::element_positions() const
{
    const double s = spacing_m();
    std::vector<Vec3> pos;
    pos.reserve(static_cast<std::size_t>(copol_element_count()));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
        {
            const double hc = (c - 0.5 * (cols - 1)) * s;
            const double vr = (r - 0.5 * (rows - 1)) * s;
            pos.push_back(frame.horizontal * hc + frame.vertical * vr);
        }
    return pos;
}

void hapsim::PanelArray::validate() const
{
    if (rows <= 0 || cols <= 0 || polarizations <= 0)
        throw ConfigError("Panel dimensions must be positive.");
    if (!(spacing_wavelengths > 0.0))
        throw ConfigError("Element spacing must be positive.");
    if (!(design_carrier_hz > 0.0))
        throw ConfigError("Panel design carrier must be positive.");
    element.validate();
}

hapsim::SteeringWeights hapsim::broadside_weights(const PanelArray &panel)
{
    panel.validate();
    const auto n = static_cast<std::size_t>(panel.copol_element_count());
    return {std::vector<std::complex<double>>(n, std::complex<double>(1.0 / std::sqrt(double(n)), 0.0))};
}

hapsim::SteeringWeights hapsim::steering_weights(const PanelArray &panel, const Vec3 &target, double carrier_hz)
{
    panel.validate();
    const Vec3 t = target.normalized();
    if (t.dot(panel.frame.boresight) <= 0.0)
        throw CoverageError("Steering target lies behind the panel.");

    const double k = wavenumber(carrier_hz);
    const auto pos = panel.element_positions();
    const double amp = 1.0 / std::sqrt(double(pos.size()));
    SteeringWeights sw;
    sw.w.reserve(pos.size());
    for (const auto &p : pos)
        sw.w.push_back(std::polar(amp, -k * p.dot(t)));
    return sw;
}

double hapsim::array_gain(const PanelArray &panel, const SteeringWeights &weights, const Vec3 &direction, double carrier_hz)
{
    if (weights.w.size() != static_cast<std::size_t>(panel.copol_element_count()))
        throw ConfigError("Weight count does not match the co-polarized element count.");

    const Vec3 d = direction.normalized();
    const double k = wavenumber(carrier_hz);
    const auto pos = panel.element_positions();

    std::complex<double> af{0.0, 0.0};
    for (std::size_t i = 0; i < pos.size(); ++i)
        af += weights.w[i] * std::polar(1.0, k * pos[i].dot(d));

    const auto local = panel.frame.to_local(d);
    const double g_el = element_gain(panel.element, local.az_deg, local.el_deg);
    return g_el + 10.0 * std::log10(std::max(std::norm(af), min_array_factor_power));
}

double hapsim::cpe_gain(double pointing_az_deg, const LinkGeometry &link, const ElementPattern &pattern)
{
    const double d_az = wrap_deg(link.azimuth_deg - pointing_az_deg);
    return element_gain(pattern, d_az, link.elevation_deg);
}

std::array<hapsim::PanelArray, 7> hapsim::HexArrayConfig::panels() const
{
    std::array<PanelArray, 7> out;
    out[0] = PanelArray{bottom_rows, bottom_cols, polarizations, element, spacing_wavelengths, design_carrier_hz,
                        PanelFrame::nadir()};
    for (int k = 1; k < 7; ++k)
        out[k] = PanelArray{side_rows, side_cols, polarizations, element, spacing_wavelengths, design_carrier_hz,
                            PanelFrame::pointing(azimuth_offset_deg + 60.0 * (k - 1), -side_downtilt_deg)};
    for (const auto &p : out)
        p.validate();
    return out;
}

hapsim::PanelArray hapsim::single_cell_antenna(const ElementPattern &pattern)
{
    PanelArray p{1, 1, 1, pattern, 0.5, 2.1e9, PanelFrame::nadir()};
    p.validate();
    return p;
}
