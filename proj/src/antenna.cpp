// SPDX-License-Identifier: Apache-2.0
//
// uavtilt - multi-cell downlink simulator for uptilted booster sectors
// Copyright (C) 2026 The uavtilt authors
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

#include "uavtilt/antenna.hpp"
#include "uavtilt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace uavtilt
{

namespace
{
// |sin(theta) - sin(phi)| (mod 2) below which the boresight limit is returned.
constexpr double boresight_guard = 1e-12;
// Rounding slack when converting radians near +-pi/2 to degrees.
constexpr double angle_slack_deg = 1e-9;
} // namespace

void ElementPattern::validate() const
{
    if (!(theta_3db_deg > 0.0))
        throw InvalidParameter("element pattern: theta_3db must be positive");
    if (!(sla_v_db >= 0.0))
        throw InvalidParameter("element pattern: sla_v must be non-negative");
    if (!std::isfinite(ge_max_dbi))
        throw InvalidParameter("element pattern: ge_max must be finite");
}

void ArrayConfig::validate() const
{
    if (n_elements < 1)
        throw InvalidParameter("array: n_elements must be at least 1");
    if (element_spacing_wl != 0.5)
        throw InvalidParameter("array: only half-wavelength spacing is supported");
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

double element_gain_db(double theta_deg, const ElementPattern &pattern)
{
    if (!(theta_deg >= -90.0 && theta_deg <= 90.0))
        throw InvalidAngle("element_gain_db: elevation " + std::to_string(theta_deg) +
                           " deg outside [-90, 90]");
    const double ratio = theta_deg / pattern.theta_3db_deg;
    return pattern.ge_max_dbi - std::min(12.0 * ratio * ratio, pattern.sla_v_db);
}

double element_gain_linear(double theta_deg, const ElementPattern &pattern)
{
    return std::pow(10.0, element_gain_db(theta_deg, pattern) / 10.0);
}

double array_power(double sin_offset, int n_elements)
{
    const double n = static_cast<double>(n_elements);
    if (n_elements == 1)
        return 1.0;
    // Reduce to (-1, 1]: |A|^2 is invariant under u -> u + 2k.
    const double u = sin_offset - 2.0 * std::round(sin_offset / 2.0);
    if (std::abs(u) < boresight_guard)
        return n;
    const double half = std::numbers::pi / 2.0 * u;
    const double num = std::sin(n * half);
    const double den = std::sin(half);
    const double power = num * num / (n * den * den);
    return std::max(power, array_power_floor);
}

double array_factor_gain_db(double theta_rad, double phi_rad, const ArrayConfig &array)
{
    return 10.0 * std::log10(array_power(std::sin(theta_rad) - std::sin(phi_rad), array.n_elements));
}

double elevation_deg(double theta_rad)
{
    double deg = rad_to_deg(theta_rad);
    if (std::abs(deg) > 90.0 && std::abs(deg) <= 90.0 + angle_slack_deg)
        deg = std::copysign(90.0, deg);
    return deg;
}

double composite_gain_db(double theta_rad, double phi_rad, const ElementPattern &pattern,
                         const ArrayConfig &array)
{
    return element_gain_db(elevation_deg(theta_rad), pattern) + array_factor_gain_db(theta_rad, phi_rad, array);
}

double composite_gain_linear(double theta_rad, double phi_rad, const ElementPattern &pattern,
                             const ArrayConfig &array)
{
    return element_gain_linear(elevation_deg(theta_rad), pattern) *
           array_power(std::sin(theta_rad) - std::sin(phi_rad), array.n_elements);
}

} // namespace uavtilt
