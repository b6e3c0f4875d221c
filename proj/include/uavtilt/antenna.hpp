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

#ifndef UAVTILT_ANTENNA_HPP
#define UAVTILT_ANTENNA_HPP

namespace uavtilt
{

// Vertical cut of the 3GPP element pattern. The azimuth pattern is omnidirectional.
struct ElementPattern
{
    double ge_max_dbi = 8.0;     // maximum element gain
    double theta_3db_deg = 65.0; // vertical 3 dB beamwidth
    double sla_v_db = 30.0;      // vertical side-lobe attenuation limit

    void validate() const;
};

// Vertical uniform linear array, half-wavelength spacing.
struct ArrayConfig
{
    int n_elements = 8;
    double element_spacing_wl = 0.5;

    void validate() const;
};

// Lower bound applied to |A|^2 before any logarithm (-300 dB).
inline constexpr double array_power_floor = 1e-30;

// Angles: elevation from the horizontal plane, positive upward.

// G_e(theta) in dB; theta in degrees, must lie in [-90, 90].
double element_gain_db(double theta_deg, const ElementPattern &pattern);

// 10^(G_e/10); same domain as element_gain_db.
double element_gain_linear(double theta_deg, const ElementPattern &pattern);

// |A|^2 as a function of u = sin(theta) - sin(phi), floored at array_power_floor.
// Periodic in u with period 2; equals n_elements at u = 0 (mod 2).
double array_power(double sin_offset, int n_elements);

// 10 log10 |A(theta, phi)|^2, angles in radians.
double array_factor_gain_db(double theta_rad, double phi_rad, const ArrayConfig &array);

// Element plus array gain in dB, angles in radians.
double composite_gain_db(double theta_rad, double phi_rad, const ElementPattern &pattern,
                         const ArrayConfig &array);

// Same quantity in linear scale, computed as product of linear factors.
double composite_gain_linear(double theta_rad, double phi_rad, const ElementPattern &pattern,
                             const ArrayConfig &array);

double deg_to_rad(double deg);
double rad_to_deg(double rad);

// Radians to degrees, snapping rounding overshoot past +-90 back onto the pole.
double elevation_deg(double theta_rad);

} // namespace uavtilt

#endif
