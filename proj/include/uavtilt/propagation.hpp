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

#ifndef UAVTILT_PROPAGATION_HPP
#define UAVTILT_PROPAGATION_HPP

#include "uavtilt/antenna.hpp"
#include "uavtilt/geometry.hpp"

namespace uavtilt
{

inline constexpr double speed_of_light = 299792458.0;

struct RadioParams
{
    double carrier_freq_hz = 3.5e9;
    double tx_power_dbm = 46.0;
    double alpha0 = 3.5; // ground-level path-loss exponent
    double eps_r = 15.0; // relative permittivity of the ground

    double wavelength() const { return speed_of_light / carrier_freq_hz; }
    double tx_power_w() const;
    void validate() const;
};

double dbm_to_watt(double dbm);

// Everything needed to evaluate one BS-to-receiver link.
struct LinkModel
{
    RadioParams radio;
    ElementPattern pattern;
    ArrayConfig array;
    double dt_height = 30.0; // downtilted sector height, also the h_b of the path-loss exponent
    double ut_height = 31.0; // uptilted sector height
    bool ground_reflection = true;

    void validate() const;
};

struct SectorGeometry
{
    double d2d = 0.0;     // horizontal distance
    double dist3d = 0.0;  // straight-line distance
    double elev = 0.0;    // elevation at the sector, radians, positive upward
    double delta_h = 0.0; // receiver height minus sector height
};

SectorGeometry link_geometry(const Vec2 &displacement, double sector_height, double rx_height);

// alpha0 - (h/h_b)(alpha0 - 2) floored at 2 below 2 h_b, free-space exponent 2 above.
double pathloss_exponent(double h, double h_b, double alpha0);

// Image-method ground reflection point.
struct ReflectionGeometry
{
    double r1 = 0.0;      // transmitter to ground intercept
    double r2 = 0.0;      // ground intercept to receiver
    double grazing = 0.0; // grazing angle psi, radians
};

ReflectionGeometry reflection_geometry(double d2d, double h_tx, double h_rx);

// |R| for vertical polarization over a lossless dielectric ground.
double fresnel_magnitude(double grazing_rad, double eps_r);

struct DtPower
{
    double direct = 0.0;
    double reflected = 0.0;
    double total() const { return direct + reflected; }
};

// Direct plus ground-reflected power from the downtilted sector (watts).
// The reflected ray departs the array at elevation -psi with the same
// electrical tilt; the receiver is isotropic. Powers add incoherently.
DtPower rx_power_dt_terms(const Vec2 &displacement, double rx_height, double phi_dt_deg, const LinkModel &model);

double rx_power_dt(const Vec2 &displacement, double rx_height, double phi_dt_deg, const LinkModel &model);

// Tilt-independent part of the uptilted link: received power equals
// prefactor * array_power(sin_elev - sin(phi_ut), n_elements).
struct UtLinkBudget
{
    double sin_elev = 0.0;
    double prefactor = 0.0; // watts
};

UtLinkBudget ut_link_budget(const Vec2 &displacement, double rx_height, const LinkModel &model);

// Direct-path power from the uptilted sector (watts), no ground reflection.
double rx_power_ut(const Vec2 &displacement, double rx_height, double phi_ut_deg, const LinkModel &model);

} // namespace uavtilt

#endif
