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

#include "uavtilt/propagation.hpp"
#include "uavtilt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uavtilt
{

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double RadioParams::tx_power_w() const { return dbm_to_watt(tx_power_dbm); }

void RadioParams::validate() const
{
    if (!(carrier_freq_hz > 0.0))
        throw InvalidParameter("radio: carrier frequency must be positive");
    if (!std::isfinite(tx_power_dbm))
        throw InvalidParameter("radio: transmit power must be finite");
    if (!(alpha0 >= 2.0))
        throw InvalidParameter("radio: alpha0 must be at least 2");
    if (!(eps_r > 0.0))
        throw InvalidParameter("radio: eps_r must be positive");
}

void LinkModel::validate() const
{
    radio.validate();
    pattern.validate();
    array.validate();
    if (!(dt_height > 0.0) || !(ut_height > 0.0))
        throw InvalidParameter("link model: sector heights must be positive");
}

SectorGeometry link_geometry(const Vec2 &displacement, double sector_height, double rx_height)
{
    SectorGeometry g;
    g.d2d = displacement.norm();
    g.delta_h = rx_height - sector_height;
    g.dist3d = std::hypot(g.d2d, g.delta_h);
    if (g.d2d > 0.0)
        g.elev = std::atan(g.delta_h / g.d2d);
    else
        g.elev = g.delta_h >= 0.0 ? std::numbers::pi / 2.0 : -std::numbers::pi / 2.0;
    return g;
}

double pathloss_exponent(double h, double h_b, double alpha0)
{
    // the linear ramp reaches 2 at h = h_b; holding it there keeps alpha
    // continuous and non-increasing up to the free-space branch at 2 h_b
    if (h < 2.0 * h_b)
        return std::max(2.0, alpha0 - (h / h_b) * (alpha0 - 2.0));
    return 2.0;
}

ReflectionGeometry reflection_geometry(double d2d, double h_tx, double h_rx)
{
    ReflectionGeometry r;
    const double h_sum = h_tx + h_rx;
    const double total = std::hypot(d2d, h_sum);
    r.r1 = total * (h_tx / h_sum);
    r.r2 = total * (h_rx / h_sum);
    r.grazing = d2d > 0.0 ? std::atan(h_sum / d2d) : std::numbers::pi / 2.0;
    return r;
}

double fresnel_magnitude(double grazing_rad, double eps_r)
{
    const double s = std::sin(grazing_rad);
    const double c = std::cos(grazing_rad);
    const double root = std::sqrt(eps_r - c * c);
    const double num = eps_r * s - root;
    const double den = eps_r * s + root;
    return std::abs(num / den);
}

namespace
{
double radiated_constant(const RadioParams &radio)
{
    const double k = radio.wavelength() / (4.0 * std::numbers::pi);
    return radio.tx_power_w() * k * k;
}
} // namespace

DtPower rx_power_dt_terms(const Vec2 &displacement, double rx_height, double phi_dt_deg, const LinkModel &model)
{
    const SectorGeometry g = link_geometry(displacement, model.dt_height, rx_height);
    if (!(g.dist3d > 0.0))
        throw InvalidGeometry("rx_power_dt: receiver coincides with the downtilted sector");

    const double alpha = pathloss_exponent(rx_height, model.dt_height, model.radio.alpha0);
    const double radiated = radiated_constant(model.radio);
    const double phi = deg_to_rad(phi_dt_deg);

    DtPower p;
    p.direct = radiated * composite_gain_linear(g.elev, phi, model.pattern, model.array) / std::pow(g.dist3d, alpha);

    if (model.ground_reflection && rx_height > 0.0)
    {
        const ReflectionGeometry r = reflection_geometry(g.d2d, model.dt_height, rx_height);
        const double rg = fresnel_magnitude(r.grazing, model.radio.eps_r);
        const double gain = composite_gain_linear(-r.grazing, phi, model.pattern, model.array);
        p.reflected = radiated * rg * rg * gain / std::pow(r.r1 + r.r2, alpha);
    }
    return p;
}

double rx_power_dt(const Vec2 &displacement, double rx_height, double phi_dt_deg, const LinkModel &model)
{
    return rx_power_dt_terms(displacement, rx_height, phi_dt_deg, model).total();
}

UtLinkBudget ut_link_budget(const Vec2 &displacement, double rx_height, const LinkModel &model)
{
    const SectorGeometry g = link_geometry(displacement, model.ut_height, rx_height);
    if (!(g.dist3d > 0.0))
        throw InvalidGeometry("rx_power_ut: receiver coincides with the uptilted sector");

    const double alpha = pathloss_exponent(rx_height, model.dt_height, model.radio.alpha0);
    UtLinkBudget b;
    b.sin_elev = std::sin(g.elev);
    b.prefactor = radiated_constant(model.radio) * element_gain_linear(elevation_deg(g.elev), model.pattern) /
                  std::pow(g.dist3d, alpha);
    return b;
}

double rx_power_ut(const Vec2 &displacement, double rx_height, double phi_ut_deg, const LinkModel &model)
{
    const UtLinkBudget b = ut_link_budget(displacement, rx_height, model);
    return b.prefactor * array_power(b.sin_elev - std::sin(deg_to_rad(phi_ut_deg)), model.array.n_elements);
}

} // namespace uavtilt
