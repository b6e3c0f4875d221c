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

#include "uavtilt/network.hpp"
#include "uavtilt/errors.hpp"
#include "uavtilt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

namespace uavtilt
{

LinkTable::LinkTable(const ReceiverGrid &grid, const SiteLayout &layout, double phi_dt_deg, const LinkModel &model,
                     unsigned threads)
    : points_(grid.size()), sites_(layout.size()), phi_dt_deg_(phi_dt_deg), model_(model)
{
    model_.validate();
    if (sites_ == 0)
        throw InvalidParameter("LinkTable: layout has no sites");
    sin_elev_.resize(points_ * sites_);
    ut_prefactor_.resize(points_ * sites_);
    p_dt_.resize(points_ * sites_);

    parallel_for(points_, threads, [&](std::size_t u)
                 {
        for (std::size_t b = 0; b < sites_; ++b)
        {
            const Vec2 d = effective_displacement(b, grid.points[u], layout);
            const UtLinkBudget ut = ut_link_budget(d, grid.height, model_);
            sin_elev_[u * sites_ + b] = ut.sin_elev;
            ut_prefactor_[u * sites_ + b] = ut.prefactor;
            p_dt_[u * sites_ + b] = rx_power_dt(d, grid.height, phi_dt_deg_, model_);
        } });
}

void LinkTable::check_tilts(const TiltVector &tilts) const
{
    if (tilts.size() != sites_)
        throw InvalidParameter("tilt vector has " + std::to_string(tilts.size()) + " entries, layout has " +
                               std::to_string(sites_) + " sites");
}

std::vector<double> LinkTable::sin_tilts(const TiltVector &tilts) const
{
    check_tilts(tilts);
    std::vector<double> s(sites_);
    for (std::size_t b = 0; b < sites_; ++b)
        s[b] = std::sin(deg_to_rad(tilts[b]));
    return s;
}

void LinkTable::fill_ut_row(std::size_t u, std::span<const double> sin_phi, std::span<double> out) const
{
    const double *se = sin_elev_.data() + u * sites_;
    const double *pf = ut_prefactor_.data() + u * sites_;
    const int n = model_.array.n_elements;
    for (std::size_t b = 0; b < sites_; ++b)
        out[b] = pf[b] * array_power(se[b] - sin_phi[b], n);
}

PowerMatrix LinkTable::power_matrix(const TiltVector &tilts, unsigned threads) const
{
    const auto sin_phi = sin_tilts(tilts);
    PowerMatrix pm;
    pm.points = points_;
    pm.sites = sites_;
    pm.p_ut.resize(points_ * sites_);
    pm.p_dt = p_dt_;
    parallel_for(points_, threads, [&](std::size_t u)
                 { fill_ut_row(u, sin_phi, {pm.p_ut.data() + u * sites_, sites_}); });
    return pm;
}

double LinkTable::min_sir_us_db(const TiltVector &tilts, unsigned threads) const
{
    const auto sin_phi = sin_tilts(tilts);
    // min is exact and order-independent, so merging chunk results under a lock is deterministic
    double result = std::numeric_limits<double>::infinity();
    std::mutex result_mutex;
    parallel_chunks(points_, threads, [&](std::size_t begin, std::size_t end)
                    {
        std::vector<double> ut(sites_);
        double local = std::numeric_limits<double>::infinity();
        for (std::size_t u = begin; u < end; ++u)
        {
            fill_ut_row(u, sin_phi, ut);
            const auto dt = dt_row(u);
            const auto s = kernel::serving_site(ut, dt);
            local = std::min(local, to_db(kernel::sir_us(ut, dt, s)));
        }
        std::lock_guard lock(result_mutex);
        result = std::min(result, local); });
    return result;
}

SirField LinkTable::sir_field(const TiltVector &tilts, unsigned threads) const
{
    const auto sin_phi = sin_tilts(tilts);
    SirField f;
    f.sir_us_db.resize(points_);
    f.sir_cs_db.resize(points_);
    f.serving.resize(points_);
    parallel_chunks(points_, threads, [&](std::size_t begin, std::size_t end)
                    {
        std::vector<double> ut(sites_);
        for (std::size_t u = begin; u < end; ++u)
        {
            fill_ut_row(u, sin_phi, ut);
            const auto dt = dt_row(u);
            const auto s = kernel::serving_site(ut, dt);
            f.serving[u] = s;
            f.sir_us_db[u] = to_db(kernel::sir_us(ut, dt, s));
            f.sir_cs_db[u] = to_db(kernel::sir_cs(ut, s));
        } });
    return f;
}

SirField LinkTable::dt_only_field() const
{
    SirField f;
    f.sir_us_db.resize(points_);
    f.serving.resize(points_);
    for (std::size_t u = 0; u < points_; ++u)
    {
        const auto dt = dt_row(u);
        const auto s = kernel::strongest(dt);
        f.serving[u] = s;
        f.sir_us_db[u] = to_db(kernel::sir_single_sector(dt, s));
    }
    return f;
}

std::vector<double> LinkTable::gue_sir(const TiltVector &tilts, bool include_ut) const
{
    const auto sin_phi = sin_tilts(tilts);
    std::vector<double> out(points_);
    std::vector<double> ut(sites_);
    for (std::size_t u = 0; u < points_; ++u)
    {
        const auto dt = dt_row(u);
        const auto s = kernel::strongest(dt);
        double interference = 0.0;
        if (include_ut)
        {
            fill_ut_row(u, sin_phi, ut);
            for (std::size_t b = 0; b < sites_; ++b)
                if (b != s)
                    interference += dt[b] + ut[b];
            interference += ut[s];
        }
        else
        {
            for (std::size_t b = 0; b < sites_; ++b)
                if (b != s)
                    interference += dt[b];
        }
        out[u] = dt[s] / interference;
    }
    return out;
}

PowerMatrix compute_power_matrix(const ReceiverGrid &grid, const SiteLayout &layout, const TiltVector &tilts,
                                 double phi_dt_deg, const LinkModel &model, unsigned threads)
{
    return LinkTable(grid, layout, phi_dt_deg, model, threads).power_matrix(tilts, threads);
}

Association associate(const PowerMatrix &pm)
{
    Association a;
    a.serving.resize(pm.points);
    a.serving_power.resize(pm.points);
    for (std::size_t u = 0; u < pm.points; ++u)
    {
        const auto s = kernel::serving_site(pm.ut_row(u), pm.dt_row(u));
        a.serving[u] = s;
        a.serving_power[u] = std::max(pm.ut(u, s), pm.dt(u, s));
    }
    return a;
}

std::vector<double> sir_us(const PowerMatrix &pm, const Association &assoc)
{
    std::vector<double> out(pm.points);
    for (std::size_t u = 0; u < pm.points; ++u)
        out[u] = kernel::sir_us(pm.ut_row(u), pm.dt_row(u), assoc.serving[u]);
    return out;
}

std::vector<double> sir_cs(const PowerMatrix &pm, const Association &assoc)
{
    std::vector<double> out(pm.points);
    for (std::size_t u = 0; u < pm.points; ++u)
        out[u] = kernel::sir_cs(pm.ut_row(u), assoc.serving[u]);
    return out;
}

double spectral_efficiency(double sir_linear)
{
    if (!(sir_linear >= 0.0))
        throw InvalidParameter("spectral_efficiency: SIR must be non-negative");
    return std::log2(1.0 + sir_linear);
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

RateMetrics rate_metrics(std::span<const double> se_field)
{
    if (se_field.empty())
        throw InvalidParameter("rate_metrics: empty field");
    std::vector<double> sorted(se_field.begin(), se_field.end());
    std::sort(sorted.begin(), sorted.end());
    RateMetrics m;
    m.min_se = sorted.front();
    m.median_se = sorted[(sorted.size() - 1) / 2];
    for (double v : se_field)
        m.sum_se += v;
    return m;
}

std::vector<EcdfPoint> ecdf(std::span<const double> values)
{
    if (values.empty())
        throw InvalidParameter("ecdf: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<EcdfPoint> out(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        out[k] = {sorted[k], static_cast<double>(k + 1) / n};
    return out;
}

std::vector<double> gue_sir(const ReceiverGrid &gue_grid, const SiteLayout &layout, const TiltVector &tilts,
                            double phi_dt_deg, const LinkModel &model, const GueOptions &options)
{
    LinkModel m = model;
    m.ground_reflection = options.ground_reflection;
    return LinkTable(gue_grid, layout, phi_dt_deg, m).gue_sir(tilts, options.include_ut);
}

double gue_spectral_efficiency(double gue_sir_linear, double beta)
{
    if (!(beta >= 0.0 && beta <= 1.0))
        throw InvalidParameter("gue_spectral_efficiency: beta must lie in [0, 1]");
    return beta * spectral_efficiency(gue_sir_linear);
}

} // namespace uavtilt
