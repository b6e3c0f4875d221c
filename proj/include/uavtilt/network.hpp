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

#ifndef UAVTILT_NETWORK_HPP
#define UAVTILT_NETWORK_HPP

#include "uavtilt/geometry.hpp"
#include "uavtilt/propagation.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace uavtilt
{

// One uptilt angle per site, degrees.
class TiltVector
{
public:
    TiltVector() = default;
    explicit TiltVector(std::vector<double> angles) : angles_(std::move(angles)) {}
    TiltVector(std::initializer_list<double> angles) : angles_(angles) {}
    static TiltVector uniform(std::size_t sites, double angle_deg)
    {
        return TiltVector(std::vector<double>(sites, angle_deg));
    }

    std::size_t size() const { return angles_.size(); }
    double operator[](std::size_t i) const { return angles_[i]; }
    double &operator[](std::size_t i) { return angles_[i]; }
    auto begin() const { return angles_.begin(); }
    auto end() const { return angles_.end(); }
    auto begin() { return angles_.begin(); }
    auto end() { return angles_.end(); }
    const std::vector<double> &angles() const { return angles_; }
    bool operator==(const TiltVector &) const = default;

private:
    std::vector<double> angles_;
};

// Average received powers, row-major (point, site).
struct PowerMatrix
{
    std::size_t points = 0;
    std::size_t sites = 0;
    std::vector<double> p_ut;
    std::vector<double> p_dt;

    double ut(std::size_t u, std::size_t b) const { return p_ut[u * sites + b]; }
    double dt(std::size_t u, std::size_t b) const { return p_dt[u * sites + b]; }
    std::span<const double> ut_row(std::size_t u) const { return {p_ut.data() + u * sites, sites}; }
    std::span<const double> dt_row(std::size_t u) const { return {p_dt.data() + u * sites, sites}; }
};

struct Association
{
    std::vector<std::uint32_t> serving;
    std::vector<double> serving_power;
};

struct SirField
{
    std::vector<double> sir_us_db;
    std::vector<double> sir_cs_db; // empty when the scheme has no coordinated slot
    std::vector<std::uint32_t> serving;

    bool cs_applicable() const { return !sir_cs_db.empty(); }
};

struct RateMetrics
{
    double min_se = 0.0;
    double median_se = 0.0; // lower middle element for even counts
    double sum_se = 0.0;
};

struct EcdfPoint
{
    double value = 0.0;
    double prob = 0.0;
};

// Per-point kernels shared by the matrix path and the fused objective path so
// both produce bit-identical results.
namespace kernel
{
// argmax_b max(ut[b], dt[b]); lowest index wins ties.
inline std::uint32_t serving_site(std::span<const double> ut, std::span<const double> dt)
{
    std::uint32_t best = 0;
    double best_p = ut[0] > dt[0] ? ut[0] : dt[0];
    for (std::size_t b = 1; b < ut.size(); ++b)
    {
        const double p = ut[b] > dt[b] ? ut[b] : dt[b];
        if (p > best_p)
        {
            best_p = p;
            best = static_cast<std::uint32_t>(b);
        }
    }
    return best;
}

inline std::uint32_t strongest(std::span<const double> p)
{
    std::uint32_t best = 0;
    for (std::size_t b = 1; b < p.size(); ++b)
        if (p[b] > p[best])
            best = static_cast<std::uint32_t>(b);
    return best;
}

// Uncoordinated slot: everything but the serving uptilted sector interferes.
inline double sir_us(std::span<const double> ut, std::span<const double> dt, std::uint32_t s)
{
    double interference = 0.0;
    for (std::size_t b = 0; b < ut.size(); ++b)
        if (b != s)
            interference += ut[b] + dt[b];
    interference += dt[s];
    return ut[s] / interference;
}

// Coordinated slot: downtilted data is muted everywhere.
inline double sir_cs(std::span<const double> ut, std::uint32_t s)
{
    double interference = 0.0;
    for (std::size_t b = 0; b < ut.size(); ++b)
        if (b != s)
            interference += ut[b];
    return ut[s] / interference;
}

// Signal from the given sector row, interference from the other sites of the same row.
inline double sir_single_sector(std::span<const double> p, std::uint32_t s)
{
    double interference = 0.0;
    for (std::size_t b = 0; b < p.size(); ++b)
        if (b != s)
            interference += p[b];
    return p[s] / interference;
}
} // namespace kernel

// Tilt-independent link quantities for every (point, site) pair: the full
// downtilted power and the uptilted link budget. Received uptilted power for a
// tilt vector is prefactor * array_power(sin_elev - sin(phi_b)), which is
// exactly what rx_power_ut evaluates.
class LinkTable
{
public:
    LinkTable(const ReceiverGrid &grid, const SiteLayout &layout, double phi_dt_deg, const LinkModel &model,
              unsigned threads = 1);

    std::size_t points() const { return points_; }
    std::size_t sites() const { return sites_; }
    double phi_dt_deg() const { return phi_dt_deg_; }
    const LinkModel &model() const { return model_; }

    PowerMatrix power_matrix(const TiltVector &tilts, unsigned threads = 1) const;

    // min over points of 10 log10(SIR_us), without materializing the matrix.
    double min_sir_us_db(const TiltVector &tilts, unsigned threads = 1) const;

    SirField sir_field(const TiltVector &tilts, unsigned threads = 1) const;

    // Downtilted sectors only: association and signal via DT power.
    SirField dt_only_field() const;

    // Ground users: serving by strongest DT; interference from non-serving DT
    // plus (optionally) every UT sector including the serving site's.
    std::vector<double> gue_sir(const TiltVector &tilts, bool include_ut = true) const;

    // Downtilted powers only (no tilt dependence).
    std::span<const double> dt_row(std::size_t u) const { return {p_dt_.data() + u * sites_, sites_}; }

private:
    void check_tilts(const TiltVector &tilts) const;
    std::vector<double> sin_tilts(const TiltVector &tilts) const;
    void fill_ut_row(std::size_t u, std::span<const double> sin_phi, std::span<double> out) const;

    std::size_t points_ = 0;
    std::size_t sites_ = 0;
    double phi_dt_deg_ = 0.0;
    LinkModel model_;
    std::vector<double> sin_elev_;
    std::vector<double> ut_prefactor_;
    std::vector<double> p_dt_;
};

PowerMatrix compute_power_matrix(const ReceiverGrid &grid, const SiteLayout &layout, const TiltVector &tilts,
                                 double phi_dt_deg, const LinkModel &model, unsigned threads = 1);

Association associate(const PowerMatrix &pm);

// Linear SIR per point.
std::vector<double> sir_us(const PowerMatrix &pm, const Association &assoc);
std::vector<double> sir_cs(const PowerMatrix &pm, const Association &assoc);

double spectral_efficiency(double sir_linear);
double to_db(double linear);

RateMetrics rate_metrics(std::span<const double> se_field);

std::vector<EcdfPoint> ecdf(std::span<const double> values);

struct GueOptions
{
    bool include_ut = true;
    bool ground_reflection = true;
};

std::vector<double> gue_sir(const ReceiverGrid &gue_grid, const SiteLayout &layout, const TiltVector &tilts,
                            double phi_dt_deg, const LinkModel &model, const GueOptions &options = {});

// beta * log2(1 + sir), beta = fraction of slots with the downtilted sector active.
double gue_spectral_efficiency(double gue_sir_linear, double beta);

} // namespace uavtilt

#endif
