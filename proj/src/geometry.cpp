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

#include "uavtilt/geometry.hpp"
#include "uavtilt/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numbers>
#include <string>

namespace uavtilt
{

namespace
{
// Relative slack when comparing squared distances for cell membership.
constexpr double membership_tolerance = 1e-12;

Vec2 lattice_point(double isd, int i, int j)
{
    return {isd * (static_cast<double>(i) + 0.5 * static_cast<double>(j)),
            isd * (static_cast<double>(j) * std::numbers::sqrt3 / 2.0)};
}

int hex_distance(int i, int j)
{
    return std::max({std::abs(i), std::abs(j), std::abs(i + j)});
}
} // namespace

SiteLayout SiteLayout::truncated(std::size_t n) const
{
    if (n == 0 || n > sites.size())
        throw InvalidParameter("truncated: site count must be in 1.." + std::to_string(sites.size()));
    SiteLayout out = *this;
    out.sites.resize(n);
    return out;
}

int site_ring(const SiteLayout &layout, std::size_t site_index)
{
    const double r = layout.sites.at(site_index).norm() / layout.isd;
    if (r < 0.5)
        return 0;
    return r < 1.5 ? 1 : 2;
}

SiteLayout build_layout(double isd)
{
    if (!(isd > 0.0) || !std::isfinite(isd))
        throw InvalidParameter("build_layout: isd must be positive, got " + std::to_string(isd));

    struct Candidate
    {
        int ring;
        double azimuth;
        Vec2 pos;
    };
    std::vector<Candidate> cands;
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j)
        {
            const int ring = hex_distance(i, j);
            if (ring > 2)
                continue;
            const Vec2 p = lattice_point(isd, i, j);
            double az = ring == 0 ? 0.0 : std::atan2(p.y, p.x);
            if (az < 0.0)
                az += 2.0 * std::numbers::pi;
            cands.push_back({ring, az, p});
        }
    std::sort(cands.begin(), cands.end(), [](const Candidate &a, const Candidate &b)
              { return a.ring != b.ring ? a.ring < b.ring : a.azimuth < b.azimuth; });

    SiteLayout layout;
    layout.isd = isd;
    layout.sites.reserve(cands.size());
    for (const auto &c : cands)
        layout.sites.push_back(c.pos);

    // (3, 2) in lattice coordinates, rotated by 60 degrees: (i, j) -> (-j, i + j)
    layout.wrap_translations.push_back({0.0, 0.0});
    int ti = 3, tj = 2;
    for (int k = 0; k < 6; ++k)
    {
        layout.wrap_translations.push_back(lattice_point(isd, ti, tj));
        const int ni = -tj;
        const int nj = ti + tj;
        ti = ni;
        tj = nj;
    }
    return layout;
}

Vec2 effective_displacement(std::size_t site_index, const Vec2 &rx_position, const SiteLayout &layout)
{
    const Vec2 &site = layout.sites[site_index];
    Vec2 best = rx_position - site;
    double best_d2 = best.norm2();
    for (std::size_t t = 1; t < layout.wrap_translations.size(); ++t)
    {
        const Vec2 d = rx_position - (site + layout.wrap_translations[t]);
        const double d2 = d.norm2();
        if (d2 < best_d2)
        {
            best = d;
            best_d2 = d2;
        }
    }
    return best;
}

bool in_center_cell(const Vec2 &p, const SiteLayout &layout)
{
    const double d0 = effective_displacement(layout.center_index, p, layout).norm2();
    for (std::size_t b = 0; b < layout.size(); ++b)
    {
        if (b == layout.center_index)
            continue;
        const double db = effective_displacement(b, p, layout).norm2();
        if (d0 > db * (1.0 + membership_tolerance))
            return false;
    }
    return true;
}

ReceiverGrid build_receiver_grid(const SiteLayout &layout, double spacing, double height)
{
    if (!(spacing > 0.0))
        throw InvalidParameter("build_receiver_grid: spacing must be positive");
    if (spacing >= layout.isd)
        throw InvalidParameter("build_receiver_grid: spacing must be smaller than the inter-site distance");
    if (!(height >= 0.0))
        throw InvalidParameter("build_receiver_grid: height must be non-negative");

    ReceiverGrid grid;
    grid.spacing = spacing;
    grid.height = height;

    const double circumradius = layout.isd / std::numbers::sqrt3;
    const int n = static_cast<int>(std::floor(circumradius / spacing)) + 1;
    for (int j = -n; j <= n; ++j)
        for (int i = -n; i <= n; ++i)
        {
            const Vec2 p{static_cast<double>(i) * spacing, static_cast<double>(j) * spacing};
            if (in_center_cell(p, layout))
                grid.points.push_back(p);
        }
    return grid;
}

} // namespace uavtilt
