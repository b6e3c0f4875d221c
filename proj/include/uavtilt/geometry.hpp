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

#ifndef UAVTILT_GEOMETRY_HPP
#define UAVTILT_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace uavtilt
{

struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2 &o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2 &o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2 &) const = default;

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

// 19-cell hexagonal cluster on the triangular lattice spanned by
// a1 = (isd, 0) and a2 = (isd/2, isd*sqrt(3)/2).
//
// Sites are ordered by ring (0, 1, 2) and then by azimuth in [0, 360).
// wrap_translations[0] is the zero vector; entries 1..6 are the cluster
// translations R(60 k)(3 a1 + 2 a2) of length isd*sqrt(19).
struct SiteLayout
{
    std::vector<Vec2> sites;
    double isd = 0.0;
    std::vector<Vec2> wrap_translations;
    std::size_t center_index = 0;

    std::size_t size() const { return sites.size(); }

    // Keeps the first n sites and the full translation set. Used to build
    // reduced instances with identical physics.
    SiteLayout truncated(std::size_t n) const;
};

// Ring index of a site in the 19-cell cluster (0, 1 or 2).
int site_ring(const SiteLayout &layout, std::size_t site_index);

SiteLayout build_layout(double isd);

// rx_position - (site + t*) for the wrap translation t* closest to rx.
// Ties prefer the zero translation, then the lowest translation index.
Vec2 effective_displacement(std::size_t site_index, const Vec2 &rx_position, const SiteLayout &layout);

// True iff site 0 is (weakly) the nearest site under wraparound distance.
bool in_center_cell(const Vec2 &p, const SiteLayout &layout);

struct ReceiverGrid
{
    std::vector<Vec2> points;
    double spacing = 0.0;
    double height = 0.0;

    std::size_t size() const { return points.size(); }
};

// Square lattice anchored at the origin, clipped to the center cell.
// Points are ordered by row (y ascending), then x ascending.
ReceiverGrid build_receiver_grid(const SiteLayout &layout, double spacing, double height);

} // namespace uavtilt

#endif
