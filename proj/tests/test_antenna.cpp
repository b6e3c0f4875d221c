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

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace uavtilt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
const ElementPattern pat{};
ArrayConfig arr(int n)
{
    ArrayConfig a;
    a.n_elements = n;
    return a;
}
} // namespace

TEST_CASE("element gain", "[antenna]")
{
    CHECK_THAT(element_gain_db(0.0, pat), WithinAbs(8.0, 1e-12));
    CHECK_THAT(element_gain_db(65.0, pat), WithinAbs(-4.0, 1e-12));
    CHECK_THAT(element_gain_db(90.0, pat), WithinAbs(8.0 - std::min(12.0 * std::pow(90.0 / 65.0, 2), 30.0), 1e-12));
    CHECK_THROWS_AS(element_gain_db(90.5, pat), InvalidAngle);
    CHECK_THROWS_AS(element_gain_db(-91.0, pat), InvalidAngle);
}

TEST_CASE("element gain is even, peaked at 0 and bounded", "[antenna]")
{
    for (double t = -90.0; t <= 90.0; t += 0.5)
    {
        const double g = element_gain_db(t, pat);
        CHECK(g == element_gain_db(-t, pat));
        CHECK(g <= 8.0);
        CHECK(g >= 8.0 - 30.0);
    }
    // a narrow element reaches the side-lobe floor inside the domain
    ElementPattern narrow;
    narrow.theta_3db_deg = 30.0;
    CHECK_THAT(element_gain_db(-90.0, narrow), WithinAbs(8.0 - 30.0, 1e-12));
    CHECK_THAT(element_gain_db(70.0, narrow), WithinAbs(8.0 - 30.0, 1e-12));
}

TEST_CASE("array factor", "[antenna]")
{
    SECTION("boresight equals 10 log10 N")
    {
        for (int n : {1, 4, 8, 16})
            for (double phi : {-0.1, 0.0, 0.3, 1.2})
                CHECK_THAT(array_factor_gain_db(phi, phi, arr(n)), WithinAbs(10.0 * std::log10(n), 1e-9));
    }
    SECTION("single element is flat")
    {
        for (double th = -1.5; th <= 1.5; th += 0.25)
            CHECK_THAT(array_factor_gain_db(th, 0.4, arr(1)), WithinAbs(0.0, 1e-9));
    }
    SECTION("first null hits the floor")
    {
        CHECK_THAT(array_power(2.0 / 8.0, 8), WithinAbs(array_power_floor, 1e-40));
        CHECK(array_power(2.0 / 8.0, 8) == array_power_floor);
        CHECK_THAT(10.0 * std::log10(array_power(0.25, 8)), WithinAbs(-300.0, 1e-9));
    }
    SECTION("bounded by the peak and periodic in the sine offset")
    {
        for (double u = -1.9; u <= 1.9; u += 0.013)
        {
            CHECK(array_power(u, 8) <= 8.0 * (1.0 + 1e-12));
            CHECK_THAT(array_power(u + 2.0, 8), WithinRel(array_power(u, 8), 1e-9));
        }
    }
    SECTION("boresight limit agrees with the formula just off the singular point")
    {
        for (int n : {4, 8, 16})
            for (double u : {1e-7, -1e-7})
            {
                const double x = M_PI * u / 2.0;
                const double a = std::sin(n * x) / std::sin(x) / std::sqrt(double(n));
                CHECK_THAT(10.0 * std::log10(a * a), WithinAbs(10.0 * std::log10(array_power(0.0, n)), 1e-6));
            }
    }
}

TEST_CASE("composite gain", "[antenna]")
{
    CHECK_THAT(composite_gain_db(0.0, 0.0, pat, arr(8)), WithinAbs(8.0 + 10.0 * std::log10(8.0), 1e-9));
    CHECK(composite_gain_db(0.0, deg_to_rad(-6.0), pat, arr(8)) < 8.0 + 10.0 * std::log10(8.0));
    const double t = deg_to_rad(30.0);
    CHECK_THAT(composite_gain_db(t, t, pat, arr(8)),
               WithinAbs(8.0 - std::min(12.0 * std::pow(30.0 / 65.0, 2), 30.0) + 10.0 * std::log10(8.0), 1e-9));
    for (double th = -1.5; th <= 1.5; th += 0.1)
        CHECK_THAT(composite_gain_linear(th, 0.2, pat, arr(8)),
                   WithinRel(std::pow(10.0, composite_gain_db(th, 0.2, pat, arr(8)) / 10.0), 1e-12));
}

TEST_CASE("angle helpers", "[antenna]")
{
    CHECK_THAT(rad_to_deg(deg_to_rad(37.0)), WithinAbs(37.0, 1e-12));
    CHECK(elevation_deg(M_PI / 2.0) == 90.0);
    CHECK(elevation_deg(-M_PI / 2.0) == -90.0);
}

TEST_CASE("antenna parameter validation", "[antenna]")
{
    ElementPattern bad;
    bad.theta_3db_deg = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    bad = {};
    bad.sla_v_db = -1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    CHECK_THROWS_AS(arr(0).validate(), InvalidParameter);
}
