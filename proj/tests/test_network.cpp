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


#include "oracle/reference_model.hpp"
#include "uavtilt/errors.hpp"
#include "uavtilt/network.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace uavtilt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
std::vector<ref::P2> ref_sites(const SiteLayout &L)
{
    std::vector<ref::P2> out;
    for (const auto &s : L.sites)
        out.push_back({s.x, s.y});
    return out;
}

PowerMatrix toy_matrix(std::vector<double> ut, std::vector<double> dt)
{
    PowerMatrix pm;
    pm.points = 1;
    pm.sites = ut.size();
    pm.p_ut = std::move(ut);
    pm.p_dt = std::move(dt);
    return pm;
}
} // namespace

TEST_CASE("power matrix shape and positivity", "[network]")
{
    const auto L = build_layout(500.0);
    const auto G = build_receiver_grid(L, 50.0, 200.0);
    const auto pm = compute_power_matrix(G, L, TiltVector::uniform(19, 45.0), -6.0, LinkModel{});
    CHECK(pm.points == G.size());
    CHECK(pm.sites == 19);
    for (double v : pm.p_ut)
        CHECK((v > 0.0 && std::isfinite(v)));
    for (double v : pm.p_dt)
        CHECK((v > 0.0 && std::isfinite(v)));

    const auto one = compute_power_matrix(G, L.truncated(1), TiltVector::uniform(1, 45.0), -6.0, LinkModel{});
    CHECK(one.sites == 1);
    CHECK(one.p_ut.size() == G.size());
}

TEST_CASE("power matrix spot entries match the reference chain", "[network]")
{
    const auto L = build_layout(500.0);
    const auto G = build_receiver_grid(L, 10.0, 200.0);
    const auto pm = compute_power_matrix(G, L, TiltVector::uniform(19, 45.0), -6.0, LinkModel{});
    const auto sites = ref_sites(L);
    const std::vector<double> tilts(19, 45.0);
    ref::Params p;
    for (std::size_t u : {0ul, 517ul, 1100ul, G.size() - 1})
    {
        const auto r = ref::evaluate_point(sites, 500.0, {G.points[u].x, G.points[u].y}, 200.0, tilts, -6.0, p);
        for (std::size_t b = 0; b < 19; ++b)
        {
            CHECK_THAT(pm.ut(u, b), WithinRel(r.ut[b], 1e-9));
            CHECK_THAT(pm.dt(u, b), WithinRel(r.dt[b], 1e-9));
        }
        const auto a = associate(pm);
        CHECK(a.serving[u] == r.serving);
        CHECK_THAT(sir_us(pm, a)[u], WithinRel(r.sir_us, 1e-9));
        CHECK_THAT(sir_cs(pm, a)[u], WithinRel(r.sir_cs, 1e-9));
    }
}

TEST_CASE("six-fold symmetry at the origin", "[network]")
{
    const auto L = build_layout(500.0);
    ReceiverGrid g;
    g.points = {{0.0, 0.0}};
    g.height = 200.0;
    g.spacing = 10.0;
    const auto pm = compute_power_matrix(g, L, TiltVector::uniform(19, 30.0), -6.0, LinkModel{});
    for (std::size_t b = 2; b <= 6; ++b)
    {
        CHECK_THAT(pm.ut(0, b), WithinRel(pm.ut(0, 1), 1e-9));
        CHECK_THAT(pm.dt(0, b), WithinRel(pm.dt(0, 1), 1e-9));
    }
    // with every booster pointing straight up the overhead site serves
    const auto up = compute_power_matrix(g, L, TiltVector::uniform(19, 89.0), -6.0, LinkModel{});
    CHECK(associate(up).serving[0] == 0);
}

TEST_CASE("association", "[network]")
{
    auto pm = toy_matrix({1.0, 3.0, 2.0}, {0.5, 0.5, 4.0});
    auto a = associate(pm);
    CHECK(a.serving[0] == 2);
    CHECK(a.serving_power[0] == 4.0);

    pm = toy_matrix({2.0, 2.0}, {1.0, 1.0});
    CHECK(associate(pm).serving[0] == 0);

    // scale invariance
    pm = toy_matrix({1.0, 3.0, 2.0}, {0.5, 0.5, 2.9});
    auto scaled = pm;
    for (auto &v : scaled.p_ut)
        v *= 7.5;
    for (auto &v : scaled.p_dt)
        v *= 7.5;
    CHECK(associate(pm).serving == associate(scaled).serving);
}

TEST_CASE("uncoordinated and coordinated SIR", "[network]")
{
    SECTION("direct ratio")
    {
        const auto pm = toy_matrix({2.0, 0.5}, {0.25, 0.25});
        const auto a = associate(pm);
        REQUIRE(a.serving[0] == 0);
        CHECK_THAT(sir_us(pm, a)[0], WithinRel(2.0, 1e-15));
        CHECK_THAT(sir_cs(pm, a)[0], WithinRel(4.0, 1e-15));
    }
    SECTION("non-serving powers x10 reduce SIR by less than 10x")
    {
        auto pm = toy_matrix({2.0, 0.5, 0.3}, {0.4, 0.25, 0.1});
        const auto a = associate(pm);
        const double before = sir_us(pm, a)[0];
        for (std::size_t b = 1; b < 3; ++b)
        {
            pm.p_ut[b] *= 10.0;
            pm.p_dt[b] *= 10.0;
        }
        const double ratio = sir_us(pm, a)[0] / before;
        CHECK(ratio > 0.1);
        CHECK(ratio < 1.0);
    }
    SECTION("zero DT makes the slots coincide")
    {
        const auto pm = toy_matrix({2.0, 0.5, 0.3}, {0.0, 0.0, 0.0});
        const auto a = associate(pm);
        CHECK(sir_us(pm, a)[0] == sir_cs(pm, a)[0]);
    }
}

TEST_CASE("link table reproduces the matrix path and TDIC dominance", "[network]")
{
    const auto L = build_layout(500.0);
    const auto G = build_receiver_grid(L, 25.0, 200.0);
    const LinkTable table(G, L, -6.0, LinkModel{});
    TiltVector t = TiltVector::uniform(19, 5.0);
    for (std::size_t b = 0; b < 19; ++b)
        t[b] = 5.0 + 4.3 * static_cast<double>(b);

    const auto pm = table.power_matrix(t);
    const auto a = associate(pm);
    const auto us = sir_us(pm, a);
    const auto cs = sir_cs(pm, a);
    const auto f = table.sir_field(t, 3);
    double mn = INFINITY;
    for (std::size_t u = 0; u < G.size(); ++u)
    {
        CHECK(f.serving[u] == a.serving[u]);
        CHECK(f.sir_us_db[u] == to_db(us[u]));
        CHECK(f.sir_cs_db[u] == to_db(cs[u]));
        CHECK(f.sir_cs_db[u] >= f.sir_us_db[u]);
        mn = std::min(mn, f.sir_us_db[u]);
    }
    CHECK(table.min_sir_us_db(t, 1) == mn);
    CHECK(table.min_sir_us_db(t, 4) == mn);
}

TEST_CASE("SIR is invariant to transmit power", "[network]")
{
    const auto L = build_layout(500.0);
    const auto G = build_receiver_grid(L, 40.0, 200.0);
    LinkModel hot;
    hot.radio.tx_power_dbm = 56.0;
    const auto t = TiltVector::uniform(19, 40.0);
    const auto f1 = LinkTable(G, L, -6.0, LinkModel{}).sir_field(t);
    const auto f2 = LinkTable(G, L, -6.0, hot).sir_field(t);
    for (std::size_t u = 0; u < G.size(); ++u)
        CHECK_THAT(std::pow(10.0, f1.sir_us_db[u] / 10.0), WithinRel(std::pow(10.0, f2.sir_us_db[u] / 10.0), 1e-12));
}

TEST_CASE("spectral efficiency and rate metrics", "[network]")
{
    CHECK(spectral_efficiency(0.0) == 0.0);
    CHECK(spectral_efficiency(1.0) == 1.0);
    CHECK(spectral_efficiency(3.0) == 2.0);
    CHECK_THROWS_AS(spectral_efficiency(-0.1), InvalidParameter);

    const std::vector<double> a{3.0, 1.0, 2.0};
    auto m = rate_metrics(a);
    CHECK(m.min_se == 1.0);
    CHECK(m.median_se == 2.0);
    CHECK(m.sum_se == 6.0);

    m = rate_metrics(std::vector<double>{5.0, 5.0, 5.0, 5.0});
    CHECK(m.min_se == 5.0);
    CHECK(m.median_se == 5.0);
    CHECK(m.sum_se == 20.0);

    m = rate_metrics(std::vector<double>{4.0, 1.0, 3.0, 2.0});
    CHECK(m.median_se == 2.0);
    CHECK_THROWS_AS(rate_metrics(std::vector<double>{}), InvalidParameter);
}

TEST_CASE("empirical CDF", "[network]")
{
    auto e = ecdf(std::vector<double>{0.0});
    REQUIRE(e.size() == 1);
    CHECK(e[0].value == 0.0);
    CHECK(e[0].prob == 1.0);

    e = ecdf(std::vector<double>{2.0, 1.0});
    CHECK(e[0].value == 1.0);
    CHECK(e[0].prob == 0.5);
    CHECK(e[1].value == 2.0);
    CHECK(e[1].prob == 1.0);

    e = ecdf(std::vector<double>{3.0, -1.0, 7.5, 0.0, 0.0});
    for (std::size_t k = 1; k < e.size(); ++k)
    {
        CHECK(e[k].prob >= e[k - 1].prob);
        CHECK(e[k].value >= e[k - 1].value);
    }
    CHECK(e.back().prob == 1.0);
    CHECK_THROWS_AS(ecdf(std::vector<double>{}), InvalidParameter);
}

TEST_CASE("downtilt-only baseline", "[network]")
{
    const auto L = build_layout(500.0);
    const auto G = build_receiver_grid(L, 40.0, 200.0);
    const LinkTable table(G, L, -6.0, LinkModel{});
    const auto f = table.dt_only_field();
    CHECK_FALSE(f.cs_applicable());
    const auto sites = ref_sites(L);
    ref::Params p;
    for (std::size_t u = 0; u < G.size(); u += 7)
    {
        std::vector<double> dt;
        for (std::size_t b = 0; b < 19; ++b)
            dt.push_back(ref::power_dt(ref::wrap(sites[b], {G.points[u].x, G.points[u].y}, 500.0), 200.0, -6.0, p));
        std::size_t s = 0;
        for (std::size_t b = 1; b < 19; ++b)
            if (dt[b] > dt[s])
                s = b;
        double i = 0.0;
        for (std::size_t b = 0; b < 19; ++b)
            if (b != s)
                i += dt[b];
        CHECK(f.serving[u] == s);
        CHECK_THAT(f.sir_us_db[u], WithinAbs(to_db(dt[s] / i), 1e-9));
    }

    const LinkTable lone(G, L.truncated(1), -6.0, LinkModel{});
    const auto g = lone.dt_only_field();
    CHECK(std::isinf(g.sir_us_db[0]));
    CHECK(g.sir_us_db[0] > 0.0);
}

TEST_CASE("ground users", "[network]")
{
    const auto L = build_layout(100.0);
    const auto G = build_receiver_grid(L, 10.0, 1.5);
    const auto t = TiltVector::uniform(19, 20.0);
    const LinkModel m;

    ReceiverGrid origin;
    origin.points = {{0.0, 0.0}};
    origin.height = 1.5;
    origin.spacing = 10.0;
    // directly below a mast the downtilted pattern is deep in its lower side lobes,
    // so the ground user at the origin is served by the strongest ring-1 site
    const LinkTable at_origin(origin, L, -6.0, m);
    std::vector<double> dt;
    for (std::size_t b = 0; b < 19; ++b)
        dt.push_back(ref::power_dt(ref::wrap({L.sites[b].x, L.sites[b].y}, {0.0, 0.0}, 100.0), 1.5, -6.0, ref::Params{}));
    const auto s0 = kernel::strongest(at_origin.dt_row(0));
    CHECK(s0 == static_cast<std::size_t>(std::max_element(dt.begin(), dt.end()) - dt.begin()));

    const auto with_ut = gue_sir(G, L, t, -6.0, m, {true, true});
    const auto without = gue_sir(G, L, t, -6.0, m, {false, true});
    const LinkTable table(G, L, -6.0, m);
    for (std::size_t u = 0; u < G.size(); ++u)
    {
        const auto dt = table.dt_row(u);
        const auto s = kernel::strongest(dt);
        double i = 0.0;
        for (std::size_t b = 0; b < 19; ++b)
            if (b != s)
                i += dt[b];
        CHECK_THAT(without[u], WithinRel(dt[s] / i, 1e-12));
        CHECK(with_ut[u] <= without[u]);
    }
}

TEST_CASE("ground-user spectral efficiency", "[network]")
{
    CHECK(gue_spectral_efficiency(5.0, 0.0) == 0.0);
    CHECK(gue_spectral_efficiency(1.0, 1.0) == 1.0);
    for (double sir : {0.01, 0.7, 3.0, 120.0})
    {
        CHECK_THAT(gue_spectral_efficiency(sir, 0.5) / gue_spectral_efficiency(sir, 0.25), WithinRel(2.0, 1e-12));
        CHECK(gue_spectral_efficiency(sir, 0.75) >= gue_spectral_efficiency(sir, 0.5));
    }
    CHECK_THROWS_AS(gue_spectral_efficiency(1.0, 1.5), InvalidParameter);
    CHECK_THROWS_AS(gue_spectral_efficiency(1.0, -0.1), InvalidParameter);
}

TEST_CASE("tilt vector size is checked", "[network]")
{
    const auto L = build_layout(500.0);
    const auto G = build_receiver_grid(L, 100.0, 200.0);
    const LinkTable table(G, L, -6.0, LinkModel{});
    CHECK_THROWS_AS(table.sir_field(TiltVector::uniform(18, 10.0)), InvalidParameter);
}
