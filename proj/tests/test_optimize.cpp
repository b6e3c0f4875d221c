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


#include "uavtilt/errors.hpp"
#include "uavtilt/optimize.hpp"
#include "uavtilt/scenario.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

using namespace uavtilt;
using Catch::Matchers::WithinAbs;

namespace
{
const UavProblem &toy()
{
    static const UavProblem p = make_toy_problem(Scenario{}, 3, 20.0);
    return p;
}

UavProblem lattice_toy()
{
    UavProblem p = toy();
    p.bounds.quantum = 5.0;
    return p;
}

GaParams small_ga(std::uint64_t seed)
{
    GaParams g;
    g.population = 24;
    g.generations = 12;
    g.seed = seed;
    return g;
}

PsoParams small_pso(std::uint64_t seed)
{
    PsoParams p;
    p.swarm = 24;
    p.iterations = 12;
    p.seed = seed;
    return p;
}

bool non_decreasing(const std::vector<double> &v)
{
    return std::is_sorted(v.begin(), v.end());
}
} // namespace

TEST_CASE("scheme names round-trip", "[optimize]")
{
    for (auto s : {Scheme::dt_only, Scheme::random, Scheme::single, Scheme::ga, Scheme::hybrid_ga, Scheme::pso,
                   Scheme::oracle})
        CHECK(parse_scheme(scheme_name(s)) == s);
    CHECK_FALSE(parse_scheme("annealing").has_value());
}

TEST_CASE("tilt bounds", "[optimize]")
{
    const TiltBounds b{5.0, 89.0, 5.0};
    const auto lat = b.lattice();
    REQUIRE(lat.size() == 18);
    CHECK(lat.front() == 5.0);
    CHECK(lat[16] == 85.0);
    CHECK(lat.back() == 89.0);
    CHECK(b.snap(7.4) == 5.0);
    CHECK(b.snap(7.5) == 5.0);
    CHECK(b.snap(7.6) == 10.0);
    CHECK(b.snap(87.5) == 89.0);
    CHECK(b.snap(86.9) == 85.0);
    CHECK(b.snap(-3.0) == 5.0);
    CHECK(TiltBounds{}.snap(33.3) == 33.3);
    CHECK(TiltBounds{}.clamp(95.0) == 89.0);
    CHECK_THROWS_AS((TiltBounds{10.0, 5.0, 0.0}).validate(), InvalidParameter);
}

TEST_CASE("objective", "[optimize]")
{
    const auto &p = toy();
    const auto t = TiltVector::uniform(3, 30.0);
    CHECK(objective(t, p) == p.links->min_sir_us_db(t));
    CHECK_THROWS_AS(objective(TiltVector::uniform(3, 4.0), p), InvalidParameter);
    CHECK_THROWS_AS(objective(TiltVector::uniform(2, 30.0), p), InvalidParameter);

    Scenario loud;
    loud.radio.tx_power_dbm = 56.0;
    const auto q = make_toy_problem(loud, 3, 20.0);
    CHECK_THAT(objective(t, q), WithinAbs(objective(t, p), 1e-9));
}

TEST_CASE("objective is unchanged by swapping symmetric ring-1 tilts", "[optimize]")
{
    Scenario s;
    s.grid_spacing = 25.0;
    const auto p = make_uav_problem(s);
    TiltVector t = TiltVector::uniform(19, 40.0);
    for (std::size_t b = 7; b < 19; ++b)
        t[b] = 60.0;
    t[1] = 20.0;
    t[4] = 30.0;
    TiltVector swapped = t;
    std::swap(swapped[1], swapped[4]);
    // ring-1 sites 1 and 4 are mirror images through the origin, and so is the grid
    CHECK_THAT(objective(swapped, p), WithinAbs(objective(t, p), 1e-9));
}

TEST_CASE("nominal tilts point at the centre cell at UAV altitude", "[optimize]")
{
    const auto &p = toy();
    const auto t = nominal_tilts(p);
    CHECK(t[0] == 89.0);
    CHECK_THAT(t[1], WithinAbs(rad_to_deg(std::atan2(200.0 - 31.0, 500.0)), 1e-12));
}

TEST_CASE("random baseline", "[optimize]")
{
    const auto &p = toy();
    const auto a = baseline_random(p, 7);
    const auto b = baseline_random(p, 7);
    CHECK(a.best_tilts == b.best_tilts);
    CHECK(a.evaluations == 1);
    CHECK(p.bounds.contains(a.best_tilts));
    CHECK(a.best_objective_db == objective(a.best_tilts, p));
    CHECK_FALSE(baseline_random(p, 8).best_tilts == a.best_tilts);
}

TEST_CASE("single-angle sweep", "[optimize]")
{
    const auto &p = toy();
    const auto r = baseline_single(p, 84.0);
    CHECK(r.evaluations == 2);
    CHECK(r.best_objective_db == std::max(objective(TiltVector::uniform(3, 5.0), p),
                                          objective(TiltVector::uniform(3, 89.0), p)));

    const auto full = baseline_single(p, 1.0);
    for (double a = 5.0; a <= 89.0; a += 1.0)
        CHECK(full.best_objective_db >= objective(TiltVector::uniform(3, a), p));
    CHECK_THROWS_AS(baseline_single(p, 0.0), InvalidParameter);
}

TEST_CASE("genetic algorithm", "[optimize]")
{
    const auto &p = toy();
    SECTION("zero generations returns the best initial individual")
    {
        auto g = small_ga(3);
        g.generations = 0;
        const auto r = ga_optimize(p, g);
        CHECK(r.objective_trace.size() == 1);
        CHECK(r.evaluations <= g.population);
        CHECK(r.best_objective_db == r.objective_trace[0]);
    }
    SECTION("elitist trace and reproducibility")
    {
        const auto a = ga_optimize(p, small_ga(5));
        const auto b = ga_optimize(p, small_ga(5));
        CHECK(non_decreasing(a.objective_trace));
        CHECK(a.objective_trace.size() == 13);
        CHECK(a.best_tilts == b.best_tilts);
        CHECK(a.objective_trace == b.objective_trace);
        CHECK(a.best_objective_db == objective(a.best_tilts, p));
        CHECK(p.bounds.contains(a.best_tilts));
    }
    SECTION("thread count does not change the result")
    {
        UavProblem q = p;
        q.threads = 4;
        const auto a = ga_optimize(p, small_ga(9));
        const auto b = ga_optimize(q, small_ga(9));
        CHECK(a.best_tilts == b.best_tilts);
        CHECK(a.objective_trace == b.objective_trace);
        CHECK(a.evaluations == b.evaluations);
    }
    SECTION("parameter validation")
    {
        auto g = small_ga(1);
        g.population = 1;
        CHECK_THROWS_AS(ga_optimize(p, g), InvalidParameter);
        g = small_ga(1);
        g.mutation_prob = 1.5;
        CHECK_THROWS_AS(ga_optimize(p, g), InvalidParameter);
        g = small_ga(1);
        g.elite_count = g.population;
        CHECK_THROWS_AS(ga_optimize(p, g), InvalidParameter);
    }
}

TEST_CASE("local search", "[optimize]")
{
    const auto &p = toy();
    const auto start = TiltVector::uniform(3, 30.0);
    const auto r = local_refine(start, p, LocalSearchParams{});
    CHECK(r.best_objective_db >= objective(start, p));
    CHECK(non_decreasing(r.objective_trace));
    CHECK(r.best_objective_db == objective(r.best_tilts, p));

    // step halves only after an unproductive pass and stops below step_min
    REQUIRE_FALSE(r.step_trace.empty());
    CHECK(r.step_trace.front() == 2.0);
    for (std::size_t k = 1; k < r.step_trace.size(); ++k)
        CHECK((r.step_trace[k] == r.step_trace[k - 1] || r.step_trace[k] == r.step_trace[k - 1] / 2.0));
    CHECK(r.step_trace.back() >= 0.1);
    CHECK(r.step_trace.back() < 0.2);
    CHECK(r.step_trace.size() <= 50);

    LocalSearchParams bad;
    bad.step_min = 3.0;
    CHECK_THROWS_AS(local_refine(start, p, bad), InvalidParameter);
    CHECK_THROWS_AS(local_refine(TiltVector::uniform(3, 1.0), p, LocalSearchParams{}), InvalidParameter);
}

TEST_CASE("hybrid GA", "[optimize]")
{
    const auto &p = toy();
    const auto g = ga_optimize(p, small_ga(11));
    const auto h = hybrid_ga(p, small_ga(11), LocalSearchParams{});
    CHECK(h.best_objective_db >= g.best_objective_db);
    CHECK(h.scheme == Scheme::hybrid_ga);
    CHECK(non_decreasing(h.objective_trace));

    LocalSearchParams none;
    none.max_iters = 0;
    const auto z = hybrid_ga(p, small_ga(11), none);
    CHECK(z.best_tilts == g.best_tilts);
    CHECK(z.best_objective_db == g.best_objective_db);
    CHECK(z.objective_trace == g.objective_trace);
}

TEST_CASE("particle swarm", "[optimize]")
{
    const auto &p = toy();
    SECTION("zero iterations")
    {
        auto s = small_pso(2);
        s.iterations = 0;
        const auto r = pso_optimize(p, s, std::nullopt);
        CHECK(r.objective_trace.size() == 1);
        const auto nominal = objective(nominal_tilts(p), p);
        CHECK(r.best_objective_db >= nominal);
        const auto refined = pso_optimize(p, s);
        CHECK(refined.best_objective_db >= r.best_objective_db);
    }
    SECTION("global best trace, bounds and reproducibility")
    {
        const auto a = pso_optimize(p, small_pso(4));
        const auto b = pso_optimize(p, small_pso(4));
        CHECK(non_decreasing(a.objective_trace));
        CHECK(a.best_tilts == b.best_tilts);
        CHECK(a.objective_trace == b.objective_trace);
        CHECK(p.bounds.contains(a.best_tilts));
        CHECK(a.best_objective_db == objective(a.best_tilts, p));

        UavProblem q = p;
        q.threads = 3;
        CHECK(pso_optimize(q, small_pso(4)).best_tilts == a.best_tilts);
    }
    SECTION("stall restarts keep the global best")
    {
        auto s = small_pso(5);
        s.iterations = 30;
        s.restart_after = 1;
        const auto r = pso_optimize(p, s, std::nullopt);
        CHECK(r.objective_trace.size() == 31);
        CHECK(non_decreasing(r.objective_trace));
        CHECK(r.best_objective_db == objective(r.best_tilts, p));
        s.restart_after = 0;
        const auto plain = pso_optimize(p, s, std::nullopt);
        CHECK(plain.objective_trace.size() == 31);
        CHECK(non_decreasing(plain.objective_trace));
    }
    SECTION("parameter validation")
    {
        auto s = small_pso(1);
        s.inertia = 1.0;
        CHECK_THROWS_AS(pso_optimize(p, s), InvalidParameter);
        s = small_pso(1);
        s.v_max = 0.0;
        CHECK_THROWS_AS(pso_optimize(p, s), InvalidParameter);
    }
}

TEST_CASE("lattice-restricted heuristics stay on the lattice", "[optimize]")
{
    const auto p = lattice_toy();
    const auto lat = p.bounds.lattice();
    auto on_lattice = [&](const TiltVector &t)
    { return std::all_of(t.begin(), t.end(), [&](double a) { return std::find(lat.begin(), lat.end(), a) != lat.end(); }); };
    CHECK(on_lattice(hybrid_ga(p, small_ga(1), LocalSearchParams{}).best_tilts));
    CHECK(on_lattice(pso_optimize(p, small_pso(1)).best_tilts));
    CHECK(on_lattice(baseline_random(p, 1).best_tilts));
}

TEST_CASE("brute-force oracle", "[optimize]")
{
    SECTION("one free tilt, quantum 84")
    {
        UavProblem one = make_toy_problem(Scenario{}, 1, 40.0);
        const auto r = brute_force_oracle(one, 84.0);
        CHECK(r.evaluations == 2);
        CHECK(r.best_objective_db == std::max(objective(TiltVector{5.0}, one), objective(TiltVector{89.0}, one)));
    }
    SECTION("dominates every lattice candidate and the heuristics")
    {
        UavProblem two = make_toy_problem(Scenario{}, 2, 40.0);
        const auto r = brute_force_oracle(two, 10.0);
        const auto lat = TiltBounds{5.0, 89.0, 10.0}.lattice();
        CHECK(r.evaluations == lat.size() * lat.size());
        for (double a : lat)
            for (double b : lat)
                CHECK(r.best_objective_db >= objective(TiltVector{a, b}, two));
    }
    SECTION("refuses oversized lattices")
    {
        Scenario s;
        s.grid_spacing = 100.0;
        const auto full = make_uav_problem(s);
        CHECK_THROWS_AS(brute_force_oracle(full, 5.0), InvalidParameter);
        CHECK_THROWS_AS(brute_force_oracle(toy(), 0.0), InvalidParameter);
    }
}

TEST_CASE("stream seeds differ across steps and indices", "[optimize]")
{
    CHECK(derive_stream_seed(1, 0, 0) != derive_stream_seed(1, 0, 1));
    CHECK(derive_stream_seed(1, 0, 1) != derive_stream_seed(1, 1, 0));
    CHECK(derive_stream_seed(1, 2, 3) == derive_stream_seed(1, 2, 3));
    CHECK(derive_stream_seed(1, 2, 3) != derive_stream_seed(2, 2, 3));
}
