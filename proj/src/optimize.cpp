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

#include "uavtilt/optimize.hpp"
#include "uavtilt/errors.hpp"
#include "uavtilt/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

namespace uavtilt
{

std::string_view scheme_name(Scheme s)
{
    switch (s)
    {
    case Scheme::dt_only:
        return "dt_only";
    case Scheme::random:
        return "random";
    case Scheme::single:
        return "single";
    case Scheme::ga:
        return "ga";
    case Scheme::hybrid_ga:
        return "hybrid_ga";
    case Scheme::pso:
        return "pso";
    case Scheme::oracle:
        return "oracle";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name)
{
    for (Scheme s : {Scheme::dt_only, Scheme::random, Scheme::single, Scheme::ga, Scheme::hybrid_ga, Scheme::pso,
                     Scheme::oracle})
        if (scheme_name(s) == name)
            return s;
    return std::nullopt;
}

// ---- bounds ----------------------------------------------------------------

bool TiltBounds::contains(const TiltVector &t) const
{
    return std::all_of(t.begin(), t.end(), [this](double a) { return contains(a); });
}

double TiltBounds::clamp(double angle) const { return std::clamp(angle, lo, hi); }

double TiltBounds::snap(double angle) const
{
    const double a = clamp(angle);
    if (quantum <= 0.0)
        return a;
    const double last_k = std::floor((hi - lo) / quantum + 1e-9);
    const double k = std::min(std::floor((a - lo) / quantum), last_k);
    const double below = lo + k * quantum;
    const double above = k < last_k ? lo + (k + 1.0) * quantum : hi;
    return (a - below) <= (above - a) ? below : above;
}

std::vector<double> TiltBounds::lattice() const
{
    if (quantum <= 0.0)
        throw InvalidParameter("TiltBounds::lattice: quantum must be positive");
    std::vector<double> out;
    const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / quantum + 1e-9));
    for (std::size_t k = 0; k <= steps; ++k)
        out.push_back(lo + static_cast<double>(k) * quantum);
    if (hi - out.back() > 1e-9)
        out.push_back(hi);
    return out;
}

void TiltBounds::validate() const
{
    if (!(lo < hi) || lo < -90.0 || hi > 90.0)
        throw InvalidParameter("tilt bounds must satisfy -90 <= lo < hi <= 90");
    if (quantum < 0.0)
        throw InvalidParameter("tilt quantum must be non-negative");
}

void GaParams::validate() const
{
    if (population < 2)
        throw InvalidParameter("ga: population must be at least 2");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0))
        throw InvalidParameter("ga: mutation probability must lie in [0, 1]");
    if (elite_count >= population)
        throw InvalidParameter("ga: elite count must be smaller than the population");
}

void LocalSearchParams::validate() const
{
    if (!(step_min > 0.0) || !(step_min <= step_init))
        throw InvalidParameter("local search: need 0 < step_min <= step_init");
}

void PsoParams::validate() const
{
    if (swarm < 2)
        throw InvalidParameter("pso: swarm must be at least 2");
    if (!(inertia > 0.0 && inertia < 1.0))
        throw InvalidParameter("pso: inertia must lie in (0, 1)");
    if (!(v_max > 0.0))
        throw InvalidParameter("pso: v_max must be positive");
    if (!(c1 >= 0.0) || !(c2 >= 0.0) || (init_spread && !(*init_spread >= 0.0)))
        throw InvalidParameter("pso: coefficients and spread must be non-negative");
}

// ---- randomness --------------------------------------------------------------

namespace
{
std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t step, std::uint64_t index)
{
    return splitmix64(splitmix64(splitmix64(seed) ^ step) ^ (index * 0x2545f4914f6cdd1dULL));
}

namespace
{
// mt19937_64 output is fixed by the standard; the conversions below avoid
// library-specific distributions so sequences match across toolchains.
class Stream
{
public:
    Stream(std::uint64_t seed, std::uint64_t step, std::uint64_t index)
        : engine_(derive_stream_seed(seed, step, index))
    {
    }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    std::size_t index(std::size_t n)
    {
        const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return std::min(k, n - 1);
    }

private:
    std::mt19937_64 engine_;
};

double random_angle(Stream &rng, const TiltBounds &bounds, const std::vector<double> &lattice)
{
    if (!lattice.empty())
        return lattice[rng.index(lattice.size())];
    return rng.uniform(bounds.lo, bounds.hi);
}

std::vector<double> lattice_or_empty(const TiltBounds &b)
{
    return b.quantum > 0.0 ? b.lattice() : std::vector<double>{};
}

// Memoized objective for one optimizer run. Batches are deduplicated in
// submission order and only the misses are evaluated (in parallel), so the
// evaluation count and every value are independent of the thread count.
class CachedObjective
{
public:
    explicit CachedObjective(const UavProblem &problem) : problem_(problem) {}

    double operator()(const TiltVector &t)
    {
        assert(problem_.bounds.contains(t));
        const auto key = key_of(t);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        const double v = problem_.links->min_sir_us_db(t, problem_.threads);
        cache_.emplace(key, v);
        return v;
    }

    std::vector<double> batch(const std::vector<TiltVector> &cands)
    {
        std::vector<double> out(cands.size());
        std::vector<std::string> keys(cands.size());
        std::vector<std::size_t> misses;
        std::unordered_map<std::string, std::size_t> pending;
        for (std::size_t i = 0; i < cands.size(); ++i)
        {
            assert(problem_.bounds.contains(cands[i]));
            keys[i] = key_of(cands[i]);
            if (!cache_.contains(keys[i]) && !pending.contains(keys[i]))
            {
                pending.emplace(keys[i], i);
                misses.push_back(i);
            }
        }
        std::vector<double> values(misses.size());
        parallel_for(misses.size(), problem_.threads, [&](std::size_t m)
                     { values[m] = problem_.links->min_sir_us_db(cands[misses[m]], 1); });
        for (std::size_t m = 0; m < misses.size(); ++m)
            cache_.emplace(keys[misses[m]], values[m]);
        for (std::size_t i = 0; i < cands.size(); ++i)
            out[i] = cache_.at(keys[i]);
        return out;
    }

    std::size_t evaluations() const { return cache_.size(); }

private:
    static std::string key_of(const TiltVector &t)
    {
        std::string k(t.size() * sizeof(double), '\0');
        std::memcpy(k.data(), t.angles().data(), k.size());
        return k;
    }

    const UavProblem &problem_;
    std::unordered_map<std::string, double> cache_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_problem(const UavProblem &problem)
{
    if (!problem.links)
        throw InvalidParameter("problem has no link table");
    if (problem.links->sites() != problem.sites())
        throw InvalidParameter("link table and layout disagree on the site count");
    problem.bounds.validate();
}

std::size_t argmax_first(const std::vector<double> &v)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best])
            best = i;
    return best;
}

// Coordinate-wise first-improvement search. Continuous mode halves the step
// after a pass without improvement; lattice mode moves one lattice index and
// stops after the first pass without improvement.
void refine_in_place(TiltVector &x, double &fx, CachedObjective &eval, const UavProblem &problem,
                     const LocalSearchParams &params, std::vector<double> &trace, std::vector<double> &steps)
{
    const auto lattice = lattice_or_empty(problem.bounds);
    const auto neighbor = [&](double angle, int dir, double delta)
    {
        if (lattice.empty())
            return problem.bounds.clamp(angle + dir * delta);
        auto it = std::lower_bound(lattice.begin(), lattice.end(), angle);
        auto idx = static_cast<std::ptrdiff_t>(it - lattice.begin());
        idx = std::clamp<std::ptrdiff_t>(idx + dir, 0, static_cast<std::ptrdiff_t>(lattice.size()) - 1);
        return lattice[static_cast<std::size_t>(idx)];
    };

    double delta = params.step_init;
    for (std::size_t pass = 0; pass < params.max_iters && delta >= params.step_min; ++pass)
    {
        steps.push_back(delta);
        bool improved = false;
        for (std::size_t b = 0; b < x.size(); ++b)
            for (int dir : {+1, -1})
            {
                TiltVector cand = x;
                cand[b] = neighbor(x[b], dir, delta);
                if (cand[b] == x[b])
                    continue;
                const double fc = eval(cand);
                if (fc > fx)
                {
                    x = std::move(cand);
                    fx = fc;
                    improved = true;
                    break;
                }
            }
        trace.push_back(fx);
        if (!improved)
        {
            if (!lattice.empty())
                break;
            delta /= 2.0;
        }
    }
}

OptimizerReport run_ga(const UavProblem &problem, const GaParams &params, CachedObjective &eval)
{
    params.validate();
    const std::size_t n = problem.sites();
    const std::size_t m = params.population;
    const auto lattice = lattice_or_empty(problem.bounds);

    std::vector<TiltVector> pop(m, TiltVector::uniform(n, problem.bounds.lo));
    for (std::size_t i = 0; i < m; ++i)
    {
        Stream rng(params.seed, 0, i);
        for (std::size_t d = 0; d < n; ++d)
            pop[i][d] = random_angle(rng, problem.bounds, lattice);
    }
    std::vector<double> fit = eval.batch(pop);

    OptimizerReport rep;
    rep.scheme = Scheme::ga;
    rep.seed = params.seed;
    std::size_t bi = argmax_first(fit);
    rep.best_tilts = pop[bi];
    rep.best_objective_db = fit[bi];
    rep.objective_trace.push_back(rep.best_objective_db);

    const std::size_t elites = std::min(params.elite_count, m);
    for (std::size_t g = 1; g <= params.generations; ++g)
    {
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fit[a] > fit[b]; });

        const auto [fmin_it, fmax_it] = std::minmax_element(fit.begin(), fit.end());
        const double fmin = *fmin_it;
        const double eps = 1e-6 * (*fmax_it - fmin + 1.0);
        std::vector<double> cumulative(m);
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i)
        {
            acc += fit[i] - fmin + eps;
            cumulative[i] = acc;
        }
        const auto roulette = [&](Stream &rng)
        {
            const double r = rng.uniform() * acc;
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
            return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), m - 1);
        };

        std::vector<TiltVector> next;
        next.reserve(m);
        for (std::size_t e = 0; e < elites; ++e)
            next.push_back(pop[order[e]]);
        std::vector<TiltVector> children;
        for (std::size_t k = 0; next.size() + children.size() < m; ++k)
        {
            Stream rng(params.seed, g, k);
            const TiltVector &pa = pop[roulette(rng)];
            const TiltVector &pb = pop[roulette(rng)];
            TiltVector c1 = pa;
            TiltVector c2 = pb;
            if (n >= 2)
            {
                const std::size_t cut = 1 + rng.index(n - 1);
                for (std::size_t d = cut; d < n; ++d)
                {
                    c1[d] = pb[d];
                    c2[d] = pa[d];
                }
            }
            for (TiltVector *c : {&c1, &c2})
                for (std::size_t d = 0; d < n; ++d)
                    if (rng.uniform() < params.mutation_prob)
                        (*c)[d] = random_angle(rng, problem.bounds, lattice);
            children.push_back(std::move(c1));
            if (next.size() + children.size() < m)
                children.push_back(std::move(c2));
        }
        const auto child_fit = eval.batch(children);

        std::vector<double> new_fit;
        new_fit.reserve(m);
        for (std::size_t e = 0; e < elites; ++e)
            new_fit.push_back(fit[order[e]]);
        for (std::size_t c = 0; c < children.size(); ++c)
        {
            next.push_back(std::move(children[c]));
            new_fit.push_back(child_fit[c]);
        }
        pop = std::move(next);
        fit = std::move(new_fit);

        bi = argmax_first(fit);
        if (fit[bi] > rep.best_objective_db)
        {
            rep.best_objective_db = fit[bi];
            rep.best_tilts = pop[bi];
        }
        rep.objective_trace.push_back(rep.best_objective_db);
    }
    rep.evaluations = eval.evaluations();
    return rep;
}

OptimizerReport run_refine(const TiltVector &start, const UavProblem &problem, const LocalSearchParams &params,
                           CachedObjective &eval)
{
    params.validate();
    OptimizerReport rep;
    rep.scheme = Scheme::hybrid_ga;
    rep.best_tilts = start;
    for (auto &a : rep.best_tilts)
        a = problem.bounds.snap(a);
    rep.best_objective_db = eval(rep.best_tilts);
    rep.objective_trace.push_back(rep.best_objective_db);
    refine_in_place(rep.best_tilts, rep.best_objective_db, eval, problem, params, rep.objective_trace,
                    rep.step_trace);
    rep.evaluations = eval.evaluations();
    return rep;
}

// Appends a refinement trace (minus its starting point) to an optimizer trace.
void merge_refinement(OptimizerReport &into, const OptimizerReport &refined)
{
    into.best_tilts = refined.best_tilts;
    into.best_objective_db = refined.best_objective_db;
    into.objective_trace.insert(into.objective_trace.end(), refined.objective_trace.begin() + 1,
                                refined.objective_trace.end());
    into.step_trace = refined.step_trace;
}
} // namespace

// ---- public operations -------------------------------------------------------

double objective(const TiltVector &tilts, const UavProblem &problem)
{
    check_problem(problem);
    if (tilts.size() != problem.sites())
        throw InvalidParameter("objective: tilt vector size does not match the layout");
    if (!problem.bounds.contains(tilts))
        throw InvalidParameter("objective: tilt outside [" + std::to_string(problem.bounds.lo) + ", " +
                               std::to_string(problem.bounds.hi) + "]");
    return problem.links->min_sir_us_db(tilts, problem.threads);
}

TiltVector nominal_tilts(const SiteLayout &layout, double uav_height, double ut_height, const TiltBounds &bounds)
{
    const double rise = uav_height - ut_height;
    TiltVector t = TiltVector::uniform(layout.size(), bounds.lo);
    for (std::size_t b = 0; b < layout.size(); ++b)
        t[b] = bounds.snap(rad_to_deg(std::atan2(rise, layout.sites[b].norm())));
    return t;
}

TiltVector nominal_tilts(const UavProblem &problem)
{
    return nominal_tilts(problem.layout, problem.uav_height, problem.links->model().ut_height, problem.bounds);
}

SirField baseline_dt_only(const UavProblem &problem)
{
    check_problem(problem);
    return problem.links->dt_only_field();
}

OptimizerReport baseline_random(const UavProblem &problem, std::uint64_t seed)
{
    check_problem(problem);
    const auto t0 = Clock::now();
    const auto lattice = lattice_or_empty(problem.bounds);
    Stream rng(seed, 0, 0);
    TiltVector t = TiltVector::uniform(problem.sites(), problem.bounds.lo);
    for (auto &a : t)
        a = random_angle(rng, problem.bounds, lattice);

    OptimizerReport rep;
    rep.scheme = Scheme::random;
    rep.seed = seed;
    rep.best_tilts = t;
    rep.best_objective_db = problem.links->min_sir_us_db(t, problem.threads);
    rep.objective_trace = {rep.best_objective_db};
    rep.evaluations = 1;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

OptimizerReport baseline_single(const UavProblem &problem, double grid_step)
{
    check_problem(problem);
    if (!(grid_step > 0.0))
        throw InvalidParameter("baseline_single: grid_step must be positive");
    const auto t0 = Clock::now();
    const TiltBounds sweep{problem.bounds.lo, problem.bounds.hi, grid_step};
    const auto angles = sweep.lattice();
    std::vector<TiltVector> cands;
    for (double a : angles)
        cands.push_back(TiltVector::uniform(problem.sites(), a));
    CachedObjective eval(problem);
    const auto fit = eval.batch(cands);

    OptimizerReport rep;
    rep.scheme = Scheme::single;
    rep.best_objective_db = fit[0];
    rep.best_tilts = cands[0];
    for (std::size_t i = 0; i < fit.size(); ++i)
    {
        if (fit[i] > rep.best_objective_db)
        {
            rep.best_objective_db = fit[i];
            rep.best_tilts = cands[i];
        }
        rep.objective_trace.push_back(rep.best_objective_db);
    }
    rep.evaluations = eval.evaluations();
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

OptimizerReport ga_optimize(const UavProblem &problem, const GaParams &params)
{
    check_problem(problem);
    const auto t0 = Clock::now();
    CachedObjective eval(problem);
    auto rep = run_ga(problem, params, eval);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

OptimizerReport local_refine(const TiltVector &start, const UavProblem &problem, const LocalSearchParams &params)
{
    check_problem(problem);
    if (start.size() != problem.sites() || !problem.bounds.contains(start))
        throw InvalidParameter("local_refine: start vector must match the layout and lie within bounds");
    const auto t0 = Clock::now();
    CachedObjective eval(problem);
    auto rep = run_refine(start, problem, params, eval);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

OptimizerReport refine_ga_result(const OptimizerReport &ga, const UavProblem &problem, const LocalSearchParams &ls)
{
    auto refined = local_refine(ga.best_tilts, problem, ls);
    OptimizerReport rep = ga;
    merge_refinement(rep, refined);
    rep.scheme = Scheme::hybrid_ga;
    rep.evaluations = ga.evaluations + refined.evaluations;
    rep.wall_seconds = ga.wall_seconds + refined.wall_seconds;
    return rep;
}

OptimizerReport hybrid_ga(const UavProblem &problem, const GaParams &ga, const LocalSearchParams &ls)
{
    return refine_ga_result(ga_optimize(problem, ga), problem, ls);
}

OptimizerReport pso_optimize(const UavProblem &problem, const PsoParams &params,
                             const std::optional<LocalSearchParams> &ls)
{
    check_problem(problem);
    params.validate();
    const auto t0 = Clock::now();
    const std::size_t n = problem.sites();
    const std::size_t m = params.swarm;
    const TiltBounds &bounds = problem.bounds;
    CachedObjective eval(problem);

    const TiltVector nominal = nominal_tilts(problem);
    std::vector<TiltVector> x(m, nominal);
    std::vector<std::vector<double>> v(m, std::vector<double>(n, 0.0));
    for (std::size_t i = 1; i < m; ++i)
    {
        Stream rng(params.seed, 0, i);
        for (std::size_t d = 0; d < n; ++d)
            x[i][d] = params.init_spread
                          ? bounds.clamp(nominal[d] + rng.uniform(-*params.init_spread, *params.init_spread))
                          : rng.uniform(bounds.lo, bounds.hi);
    }
    const auto snapped = [&](const TiltVector &t)
    {
        TiltVector s = t;
        for (auto &a : s)
            a = bounds.snap(a);
        return s;
    };

    std::vector<TiltVector> pbest(m);
    for (std::size_t i = 0; i < m; ++i)
        pbest[i] = snapped(x[i]);
    std::vector<double> pfit = eval.batch(pbest);
    std::size_t gi = argmax_first(pfit);
    TiltVector gbest = pbest[gi];
    double gfit = pfit[gi];

    OptimizerReport rep;
    rep.scheme = Scheme::pso;
    rep.seed = params.seed;
    rep.objective_trace.push_back(gfit);

    // best over all restarts; gbest is the current swarm's best
    TiltVector best = gbest;
    double best_fit = gfit;
    std::size_t stalled = 0;
    for (std::size_t it = 1; it <= params.iterations; ++it)
    {
        if (params.restart_after > 0 && stalled >= params.restart_after)
        {
            stalled = 0;
            for (std::size_t i = 0; i < m; ++i)
            {
                Stream rng(params.seed, it, m + i);
                for (std::size_t d = 0; d < n; ++d)
                    x[i][d] = rng.uniform(bounds.lo, bounds.hi);
                std::fill(v[i].begin(), v[i].end(), 0.0);
                pbest[i] = snapped(x[i]);
            }
            pfit = eval.batch(pbest);
            gi = argmax_first(pfit);
            gbest = pbest[gi];
            gfit = pfit[gi];
            if (gfit > best_fit)
            {
                best_fit = gfit;
                best = gbest;
            }
            rep.objective_trace.push_back(best_fit);
            continue;
        }
        const double before = gfit;
        std::vector<TiltVector> probe(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            Stream rng(params.seed, it, i);
            for (std::size_t d = 0; d < n; ++d)
            {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                double vel = params.inertia * v[i][d] + params.c1 * r1 * (pbest[i][d] - x[i][d]) +
                             params.c2 * r2 * (gbest[d] - x[i][d]);
                vel = std::clamp(vel, -params.v_max, params.v_max);
                v[i][d] = vel;
                x[i][d] = bounds.clamp(x[i][d] + vel);
            }
            probe[i] = snapped(x[i]);
        }
        const auto f = eval.batch(probe);
        for (std::size_t i = 0; i < m; ++i)
            if (f[i] > pfit[i])
            {
                pfit[i] = f[i];
                pbest[i] = probe[i];
            }
        for (std::size_t i = 0; i < m; ++i)
            if (pfit[i] > gfit)
            {
                gfit = pfit[i];
                gbest = pbest[i];
            }
        stalled = gfit > before ? 0 : stalled + 1;
        if (gfit > best_fit)
        {
            best_fit = gfit;
            best = gbest;
        }
        rep.objective_trace.push_back(best_fit);
    }

    rep.best_tilts = best;
    rep.best_objective_db = best_fit;
    if (ls)
        merge_refinement(rep, run_refine(best, problem, *ls, eval));
    rep.evaluations = eval.evaluations();
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

OptimizerReport brute_force_oracle(const UavProblem &problem, double quantum)
{
    check_problem(problem);
    if (!(quantum > 0.0))
        throw InvalidParameter("brute_force_oracle: quantum must be positive");
    const auto t0 = Clock::now();
    const TiltBounds lat{problem.bounds.lo, problem.bounds.hi, quantum};
    const auto values = lat.lattice();
    const std::size_t k = values.size();
    const std::size_t n = problem.sites();

    std::uint64_t combos = 1;
    for (std::size_t d = 0; d < n; ++d)
    {
        if (combos > oracle_max_combinations / k)
            throw InvalidParameter("brute_force_oracle: more than " + std::to_string(oracle_max_combinations) +
                                   " combinations (" + std::to_string(k) + " angles, " + std::to_string(n) +
                                   " sites)");
        combos *= k;
    }

    OptimizerReport rep;
    rep.scheme = Scheme::oracle;
    rep.best_objective_db = -std::numeric_limits<double>::infinity();
    constexpr std::uint64_t batch = 4096;
    std::vector<double> fit;
    for (std::uint64_t start = 0; start < combos; start += batch)
    {
        const std::uint64_t end = std::min(combos, start + batch);
        std::vector<TiltVector> cands(end - start, TiltVector::uniform(n, values[0]));
        for (std::uint64_t c = start; c < end; ++c)
        {
            std::uint64_t code = c;
            for (std::size_t d = n; d-- > 0;)
            {
                cands[c - start][d] = values[code % k];
                code /= k;
            }
        }
        fit.assign(cands.size(), 0.0);
        parallel_for(cands.size(), problem.threads, [&](std::size_t i)
                     { fit[i] = problem.links->min_sir_us_db(cands[i], 1); });
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (fit[i] > rep.best_objective_db)
            {
                rep.best_objective_db = fit[i];
                rep.best_tilts = cands[i];
            }
        rep.objective_trace.push_back(rep.best_objective_db);
    }
    rep.evaluations = combos;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

} // namespace uavtilt
