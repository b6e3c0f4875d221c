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

#ifndef UAVTILT_OPTIMIZE_HPP
#define UAVTILT_OPTIMIZE_HPP

#include "uavtilt/geometry.hpp"
#include "uavtilt/network.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uavtilt
{

enum class Scheme
{
    dt_only,
    random,
    single,
    ga,
    hybrid_ga,
    pso,
    oracle
};

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

// Feasible uptilt range. With quantum > 0 the search is restricted to the
// lattice {lo, lo + q, lo + 2q, ...} plus hi itself.
struct TiltBounds
{
    double lo = 5.0;
    double hi = 89.0;
    double quantum = 0.0;

    bool contains(double angle) const { return angle >= lo && angle <= hi; }
    bool contains(const TiltVector &t) const;
    double clamp(double angle) const;
    // Nearest lattice value (lower one on exact ties); plain clamp when continuous.
    double snap(double angle) const;
    std::vector<double> lattice() const;
    void validate() const;
};

// Max-min UAV problem: precomputed links plus the data the heuristics need.
struct UavProblem
{
    std::shared_ptr<const LinkTable> links;
    SiteLayout layout;
    ReceiverGrid grid;
    TiltBounds bounds;
    double uav_height = 200.0;
    unsigned threads = 1;

    std::size_t sites() const { return layout.size(); }
};

struct GaParams
{
    std::size_t population = 200;
    std::size_t generations = 100;
    double mutation_prob = 0.1;
    std::size_t elite_count = 2;
    std::uint64_t seed = 1;

    void validate() const;
};

struct LocalSearchParams
{
    double step_init = 2.0;
    double step_min = 0.1;
    std::size_t max_iters = 50; // full coordinate passes

    void validate() const;
};

struct PsoParams
{
    std::size_t swarm = 200;
    std::size_t iterations = 100;
    double inertia = 0.72;
    double c1 = 1.45;
    double c2 = 1.45;
    double v_max = 8.0;        // degrees per iteration
    // Particle 0 starts at the nominal tilt. The others start at nominal +- U(init_spread)
    // (clamped) when set, otherwise uniformly over the bounds.
    std::optional<double> init_spread;
    // After this many iterations without improving the swarm's global best, the whole
    // swarm is redrawn uniformly over the bounds with zero velocity and fresh personal
    // and global bests; the best solution over all restarts is kept. 0 disables restarts.
    std::size_t restart_after = 5;
    std::uint64_t seed = 1;

    void validate() const;
};

struct OptimizerReport
{
    Scheme scheme = Scheme::random;
    TiltVector best_tilts;
    double best_objective_db = 0.0;
    std::vector<double> objective_trace; // best-so-far per generation / iteration / refinement pass
    std::vector<double> step_trace;      // local-search step size of each refinement pass
    std::size_t evaluations = 0;         // distinct tilt vectors evaluated
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;           // informational, never exported
};

// Full pipeline for one tilt vector: min over grid points of the
// uncoordinated-slot SIR in dB. Throws InvalidParameter for out-of-bounds tilts.
double objective(const TiltVector &tilts, const UavProblem &problem);

// Per-site tilt that points the uptilted boresight at the cell centre at UAV altitude.
TiltVector nominal_tilts(const UavProblem &problem);
TiltVector nominal_tilts(const SiteLayout &layout, double uav_height, double ut_height, const TiltBounds &bounds);

SirField baseline_dt_only(const UavProblem &problem);
OptimizerReport baseline_random(const UavProblem &problem, std::uint64_t seed);
OptimizerReport baseline_single(const UavProblem &problem, double grid_step = 1.0);
OptimizerReport ga_optimize(const UavProblem &problem, const GaParams &params);
OptimizerReport local_refine(const TiltVector &start, const UavProblem &problem, const LocalSearchParams &params);
OptimizerReport hybrid_ga(const UavProblem &problem, const GaParams &ga, const LocalSearchParams &ls);

// Hybrid result from an existing GA report; hybrid_ga is ga_optimize followed by this.
OptimizerReport refine_ga_result(const OptimizerReport &ga, const UavProblem &problem, const LocalSearchParams &ls);

// ls = nullopt skips the final refinement.
OptimizerReport pso_optimize(const UavProblem &problem, const PsoParams &params,
                             const std::optional<LocalSearchParams> &ls = LocalSearchParams{});

inline constexpr std::uint64_t oracle_max_combinations = 10'000'000;

// Exhaustive search over the quantized tilt lattice. Ties resolve to the
// lexicographically smallest vector.
OptimizerReport brute_force_oracle(const UavProblem &problem, double quantum);

// Deterministic stream seed for (seed, step, index).
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t step, std::uint64_t index);

} // namespace uavtilt

#endif
