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

#ifndef UAVTILT_SCENARIO_HPP
#define UAVTILT_SCENARIO_HPP

#include "uavtilt/optimize.hpp"
#include "uavtilt/propagation.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>

namespace uavtilt
{

// One simulation scenario. Defaults reproduce the reference parameter set
// (ISD 500 m, UAVs at 200 m, 8-element arrays, 3.5 GHz, 46 dBm).
struct Scenario
{
    double isd = 500.0;
    double uav_height = 200.0;
    double grid_spacing = 10.0;

    double gue_isd = 100.0;
    double gue_height = 1.5;
    double gue_grid_spacing = 10.0;
    bool gue_reflection = true;

    double phi_dt = -6.0; // degrees, negative = below horizon
    int n_elements = 8;
    double bs_height = 30.0;        // downtilted sector
    double ut_height_offset = 1.0;  // uptilted sector sits this much higher

    RadioParams radio;
    ElementPattern antenna;
    double tilt_min = 5.0;
    double tilt_max = 89.0;

    double beta = 0.5; // fraction of slots with the downtilted sector active
    std::uint64_t seed = 1;
    double single_step = 1.0;

    GaParams ga;
    PsoParams pso;
    LocalSearchParams local_search;

    // Throws ConfigError naming the offending key.
    void validate() const;

    LinkModel link_model() const;
    TiltBounds bounds() const { return {tilt_min, tilt_max, 0.0}; }
    GaParams ga_params() const;
    PsoParams pso_params() const;
};

Scenario scenario_from_json(const nlohmann::json &doc);
nlohmann::json scenario_to_json(const Scenario &s);
Scenario load_config(const std::filesystem::path &path);

// Full 19-site UAV problem for the scenario.
UavProblem make_uav_problem(const Scenario &s, unsigned threads = 1);

// Reduced instance: the first `sites` sites of the cluster, same physics and
// wraparound, receiver grid of the full centre cell at `grid_spacing`.
UavProblem make_toy_problem(const Scenario &s, std::size_t sites, double grid_spacing, unsigned threads = 1);

struct ScenarioOverrides
{
    std::optional<double> isd;
    std::optional<double> uav_height;
    std::optional<int> n_elements;
    std::optional<std::uint64_t> seed;
};

void apply_overrides(Scenario &s, const ScenarioOverrides &o);

} // namespace uavtilt

#endif
