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

#ifndef UAVTILT_RUNNER_HPP
#define UAVTILT_RUNNER_HPP

#include "uavtilt/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace uavtilt
{

std::string_view code_version();

struct Provenance
{
    std::uint64_t seed = 0;
    std::string code_version;
    std::string timestamp; // UTC, ISO 8601
};

// One scheme executed on one problem instance.
struct SchemeRun
{
    std::string tag; // file-name stem, e.g. "pso" or "hybrid_ga_nt16"
    Scheme scheme = Scheme::dt_only;
    std::optional<OptimizerReport> report; // absent for dt_only
    TiltVector tilts;                      // empty for dt_only
    SirField field;
};

struct RateRow
{
    std::string scheme;
    std::string slot; // "us", "cs" or "dt"
    RateMetrics metrics;
};

struct EcdfTable
{
    std::string tag;
    std::vector<EcdfPoint> points;
};

struct RunArtifact
{
    Scenario scenario;
    Provenance provenance;
    SiteLayout layout;  // sites referenced by tilt tables
    ReceiverGrid grid;  // points referenced by SIR tables
    std::vector<SchemeRun> runs;
    std::vector<RateRow> rates;
    std::vector<EcdfTable> ecdfs;
};

struct RunOptions
{
    unsigned threads = 1;
    ScenarioOverrides overrides;
    // Fixed provenance timestamp; otherwise SOURCE_DATE_EPOCH, otherwise the clock.
    std::optional<std::string> timestamp;
    std::function<void(const std::string &)> log; // progress sink, may be empty
};

inline const std::vector<Scheme> default_compare_schemes{Scheme::dt_only,   Scheme::random, Scheme::single,
                                                         Scheme::ga,        Scheme::hybrid_ga, Scheme::pso};

RunArtifact run_scheme(const Scenario &scenario, Scheme scheme, const RunOptions &options = {});

// Runs the schemes on one shared problem instance. A hybrid_ga entry reuses
// the result of a preceding ga entry instead of rerunning the GA.
RunArtifact run_compare(const Scenario &scenario, const std::vector<Scheme> &schemes,
                        const RunOptions &options = {});

RunArtifact run_nt_sweep(const Scenario &scenario, const std::vector<int> &nt_list, const RunOptions &options = {});

// Ground users on the scenario's gue_* cluster with nominal uptilts.
// SE ECDFs per beta at the scenario's phi_dt, SIR ECDFs per phi_dt.
RunArtifact run_gue_sweep(const Scenario &scenario, const std::vector<double> &beta_list,
                          const std::vector<double> &phi_dt_list, const RunOptions &options = {});

struct OracleOptions
{
    std::size_t sites = 3;
    double quantum = 5.0;
    double grid_spacing = 20.0;
};

// Exhaustive optimum on a truncated toy instance next to lattice-restricted
// hybrid GA and PSO on the same instance.
RunArtifact run_oracle(const Scenario &scenario, const OracleOptions &oracle = {}, const RunOptions &options = {});

// Writes scenario.json, tilts_<tag>.csv, sir_<tag>.csv, rates.csv and ecdf_<tag>.csv.
// Returns the written paths in write order.
std::vector<std::filesystem::path> export_artifact(const RunArtifact &artifact, const std::filesystem::path &out_dir);

// Value formatting shared by every exported table.
std::string format_number(double v);

} // namespace uavtilt

#endif
