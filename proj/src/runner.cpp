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


#include "uavtilt/runner.hpp"
#include "uavtilt/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>

#ifndef UAVTILT_VERSION
#define UAVTILT_VERSION "0.0.0"
#endif

namespace uavtilt
{

std::string_view code_version() { return UAVTILT_VERSION; }

namespace
{

std::string utc_timestamp(std::time_t t)
{
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Provenance make_provenance(const Scenario &s, const RunOptions &options)
{
    Provenance p;
    p.seed = s.seed;
    p.code_version = std::string(code_version());
    if (options.timestamp)
        p.timestamp = *options.timestamp;
    else if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch)
    {
        char *end = nullptr;
        const long long v = std::strtoll(epoch, &end, 10);
        if (*end != '\0' || v < 0)
            throw InvalidParameter("SOURCE_DATE_EPOCH must be a non-negative integer");
        p.timestamp = utc_timestamp(static_cast<std::time_t>(v));
    }
    else
        p.timestamp = utc_timestamp(std::time(nullptr));
    return p;
}

void log(const RunOptions &options, const std::string &msg)
{
    if (options.log)
        options.log(msg);
}

std::string tag_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

Scenario effective_scenario(const Scenario &scenario, const RunOptions &options)
{
    Scenario s = scenario;
    apply_overrides(s, options.overrides);
    return s;
}

RunArtifact start_artifact(const Scenario &s, const RunOptions &options)
{
    RunArtifact a;
    a.scenario = s;
    a.provenance = make_provenance(s, options);
    return a;
}

std::vector<double> se_field(const std::vector<double> &sir_db)
{
    std::vector<double> se(sir_db.size());
    for (std::size_t i = 0; i < sir_db.size(); ++i)
        se[i] = spectral_efficiency(std::pow(10.0, sir_db[i] / 10.0));
    return se;
}

// Rates and SIR ECDFs for a finished run.
void add_tables(RunArtifact &a, const SchemeRun &run)
{
    a.rates.push_back({run.tag, "us", rate_metrics(se_field(run.field.sir_us_db))});
    a.ecdfs.push_back({run.tag + "_us", ecdf(run.field.sir_us_db)});
    if (run.field.cs_applicable())
    {
        a.rates.push_back({run.tag, "cs", rate_metrics(se_field(run.field.sir_cs_db))});
        a.ecdfs.push_back({run.tag + "_cs", ecdf(run.field.sir_cs_db)});
    }
}

SchemeRun finish_run(std::string tag, const OptimizerReport &report, const UavProblem &problem)
{
    SchemeRun run;
    run.tag = std::move(tag);
    run.scheme = report.scheme;
    run.report = report;
    run.tilts = report.best_tilts;
    run.field = problem.links->sir_field(run.tilts, problem.threads);
    return run;
}

void log_report(const RunOptions &options, const OptimizerReport &r)
{
    log(options, std::string(scheme_name(r.scheme)) + ": min US SIR " + format_number(r.best_objective_db) +
                     " dB after " + std::to_string(r.evaluations) + " evaluations");
}

// Executes `scheme`; `ga_cache` carries a finished GA report to a later hybrid_ga.
SchemeRun execute(Scheme scheme, const Scenario &s, const UavProblem &problem, const RunOptions &options,
                  std::optional<OptimizerReport> &ga_cache)
{
    const std::string tag(scheme_name(scheme));
    log(options, "running " + tag);
    OptimizerReport report;
    switch (scheme)
    {
    case Scheme::dt_only:
    {
        SchemeRun run;
        run.tag = tag;
        run.scheme = scheme;
        run.field = baseline_dt_only(problem);
        return run;
    }
    case Scheme::random:
        report = baseline_random(problem, s.seed);
        break;
    case Scheme::single:
        report = baseline_single(problem, s.single_step);
        break;
    case Scheme::ga:
        report = ga_optimize(problem, s.ga_params());
        ga_cache = report;
        break;
    case Scheme::hybrid_ga:
        report = ga_cache ? refine_ga_result(*ga_cache, problem, s.local_search)
                          : hybrid_ga(problem, s.ga_params(), s.local_search);
        break;
    case Scheme::pso:
        report = pso_optimize(problem, s.pso_params(), s.local_search);
        break;
    case Scheme::oracle:
        report = brute_force_oracle(problem, problem.bounds.quantum > 0.0 ? problem.bounds.quantum : 5.0);
        break;
    }
    log_report(options, report);
    return finish_run(tag, report, problem);
}

RunArtifact run_on_problem(const Scenario &s, const UavProblem &problem, const std::vector<Scheme> &schemes,
                           const RunOptions &options)
{
    RunArtifact a = start_artifact(s, options);
    a.layout = problem.layout;
    a.grid = problem.grid;
    std::optional<OptimizerReport> ga_cache;
    for (Scheme scheme : schemes)
    {
        a.runs.push_back(execute(scheme, s, problem, options, ga_cache));
        add_tables(a, a.runs.back());
    }
    return a;
}

} // namespace

RunArtifact run_scheme(const Scenario &scenario, Scheme scheme, const RunOptions &options)
{
    return run_compare(scenario, {scheme}, options);
}

RunArtifact run_compare(const Scenario &scenario, const std::vector<Scheme> &schemes, const RunOptions &options)
{
    const Scenario s = effective_scenario(scenario, options);
    for (std::size_t i = 0; i < schemes.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (schemes[i] == schemes[j])
                throw InvalidParameter("scheme " + std::string(scheme_name(schemes[i])) + " listed twice");
    if (schemes.empty())
        return start_artifact(s, options);
    log(options, "building link table: ISD " + format_number(s.isd) + " m, UAV height " +
                     format_number(s.uav_height) + " m");
    const UavProblem problem = make_uav_problem(s, options.threads);
    return run_on_problem(s, problem, schemes, options);
}

RunArtifact run_nt_sweep(const Scenario &scenario, const std::vector<int> &nt_list, const RunOptions &options)
{
    if (nt_list.empty())
        throw InvalidParameter("run_nt_sweep: empty N_t list");
    for (int n : nt_list)
        if (n < 1)
            throw InvalidParameter("run_nt_sweep: N_t must be at least 1");
    const Scenario base = effective_scenario(scenario, options);
    RunArtifact a = start_artifact(base, options);
    for (int n : nt_list)
    {
        Scenario s = base;
        s.n_elements = n;
        log(options, "N_t = " + std::to_string(n));
        const UavProblem problem = make_uav_problem(s, options.threads);
        if (a.grid.points.empty())
        {
            a.layout = problem.layout;
            a.grid = problem.grid;
        }
        const auto report = hybrid_ga(problem, s.ga_params(), s.local_search);
        log_report(options, report);
        a.runs.push_back(finish_run("hybrid_ga_nt" + std::to_string(n), report, problem));
        const SchemeRun &run = a.runs.back();
        a.rates.push_back({run.tag, "us", rate_metrics(se_field(run.field.sir_us_db))});
        a.rates.push_back({run.tag, "cs", rate_metrics(se_field(run.field.sir_cs_db))});
        a.ecdfs.push_back({"nt" + std::to_string(n) + "_us", ecdf(run.field.sir_us_db)});
        a.ecdfs.push_back({"nt" + std::to_string(n) + "_cs", ecdf(run.field.sir_cs_db)});
    }
    return a;
}

RunArtifact run_gue_sweep(const Scenario &scenario, const std::vector<double> &beta_list,
                          const std::vector<double> &phi_dt_list, const RunOptions &options)
{
    if (beta_list.empty() || phi_dt_list.empty())
        throw InvalidParameter("run_gue_sweep: beta and phi_dt lists must be non-empty");
    for (double b : beta_list)
        if (!(b >= 0.0 && b <= 1.0))
            throw InvalidParameter("run_gue_sweep: beta must lie in [0, 1]");
    for (double phi : phi_dt_list)
        if (!(phi >= -90.0 && phi <= 90.0))
            throw InvalidParameter("run_gue_sweep: phi_dt must lie in [-90, 90]");

    const Scenario s = effective_scenario(scenario, options);
    RunArtifact a = start_artifact(s, options);
    a.layout = build_layout(s.gue_isd);
    a.grid = build_receiver_grid(a.layout, s.gue_grid_spacing, s.gue_height);
    LinkModel model = s.link_model();
    model.ground_reflection = s.gue_reflection;
    const TiltVector tilts = nominal_tilts(a.layout, s.uav_height, model.ut_height, s.bounds());

    auto sir_at = [&](double phi)
    {
        log(options, "GUE SIR at phi_dt " + format_number(phi) + " deg");
        return LinkTable(a.grid, a.layout, phi, model, options.threads).gue_sir(tilts, true);
    };

    for (double phi : phi_dt_list)
    {
        const auto sir = sir_at(phi);
        std::vector<double> sir_db(sir.size());
        for (std::size_t i = 0; i < sir.size(); ++i)
            sir_db[i] = to_db(sir[i]);
        a.ecdfs.push_back({"gue_sir_dt" + tag_number(phi), ecdf(sir_db)});
    }

    const auto sir = sir_at(s.phi_dt);
    for (double beta : beta_list)
    {
        std::vector<double> se(sir.size());
        for (std::size_t i = 0; i < sir.size(); ++i)
            se[i] = gue_spectral_efficiency(sir[i], beta);
        const std::string tag = "gue_beta" + tag_number(beta);
        a.rates.push_back({tag, "dt", rate_metrics(se)});
        a.ecdfs.push_back({"gue_se_beta" + tag_number(beta), ecdf(se)});
    }
    return a;
}

RunArtifact run_oracle(const Scenario &scenario, const OracleOptions &oracle, const RunOptions &options)
{
    if (!(oracle.quantum > 0.0))
        throw InvalidParameter("run_oracle: quantum must be positive");
    const Scenario s = effective_scenario(scenario, options);
    log(options, "toy instance: " + std::to_string(oracle.sites) + " sites, " + format_number(oracle.quantum) +
                     " deg lattice");
    UavProblem problem = make_toy_problem(s, oracle.sites, oracle.grid_spacing, options.threads);
    problem.bounds.quantum = oracle.quantum;
    return run_on_problem(s, problem, {Scheme::oracle, Scheme::hybrid_ga, Scheme::pso}, options);
}

} // namespace uavtilt
