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


// Command-line front end: one subcommand per experiment pipeline.

#include "uavtilt/errors.hpp"
#include "uavtilt/runner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace uavtilt;

namespace
{

constexpr int exit_config = 1;
constexpr int exit_runtime = 2;

struct CommonArgs
{
    std::string config;
    std::string out = "out";
    unsigned threads = 0;
    std::optional<std::uint64_t> seed;
    std::optional<double> isd;
    std::optional<double> uav_height;
};

void add_common(CLI::App *cmd, CommonArgs &args)
{
    cmd->add_option("--config", args.config, "JSON scenario file (defaults when omitted)");
    cmd->add_option("--out", args.out, "output directory")->capture_default_str();
    cmd->add_option("--threads", args.threads, "worker threads, 0 = all cores")->capture_default_str();
    cmd->add_option("--seed", args.seed, "override the scenario seed");
    cmd->add_option("--isd", args.isd, "override the inter-site distance [m]");
    cmd->add_option("--uav-height", args.uav_height, "override the UAV altitude [m]");
}

Scenario load_scenario(const CommonArgs &args)
{
    return args.config.empty() ? Scenario{} : load_config(args.config);
}

RunOptions make_options(const CommonArgs &args, std::optional<int> nt)
{
    RunOptions o;
    o.threads = args.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : args.threads;
    o.overrides.seed = args.seed;
    o.overrides.isd = args.isd;
    o.overrides.uav_height = args.uav_height;
    o.overrides.n_elements = nt;
    const auto t0 = std::chrono::steady_clock::now();
    o.log = [t0](const std::string &msg)
    {
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "[uavtilt %8.1fs] %s\n", t, msg.c_str());
    };
    return o;
}

Scheme scheme_arg(const std::string &name)
{
    const auto s = parse_scheme(name);
    if (!s)
        throw ConfigError("scheme", "unknown scheme '" + name + "'");
    return *s;
}

void emit(const RunArtifact &artifact, const std::string &out)
{
    for (const auto &p : export_artifact(artifact, out))
        std::cout << p.string() << '\n';
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"uavtilt: uptilt optimization for booster sectors serving aerial users"};
    app.set_version_flag("--version", std::string(code_version()));
    app.require_subcommand(1);

    CommonArgs run_args, cmp_args, nt_args, gue_args, oracle_args;
    std::string run_scheme_name;
    std::optional<int> run_nt, cmp_nt, gue_nt, oracle_nt;
    std::vector<std::string> cmp_schemes;
    std::vector<int> nt_list{4, 8, 16};
    std::vector<double> beta_list{0.25, 0.5, 0.75};
    std::vector<double> phi_list{0.0, -6.0, -12.0};
    OracleOptions oracle_opts;

    auto *run = app.add_subcommand("run", "run one scheme");
    add_common(run, run_args);
    run->add_option("--scheme", run_scheme_name, "dt_only, random, single, ga, hybrid_ga, pso")->required();
    run->add_option("--nt", run_nt, "override the number of vertical elements")->check(CLI::PositiveNumber);

    auto *cmp = app.add_subcommand("compare", "run a set of schemes on one scenario");
    add_common(cmp, cmp_args);
    cmp->add_option("--scheme", cmp_schemes, "schemes to compare (default: all but oracle)");
    cmp->add_option("--nt", cmp_nt, "override the number of vertical elements")->check(CLI::PositiveNumber);

    auto *nt = app.add_subcommand("sweep-nt", "hybrid GA for each number of vertical elements");
    add_common(nt, nt_args);
    nt->add_option("--nt", nt_list, "element counts")->capture_default_str()->check(CLI::PositiveNumber);

    auto *gue = app.add_subcommand("sweep-gue", "ground-user SIR and SE for duty cycles and downtilts");
    add_common(gue, gue_args);
    gue->add_option("--nt", gue_nt, "override the number of vertical elements")->check(CLI::PositiveNumber);
    gue->add_option("--beta", beta_list, "duty cycles")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    gue->add_option("--phi-dt", phi_list, "downtilt angles [deg]")
        ->capture_default_str()
        ->check(CLI::Range(-90.0, 90.0));

    auto *orc = app.add_subcommand("oracle", "exhaustive optimum on a truncated toy instance");
    add_common(orc, oracle_args);
    orc->add_option("--nt", oracle_nt, "override the number of vertical elements")->check(CLI::PositiveNumber);
    orc->add_option("--sites", oracle_opts.sites, "sites kept in the toy")->capture_default_str()->check(
        CLI::Range(1, 19));
    orc->add_option("--quantum", oracle_opts.quantum, "tilt lattice step [deg]")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    orc->add_option("--grid-spacing", oracle_opts.grid_spacing, "toy grid spacing [m]")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        if (run->parsed())
        {
            const Scheme scheme = scheme_arg(run_scheme_name);
            if (scheme == Scheme::oracle)
                throw ConfigError("scheme", "use the oracle subcommand for the exhaustive search");
            emit(run_scheme(load_scenario(run_args), scheme, make_options(run_args, run_nt)), run_args.out);
        }
        else if (cmp->parsed())
        {
            std::vector<Scheme> schemes;
            for (const auto &name : cmp_schemes)
            {
                schemes.push_back(scheme_arg(name));
                if (schemes.back() == Scheme::oracle)
                    throw ConfigError("scheme", "use the oracle subcommand for the exhaustive search");
            }
            if (schemes.empty())
                schemes = default_compare_schemes;
            emit(run_compare(load_scenario(cmp_args), schemes, make_options(cmp_args, cmp_nt)), cmp_args.out);
        }
        else if (nt->parsed())
            emit(run_nt_sweep(load_scenario(nt_args), nt_list, make_options(nt_args, std::nullopt)), nt_args.out);
        else if (gue->parsed())
            emit(run_gue_sweep(load_scenario(gue_args), beta_list, phi_list, make_options(gue_args, gue_nt)),
                 gue_args.out);
        else if (orc->parsed())
            emit(run_oracle(load_scenario(oracle_args), oracle_opts, make_options(oracle_args, oracle_nt)),
                 oracle_args.out);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return 0;
}
