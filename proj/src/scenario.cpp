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

#include "uavtilt/scenario.hpp"
#include "uavtilt/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>
#include <type_traits>

namespace uavtilt
{

namespace
{
using nlohmann::json;

// Reads typed fields from one JSON object and rejects keys it was never asked about.
class ObjectReader
{
public:
    ObjectReader(const json &obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix))
    {
        if (!obj_.is_object())
            throw ConfigError(prefix_, "expected a JSON object");
    }

    template <typename T>
    void read(const std::string &key, T &out)
    {
        known_.insert(key);
        const auto it = obj_.find(key);
        if (it == obj_.end())
            return;
        const std::string path = path_of(key);
        if constexpr (std::is_same_v<T, bool>)
        {
            if (!it->is_boolean())
                throw ConfigError(path, "expected a boolean");
            out = it->template get<bool>();
        }
        else if constexpr (std::is_floating_point_v<T>)
        {
            if (!it->is_number())
                throw ConfigError(path, "expected a number");
            out = it->template get<double>();
            if (!std::isfinite(out))
                throw ConfigError(path, "expected a finite number");
        }
        else if constexpr (std::is_signed_v<T>)
        {
            if (!it->is_number_integer())
                throw ConfigError(path, "expected an integer");
            out = it->template get<T>();
        }
        else
        {
            if (!it->is_number_integer() || (!it->is_number_unsigned() && it->template get<std::int64_t>() < 0))
                throw ConfigError(path, "expected a non-negative integer");
            out = it->template get<T>();
        }
    }

    const json *child(const std::string &key)
    {
        known_.insert(key);
        const auto it = obj_.find(key);
        return it == obj_.end() ? nullptr : &*it;
    }

    std::string path_of(const std::string &key) const { return prefix_.empty() ? key : prefix_ + "." + key; }

    void finish() const
    {
        for (const auto &item : obj_.items())
            if (!known_.contains(item.key()))
                throw ConfigError(path_of(item.key()), "unknown key");
    }

private:
    const json &obj_;
    std::string prefix_;
    std::set<std::string> known_;
};

void require(bool ok, const std::string &key, const std::string &what)
{
    if (!ok)
        throw ConfigError(key, what);
}
} // namespace

void Scenario::validate() const
{
    require(isd > 0.0, "isd", "must be positive");
    require(uav_height > 0.0, "uav_height", "must be positive");
    require(grid_spacing > 0.0, "grid_spacing", "must be positive");
    require(grid_spacing < isd, "grid_spacing", "must be smaller than isd");
    require(gue_isd > 0.0, "gue_isd", "must be positive");
    require(gue_height > 0.0, "gue_height", "must be positive");
    require(gue_grid_spacing > 0.0, "gue_grid_spacing", "must be positive");
    require(gue_grid_spacing < gue_isd, "gue_grid_spacing", "must be smaller than gue_isd");
    require(phi_dt >= -90.0 && phi_dt <= 90.0, "phi_dt", "must lie in [-90, 90]");
    require(n_elements >= 1, "n_elements", "must be at least 1");
    require(bs_height > 0.0, "bs_height", "must be positive");
    require(ut_height_offset >= 0.0, "ut_height_offset", "must be non-negative");
    require(radio.carrier_freq_hz > 0.0, "radio.carrier_freq_hz", "must be positive");
    require(radio.alpha0 >= 2.0, "radio.alpha0", "must be at least 2");
    require(radio.eps_r > 0.0, "radio.eps_r", "must be positive");
    require(antenna.theta_3db_deg > 0.0, "antenna.theta_3db_deg", "must be positive");
    require(antenna.sla_v_db >= 0.0, "antenna.sla_v_db", "must be non-negative");
    require(tilt_min >= -90.0 && tilt_min < tilt_max && tilt_max <= 90.0, "tilt_bounds",
            "must satisfy -90 <= min < max <= 90");
    require(beta >= 0.0 && beta <= 1.0, "beta", "must lie in [0, 1]");
    require(single_step > 0.0, "single_step", "must be positive");
    require(ga.population >= 2, "ga.population", "must be at least 2");
    require(ga.mutation_prob >= 0.0 && ga.mutation_prob <= 1.0, "ga.mutation_prob", "must lie in [0, 1]");
    require(ga.elite_count < ga.population, "ga.elite_count", "must be smaller than ga.population");
    require(pso.swarm >= 2, "pso.swarm", "must be at least 2");
    require(pso.inertia > 0.0 && pso.inertia < 1.0, "pso.inertia", "must lie in (0, 1)");
    require(pso.c1 >= 0.0, "pso.c1", "must be non-negative");
    require(pso.c2 >= 0.0, "pso.c2", "must be non-negative");
    require(pso.v_max > 0.0, "pso.v_max", "must be positive");
    require(!pso.init_spread || *pso.init_spread >= 0.0, "pso.init_spread", "must be non-negative");
    require(local_search.step_min > 0.0, "local_search.step_min", "must be positive");
    require(local_search.step_min <= local_search.step_init, "local_search.step_init",
            "must be at least local_search.step_min");
}

LinkModel Scenario::link_model() const
{
    LinkModel m;
    m.radio = radio;
    m.pattern = antenna;
    m.array.n_elements = n_elements;
    m.dt_height = bs_height;
    m.ut_height = bs_height + ut_height_offset;
    return m;
}

GaParams Scenario::ga_params() const
{
    GaParams p = ga;
    p.seed = seed;
    return p;
}

PsoParams Scenario::pso_params() const
{
    PsoParams p = pso;
    p.seed = seed;
    return p;
}

Scenario scenario_from_json(const nlohmann::json &doc)
{
    Scenario s;
    ObjectReader top(doc, "");
    top.read("isd", s.isd);
    top.read("uav_height", s.uav_height);
    top.read("grid_spacing", s.grid_spacing);
    top.read("gue_isd", s.gue_isd);
    top.read("gue_height", s.gue_height);
    top.read("gue_grid_spacing", s.gue_grid_spacing);
    top.read("gue_reflection", s.gue_reflection);
    top.read("phi_dt", s.phi_dt);
    top.read("n_elements", s.n_elements);
    top.read("bs_height", s.bs_height);
    top.read("ut_height_offset", s.ut_height_offset);
    top.read("beta", s.beta);
    top.read("seed", s.seed);
    top.read("single_step", s.single_step);

    if (const auto *bounds = top.child("tilt_bounds"))
    {
        if (!bounds->is_array() || bounds->size() != 2 || !(*bounds)[0].is_number() || !(*bounds)[1].is_number())
            throw ConfigError("tilt_bounds", "expected [min, max]");
        s.tilt_min = (*bounds)[0].get<double>();
        s.tilt_max = (*bounds)[1].get<double>();
    }
    if (const auto *radio = top.child("radio"))
    {
        ObjectReader r(*radio, "radio");
        r.read("carrier_freq_hz", s.radio.carrier_freq_hz);
        r.read("tx_power_dbm", s.radio.tx_power_dbm);
        r.read("alpha0", s.radio.alpha0);
        r.read("eps_r", s.radio.eps_r);
        r.finish();
    }
    if (const auto *antenna = top.child("antenna"))
    {
        ObjectReader r(*antenna, "antenna");
        r.read("ge_max_dbi", s.antenna.ge_max_dbi);
        r.read("theta_3db_deg", s.antenna.theta_3db_deg);
        r.read("sla_v_db", s.antenna.sla_v_db);
        r.finish();
    }
    if (const auto *ga = top.child("ga"))
    {
        ObjectReader r(*ga, "ga");
        r.read("population", s.ga.population);
        r.read("generations", s.ga.generations);
        r.read("mutation_prob", s.ga.mutation_prob);
        r.read("elite_count", s.ga.elite_count);
        r.finish();
    }
    if (const auto *pso = top.child("pso"))
    {
        ObjectReader r(*pso, "pso");
        r.read("swarm", s.pso.swarm);
        r.read("iterations", s.pso.iterations);
        r.read("inertia", s.pso.inertia);
        r.read("c1", s.pso.c1);
        r.read("c2", s.pso.c2);
        r.read("v_max", s.pso.v_max);
        r.read("restart_after", s.pso.restart_after);
        if (const auto *spread = r.child("init_spread"); spread && !spread->is_null())
        {
            double v = 0.0;
            const json holder{{"init_spread", *spread}};
            ObjectReader wrapper(holder, "pso");
            wrapper.read("init_spread", v);
            s.pso.init_spread = v;
        }
        r.finish();
    }
    if (const auto *ls = top.child("local_search"))
    {
        ObjectReader r(*ls, "local_search");
        r.read("step_init", s.local_search.step_init);
        r.read("step_min", s.local_search.step_min);
        r.read("max_iters", s.local_search.max_iters);
        r.finish();
    }
    top.finish();
    s.validate();
    return s;
}

nlohmann::json scenario_to_json(const Scenario &s)
{
    json j;
    j["isd"] = s.isd;
    j["uav_height"] = s.uav_height;
    j["grid_spacing"] = s.grid_spacing;
    j["gue_isd"] = s.gue_isd;
    j["gue_height"] = s.gue_height;
    j["gue_grid_spacing"] = s.gue_grid_spacing;
    j["gue_reflection"] = s.gue_reflection;
    j["phi_dt"] = s.phi_dt;
    j["n_elements"] = s.n_elements;
    j["bs_height"] = s.bs_height;
    j["ut_height_offset"] = s.ut_height_offset;
    j["beta"] = s.beta;
    j["seed"] = s.seed;
    j["single_step"] = s.single_step;
    j["tilt_bounds"] = {s.tilt_min, s.tilt_max};
    j["radio"] = {{"carrier_freq_hz", s.radio.carrier_freq_hz},
                  {"tx_power_dbm", s.radio.tx_power_dbm},
                  {"alpha0", s.radio.alpha0},
                  {"eps_r", s.radio.eps_r}};
    j["antenna"] = {{"ge_max_dbi", s.antenna.ge_max_dbi},
                    {"theta_3db_deg", s.antenna.theta_3db_deg},
                    {"sla_v_db", s.antenna.sla_v_db}};
    j["ga"] = {{"population", s.ga.population},
               {"generations", s.ga.generations},
               {"mutation_prob", s.ga.mutation_prob},
               {"elite_count", s.ga.elite_count}};
    j["pso"] = {{"swarm", s.pso.swarm},   {"iterations", s.pso.iterations}, {"inertia", s.pso.inertia},
                {"c1", s.pso.c1},         {"c2", s.pso.c2},                 {"v_max", s.pso.v_max},
                {"init_spread", s.pso.init_spread ? json(*s.pso.init_spread) : json(nullptr)},
                {"restart_after", s.pso.restart_after}};
    j["local_search"] = {{"step_init", s.local_search.step_init},
                         {"step_min", s.local_search.step_min},
                         {"max_iters", s.local_search.max_iters}};
    return j;
}

Scenario load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot open config file " + path.string());
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("", path.string() + ": malformed JSON: " + e.what());
    }
    return scenario_from_json(doc);
}

UavProblem make_uav_problem(const Scenario &s, unsigned threads)
{
    s.validate();
    UavProblem p;
    p.layout = build_layout(s.isd);
    p.grid = build_receiver_grid(p.layout, s.grid_spacing, s.uav_height);
    p.links = std::make_shared<const LinkTable>(p.grid, p.layout, s.phi_dt, s.link_model(), threads);
    p.bounds = s.bounds();
    p.uav_height = s.uav_height;
    p.threads = threads;
    return p;
}

UavProblem make_toy_problem(const Scenario &s, std::size_t sites, double grid_spacing, unsigned threads)
{
    s.validate();
    UavProblem p;
    const auto full = build_layout(s.isd);
    p.grid = build_receiver_grid(full, grid_spacing, s.uav_height);
    p.layout = full.truncated(sites);
    p.links = std::make_shared<const LinkTable>(p.grid, p.layout, s.phi_dt, s.link_model(), threads);
    p.bounds = s.bounds();
    p.uav_height = s.uav_height;
    p.threads = threads;
    return p;
}

void apply_overrides(Scenario &s, const ScenarioOverrides &o)
{
    if (o.isd)
        s.isd = *o.isd;
    if (o.uav_height)
        s.uav_height = *o.uav_height;
    if (o.n_elements)
        s.n_elements = *o.n_elements;
    if (o.seed)
        s.seed = *o.seed;
    s.validate();
}

} // namespace uavtilt
