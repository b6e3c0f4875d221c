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
#include "uavtilt/runner.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

namespace uavtilt
{

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace
{
using nlohmann::json;

void write_file(const std::filesystem::path &path, const std::string &body, std::vector<std::filesystem::path> &written)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.close();
    if (!out)
        throw IoError("write failed: " + path.string());
    written.push_back(path);
}

json report_json(const OptimizerReport &r)
{
    return {{"scheme", scheme_name(r.scheme)},
            {"seed", r.seed},
            {"best_objective_db", r.best_objective_db},
            {"best_tilts", r.best_tilts.angles()},
            {"objective_trace", r.objective_trace},
            {"step_trace", r.step_trace},
            {"evaluations", r.evaluations}};
}

std::string scenario_document(const RunArtifact &a)
{
    json runs = json::array();
    for (const auto &run : a.runs)
    {
        json j{{"tag", run.tag}, {"scheme", scheme_name(run.scheme)}, {"cs_applicable", run.field.cs_applicable()}};
        if (run.report)
            j["report"] = report_json(*run.report);
        runs.push_back(std::move(j));
    }
    json doc{{"scenario", scenario_to_json(a.scenario)},
             {"provenance",
              {{"seed", a.provenance.seed},
               {"code_version", a.provenance.code_version},
               {"timestamp", a.provenance.timestamp}}},
             {"runs", std::move(runs)}};
    return doc.dump(2) + "\n";
}

std::string tilt_table(const SchemeRun &run, const SiteLayout &layout)
{
    if (run.tilts.size() != layout.size())
        throw InvalidParameter("tilt table for " + run.tag + " does not match the site layout");
    std::string s = "site_index,x,y,uptilt_deg\n";
    for (std::size_t b = 0; b < layout.size(); ++b)
        s += std::to_string(b) + "," + format_number(layout.sites[b].x) + "," + format_number(layout.sites[b].y) +
             "," + format_number(run.tilts[b]) + "\n";
    return s;
}

std::string sir_table(const SchemeRun &run, const ReceiverGrid &grid)
{
    const auto &f = run.field;
    if (f.sir_us_db.size() != grid.size() || f.serving.size() != grid.size() ||
        (f.cs_applicable() && f.sir_cs_db.size() != grid.size()))
        throw InvalidParameter("SIR table for " + run.tag + " does not match the receiver grid");
    std::string s = "point_x,point_y,serving,sir_us_db,sir_cs_db\n";
    for (std::size_t u = 0; u < grid.size(); ++u)
        s += format_number(grid.points[u].x) + "," + format_number(grid.points[u].y) + "," +
             std::to_string(f.serving[u]) + "," + format_number(f.sir_us_db[u]) + "," +
             (f.cs_applicable() ? format_number(f.sir_cs_db[u]) : std::string("NA")) + "\n";
    return s;
}

std::string rate_table(const std::vector<RateRow> &rows)
{
    std::string s = "scheme,slot,min_se,median_se,sum_se\n";
    for (const auto &r : rows)
        s += r.scheme + "," + r.slot + "," + format_number(r.metrics.min_se) + "," +
             format_number(r.metrics.median_se) + "," + format_number(r.metrics.sum_se) + "\n";
    return s;
}

std::string ecdf_table(const EcdfTable &t)
{
    std::string s = "value_db,prob\n";
    for (const auto &p : t.points)
        s += format_number(p.value) + "," + format_number(p.prob) + "\n";
    return s;
}

} // namespace

std::vector<std::filesystem::path> export_artifact(const RunArtifact &artifact, const std::filesystem::path &out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    write_file(out_dir / "scenario.json", scenario_document(artifact), written);
    for (const auto &run : artifact.runs)
    {
        if (run.tilts.size() > 0)
            write_file(out_dir / ("tilts_" + run.tag + ".csv"), tilt_table(run, artifact.layout), written);
        write_file(out_dir / ("sir_" + run.tag + ".csv"), sir_table(run, artifact.grid), written);
    }
    if (!artifact.rates.empty())
        write_file(out_dir / "rates.csv", rate_table(artifact.rates), written);
    for (const auto &t : artifact.ecdfs)
        write_file(out_dir / ("ecdf_" + t.tag + ".csv"), ecdf_table(t), written);
    return written;
}

} // namespace uavtilt
