// SPDX-License-Identifier: Apache-2.0
//
// irsim - simulation and optimization toolkit for distributed-IRS assisted
// multi-user MISO downlinks
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

#include "irsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "irsim/analytic.hpp"
#include "irsim/assoc.hpp"
#include "irsim/units.hpp"

#include <nlohmann/json.hpp>

namespace irsim
{

std::string solver_name(SolverKind s)
{
    switch (s)
    {
        case SolverKind::exhaustive: return "exhaustive";
        case SolverKind::sr: return "sr";
        case SolverKind::nearest: return "nearest";
        case SolverKind::random: return "random";
        case SolverKind::none: return "none";
    }
    throw std::invalid_argument("solver_name: unknown solver.");
}

SolverKind solver_from_name(const std::string& name)
{
    if (name == "exhaustive") return SolverKind::exhaustive;
    if (name == "sr") return SolverKind::sr;
    if (name == "nearest") return SolverKind::nearest;
    if (name == "random") return SolverKind::random;
    if (name == "none") return SolverKind::none;
    throw std::invalid_argument("unknown solver '" + name +
                                "' (expected exhaustive|sr|nearest|random|none)");
}

std::string axis_name(SweepAxis a)
{
    switch (a)
    {
        case SweepAxis::N: return "N";
        case SweepAxis::L: return "L";
        case SweepAxis::sigma2: return "sigma2";
    }
    throw std::invalid_argument("axis_name: unknown axis.");
}

SweepAxis axis_from_name(const std::string& name)
{
    if (name == "N") return SweepAxis::N;
    if (name == "L") return SweepAxis::L;
    if (name == "sigma2") return SweepAxis::sigma2;
    throw std::invalid_argument("unknown sweep axis '" + name + "' (expected N|L|sigma2)");
}

ArrayGeometry ScenarioConfig::geometry() const
{
    ArrayGeometry g;
    g.lambda_c = wavelength_from_ghz(carrier_ghz);
    g.d_bs = bs_spacing_wavelengths * g.lambda_c;
    g.d_irs = irs_spacing_wavelengths * g.lambda_c;
    return g;
}

DeploymentScenario ScenarioConfig::build(Deployment deployment) const
{
    DeploymentScenario scn = build_arc_scenario(dims, geometry(), layout, budget);
    if (deployment == Deployment::centralized)
        scn = centralize_irs(scn, layout, budget);
    return scn;
}

void ExperimentSpec::validate() const
{
    scenario.dims.validate();
    if (axis_values.empty())
        throw std::invalid_argument("ExperimentSpec: sweep needs at least one axis value.");
    for (std::size_t i = 1; i < axis_values.size(); ++i)
        if (!(axis_values[i] > axis_values[i - 1]))
            throw std::invalid_argument("ExperimentSpec: axis values must be strictly increasing.");
    if (solvers.empty())
        throw std::invalid_argument("ExperimentSpec: solver set must be nonempty.");
    if (mc)
        mc->validate();
    for (double v : axis_values)
    {
        if (axis == SweepAxis::sigma2)
        {
            if (v <= 0.0)
                throw std::invalid_argument("ExperimentSpec: sigma2 values must be positive.");
        }
        else
        {
            if (v < 1.0 || v != std::floor(v))
                throw std::invalid_argument("ExperimentSpec: N and L values must be positive integers.");
            if (axis == SweepAxis::N && ((arma::uword)v % scenario.dims.N_z) != 0)
                throw std::invalid_argument("ExperimentSpec: N values must be multiples of N_z.");
        }
    }
}

namespace
{

ScenarioConfig point_config(const ExperimentSpec& spec, double value)
{
    ScenarioConfig cfg = spec.scenario;
    switch (spec.axis)
    {
        case SweepAxis::N:
            cfg.dims.N_x = (arma::uword)value / cfg.dims.N_z;
            break;
        case SweepAxis::L:
            cfg.dims.L = (arma::uword)value;
            break;
        case SweepAxis::sigma2:
            cfg.budget.noise_w = value;
            break;
    }
    return cfg;
}

PowerAllocation equal_split(double p_max, arma::uword K)
{
    PowerAllocation pow;
    pow.p_max = p_max;
    pow.p = arma::vec(K, arma::fill::value(p_max / (double)K));
    return pow; // c is rebound to each candidate's traces by the evaluators
}

// The association plus, for the searching solvers, their trace counters; the
// SINR fields are filled by the caller from the row's own evaluation.
SolveResult solve_cell(SolverKind solver, const DeploymentScenario& scn, const PowerAllocation& pow,
                       const ExperimentSpec& spec)
{
    SolveResult result;
    switch (solver)
    {
        case SolverKind::exhaustive:
            return exhaustive_search(scn, pow, scn.sigma2, spec.exhaustive_budget);
        case SolverKind::sr:
            return successive_refinement(scn, pow, scn.sigma2, nearest_rule(scn));
        case SolverKind::nearest:
            result.assoc = nearest_rule(scn);
            return result;
        case SolverKind::random:
            result.assoc = random_assignment(scn.dims.K, scn.dims.L, spec.seed);
            return result;
        case SolverKind::none:
            result.assoc = AssociationMatrix(scn.dims.K, 0); // no-IRS baseline
            return result;
    }
    throw std::invalid_argument("solve_cell: unknown solver.");
}

arma::vec to_db(const arma::vec& linear)
{
    arma::vec db(linear.n_elem);
    for (arma::uword i = 0; i < linear.n_elem; ++i)
        db[i] = linear_to_db(linear[i]);
    return db;
}

} // namespace

ResultTable run_experiment(const ExperimentSpec& spec)
{
    spec.validate();

    std::set<SolverKind> solver_set(spec.solvers.begin(), spec.solvers.end());

    ResultTable table;
    table.axis = spec.axis;
    table.K = spec.scenario.dims.K;

    for (double value : spec.axis_values)
    {
        const ScenarioConfig cfg = point_config(spec, value);
        const DeploymentScenario scn = cfg.build(spec.deployment);
        const PowerAllocation pow = equal_split(scn.p_max, scn.dims.K);

        for (SolverKind solver : solver_set)
        {
            ResultRow row;
            row.value = value;
            row.solver = solver;
            try
            {
                SolveResult solved = solve_cell(solver, scn, pow, spec);
                const AssociationMatrix& assoc = solved.assoc;
                std::vector<LosChannel> los = los_channels(scn);
                los.resize(assoc.n_irs());

                std::vector<arma::cx_mat> R;
                R.reserve(scn.dims.K);
                for (arma::uword k = 0; k < scn.dims.K; ++k)
                    R.push_back(correlation_matrix(scn, k, assoc.row_for_user(k), los));
                const AvgSinrReport report = avg_sinr(R, pow, scn.sigma2);

                row.gamma_db = to_db(report.gamma_bar);
                row.low_db = to_db(report.gamma_low);
                row.up_db = to_db(report.gamma_up);
                row.min_gamma_db = linear_to_db(report.min_sinr);

                if (spec.mc)
                {
                    McConfig mc_cfg = *spec.mc;
                    mc_cfg.keep_trials = spec.keep_mc_trials;
                    const McEstimate est = mc_average_sinr(scn, assoc, pow, mc_cfg);
                    row.mc_db = to_db(est.mean);
                    row.mc_ratio_db = to_db(est.ratio_of_means);
                    row.mc_stderr = est.stderr_of_mean;
                    if (spec.keep_mc_trials)
                        row.mc_trials = est.per_trial;
                }
                if (spec.keep_solutions)
                {
                    solved.min_sinr = report.min_sinr;
                    solved.per_user = report.gamma_bar;
                    if (solved.trajectory.empty())
                        solved.trajectory = {report.min_sinr};
                    row.solution = std::move(solved);
                }
            }
            catch (const BudgetError&)
            {
                row.status = "budget_exceeded";
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

namespace
{

std::string fmt(double v, const char* spec_str)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec_str, v);
    return buf;
}

std::string fmt_db(double v) { return fmt(v, "%.6g"); }

void append_group(std::string& line, const arma::vec& values, arma::uword K)
{
    for (arma::uword k = 0; k < K; ++k)
    {
        line += ',';
        if (values.n_elem == K)
            line += fmt_db(values[k]);
    }
}

const char* kCrlf = "\r\n";

} // namespace

std::string to_csv(const ResultTable& table)
{
    const arma::uword K = table.K;
    std::string out = "axis,value,solver,status,min_gamma_db";
    const char* groups[] = {"gamma_db_", "low_db_", "up_db_", "mc_gamma_db_", "mc_ratio_db_", "mc_stderr_"};
    for (const char* g : groups)
        for (arma::uword k = 1; k <= K; ++k)
            out += "," + std::string(g) + std::to_string(k);
    out += kCrlf;

    for (const ResultRow& row : table.rows)
    {
        std::string line = axis_name(table.axis);
        line += ',' + fmt(row.value, "%.9g");
        line += ',' + solver_name(row.solver);
        line += ',' + row.status;
        line += ',';
        if (row.status == "ok")
            line += fmt_db(row.min_gamma_db);
        append_group(line, row.gamma_db, K);
        append_group(line, row.low_db, K);
        append_group(line, row.up_db, K);
        append_group(line, row.mc_db, K);
        append_group(line, row.mc_ratio_db, K);
        append_group(line, row.mc_stderr, K);
        out += line + kCrlf;
    }
    return out;
}

namespace
{

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    for (char ch : line)
    {
        if (ch == ',')
        {
            out.push_back(field);
            field.clear();
        }
        else
        {
            field += ch;
        }
    }
    out.push_back(field);
    return out;
}

arma::vec parse_group(const std::vector<std::string>& fields, std::size_t offset, arma::uword K)
{
    bool any = false;
    for (arma::uword k = 0; k < K; ++k)
        if (!fields.at(offset + k).empty())
            any = true;
    if (!any)
        return {};
    arma::vec v(K);
    for (arma::uword k = 0; k < K; ++k)
        v[k] = std::stod(fields.at(offset + k));
    return v;
}

} // namespace

ResultTable parse_csv(const std::string& csv)
{
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(csv);
    while (std::getline(in, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    if (lines.empty())
        throw std::invalid_argument("parse_csv: missing header row.");

    const std::vector<std::string> header = split_fields(lines[0]);
    arma::uword K = 0;
    for (const std::string& name : header)
        if (name.rfind("gamma_db_", 0) == 0)
            ++K;
    if (header.size() != 5 + 6 * (std::size_t)K)
        throw std::invalid_argument("parse_csv: unexpected column count.");

    ResultTable table;
    table.K = K;
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const std::vector<std::string> fields = split_fields(lines[i]);
        if (fields.size() != header.size())
            throw std::invalid_argument("parse_csv: row " + std::to_string(i) + " has a bad field count.");
        table.axis = axis_from_name(fields[0]);
        ResultRow row;
        row.value = std::stod(fields[1]);
        row.solver = solver_from_name(fields[2]);
        row.status = fields[3];
        if (!fields[4].empty())
            row.min_gamma_db = std::stod(fields[4]);
        std::size_t offset = 5;
        row.gamma_db = parse_group(fields, offset, K);
        offset += K;
        row.low_db = parse_group(fields, offset, K);
        offset += K;
        row.up_db = parse_group(fields, offset, K);
        offset += K;
        row.mc_db = parse_group(fields, offset, K);
        offset += K;
        row.mc_ratio_db = parse_group(fields, offset, K);
        offset += K;
        row.mc_stderr = parse_group(fields, offset, K);
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace
{

nlohmann::json vec_to_json(const arma::vec& v)
{
    nlohmann::json arr = nlohmann::json::array();
    for (double x : v)
        arr.push_back(x);
    return arr;
}

} // namespace

std::string to_json(const ResultTable& table)
{
    nlohmann::json doc;
    doc["axis"] = axis_name(table.axis);
    doc["users"] = table.K;
    nlohmann::json rows = nlohmann::json::array();
    for (const ResultRow& row : table.rows)
    {
        nlohmann::json r;
        r["value"] = row.value;
        r["solver"] = solver_name(row.solver);
        r["status"] = row.status;
        if (row.status == "ok")
        {
            r["min_gamma_db"] = row.min_gamma_db;
            r["gamma_db"] = vec_to_json(row.gamma_db);
            r["low_db"] = vec_to_json(row.low_db);
            r["up_db"] = vec_to_json(row.up_db);
            if (row.mc_db.n_elem > 0)
            {
                r["mc_gamma_db"] = vec_to_json(row.mc_db);
                r["mc_ratio_db"] = vec_to_json(row.mc_ratio_db);
                r["mc_stderr"] = vec_to_json(row.mc_stderr);
            }
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit(const ResultTable& table,
                                        const std::filesystem::path& out_dir, EmitFormat format)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw std::runtime_error("emit: cannot create output directory " + out_dir.string() + ": " +
                                 ec.message());

    std::vector<std::filesystem::path> written;
    auto write_file = [&](const std::filesystem::path& path, const std::string& content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out || !(out << content))
            throw std::runtime_error("emit: cannot write " + path.string());
        written.push_back(path);
    };

    if (format == EmitFormat::csv || format == EmitFormat::both)
        write_file(out_dir / "results.csv", to_csv(table));
    if (format == EmitFormat::json || format == EmitFormat::both)
        write_file(out_dir / "results.json", to_json(table));
    return written;
}

ExperimentSpec preset(const std::string& name)
{
    ExperimentSpec spec;
    spec.name = name;
    // Shared defaults: L=8, K=4, M=16, N=16 on the 100 m / 85 m (130 m far
    // user) arcs, 2.5 GHz, -60 dBm noise, 1 W budget, equal power.
    // The noise sweeps span four decades around the -60 dBm operating point.
    if (name == "fig3")
    {
        spec.axis = SweepAxis::sigma2;
        spec.axis_values = {1e-11, 1e-10, 1e-9, 1e-8, 1e-7};
        spec.solvers = {SolverKind::sr};
        McConfig mc;
        mc.trials = 2000;
        mc.seed = 7;
        spec.mc = mc;
    }
    else if (name == "fig5")
    {
        spec.axis = SweepAxis::sigma2;
        spec.axis_values = {1e-11, 1e-10, 1e-9, 1e-8, 1e-7};
        spec.solvers = {SolverKind::sr};
    }
    else if (name == "fig7")
    {
        spec.axis = SweepAxis::N;
        spec.axis_values = {16, 32, 64};
        spec.solvers = {SolverKind::exhaustive, SolverKind::sr, SolverKind::nearest,
                        SolverKind::random, SolverKind::none};
    }
    else if (name == "fig8")
    {
        spec.axis = SweepAxis::L;
        spec.axis_values = {2, 4, 8, 16};
        spec.solvers = {SolverKind::sr, SolverKind::nearest, SolverKind::random};
        McConfig mc;
        mc.trials = 1000;
        mc.seed = 11;
        spec.mc = mc;
    }
    else if (name == "fig9")
    {
        spec.scenario.dims.L = 16;
        spec.axis = SweepAxis::N;
        spec.axis_values = {32, 64, 128};
        spec.solvers = {SolverKind::sr};
    }
    else if (name == "fig9_centralized")
    {
        spec.scenario.dims.L = 16;
        spec.axis = SweepAxis::N;
        spec.axis_values = {32, 64, 128};
        spec.solvers = {SolverKind::sr};
        spec.deployment = Deployment::centralized;
    }
    else
    {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return spec;
}

std::vector<std::string> preset_names()
{
    return {"fig3", "fig5", "fig7", "fig8", "fig9", "fig9_centralized"};
}

} // namespace irsim
