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

#include "irsim/config.hpp"

#include <fstream>
#include <sstream>

#include "irsim/units.hpp"

#include <nlohmann/json.hpp>

namespace irsim
{

namespace
{

using nlohmann::json;

std::size_t line_of_offset(const std::string& text, std::size_t offset)
{
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

[[noreturn]] void fail(const std::string& origin, const std::string& field, const std::string& what)
{
    throw ConfigError(origin + ": field '" + field + "': " + what);
}

const json& require(const json& parent, const std::string& key, const std::string& origin,
                    const std::string& path)
{
    auto it = parent.find(key);
    if (it == parent.end())
        fail(origin, path + key, "missing");
    return *it;
}

double require_number(const json& parent, const std::string& key, const std::string& origin,
                      const std::string& path)
{
    const json& v = require(parent, key, origin, path);
    if (!v.is_number())
        fail(origin, path + key, "expected a number");
    return v.get<double>();
}

arma::uword require_count(const json& parent, const std::string& key, const std::string& origin,
                          const std::string& path)
{
    const json& v = require(parent, key, origin, path);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        fail(origin, path + key, "expected a positive integer");
    return (arma::uword)v.get<std::uint64_t>();
}

std::string require_string(const json& parent, const std::string& key, const std::string& origin,
                           const std::string& path)
{
    const json& v = require(parent, key, origin, path);
    if (!v.is_string())
        fail(origin, path + key, "expected a string");
    return v.get<std::string>();
}

PathLossModel parse_loss(const json& j, const std::string& origin, const std::string& path)
{
    PathLossModel m;
    m.fixed_loss_db = require_number(j, "fixed_db", origin, path);
    m.exponent = require_number(j, "exponent", origin, path);
    m.penetration_db = require_number(j, "penetration_db", origin, path);
    m.antenna_gain_dbi = require_number(j, "antenna_gain_dbi", origin, path);
    return m;
}

ScenarioConfig parse_scenario(const json& j, const std::string& origin)
{
    ScenarioConfig cfg;
    const json& dims = require(j, "dims", origin, "scenario.");
    cfg.dims.M = require_count(dims, "M", origin, "scenario.dims.");
    cfg.dims.N_x = require_count(dims, "N_x", origin, "scenario.dims.");
    cfg.dims.N_z = require_count(dims, "N_z", origin, "scenario.dims.");
    cfg.dims.L = require_count(dims, "L", origin, "scenario.dims.");
    cfg.dims.K = require_count(dims, "K", origin, "scenario.dims.");

    cfg.carrier_ghz = require_number(j, "carrier_ghz", origin, "scenario.");
    cfg.bs_spacing_wavelengths = require_number(j, "bs_spacing_wavelengths", origin, "scenario.");
    cfg.irs_spacing_wavelengths = require_number(j, "irs_spacing_wavelengths", origin, "scenario.");
    if (cfg.carrier_ghz <= 0.0 || cfg.bs_spacing_wavelengths <= 0.0 || cfg.irs_spacing_wavelengths <= 0.0)
        fail(origin, "scenario.carrier_ghz", "carrier and spacings must be positive");

    const json& arc = require(j, "arc", origin, "scenario.");
    cfg.layout.irs_radius_m = require_number(arc, "irs_radius_m", origin, "scenario.arc.");
    cfg.layout.user_radius_m = require_number(arc, "user_radius_m", origin, "scenario.arc.");
    cfg.layout.far_user_radius_m = require_number(arc, "far_user_radius_m", origin, "scenario.arc.");
    const json& far = require(arc, "far_user_index", origin, "scenario.arc.");
    if (!far.is_number_integer())
        fail(origin, "scenario.arc.far_user_index", "expected an integer (-1 disables)");
    cfg.layout.far_user_index = (arma::sword)far.get<std::int64_t>();
    cfg.layout.sector_start_rad = deg_to_rad(require_number(arc, "sector_start_deg", origin, "scenario.arc."));
    cfg.layout.sector_end_rad = deg_to_rad(require_number(arc, "sector_end_deg", origin, "scenario.arc."));

    const json& loss = require(j, "loss", origin, "scenario.");
    cfg.budget.bs_irs = parse_loss(require(loss, "bs_irs", origin, "scenario.loss."), origin, "scenario.loss.bs_irs.");
    cfg.budget.irs_user =
        parse_loss(require(loss, "irs_user", origin, "scenario.loss."), origin, "scenario.loss.irs_user.");
    cfg.budget.direct =
        parse_loss(require(loss, "direct", origin, "scenario.loss."), origin, "scenario.loss.direct.");

    cfg.budget.noise_w = dbm_to_watt(require_number(j, "noise_dbm", origin, "scenario."));
    cfg.budget.p_max_w = require_number(j, "p_max_w", origin, "scenario.");
    if (cfg.budget.p_max_w <= 0.0)
        fail(origin, "scenario.p_max_w", "must be positive");
    return cfg;
}

json loss_to_json(const PathLossModel& m)
{
    return json{{"fixed_db", m.fixed_loss_db},
                {"exponent", m.exponent},
                {"penetration_db", m.penetration_db},
                {"antenna_gain_dbi", m.antenna_gain_dbi}};
}

} // namespace

ExperimentSpec experiment_from_json(const std::string& text, const std::string& origin)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ConfigError(origin + ": line " + std::to_string(line_of_offset(text, e.byte)) + ": " +
                          e.what());
    }
    if (!doc.is_object())
        throw ConfigError(origin + ": top-level document must be an object");

    const json& version = require(doc, "version", origin, "");
    if (!version.is_number_integer() || version.get<int>() != config_schema_version)
        fail(origin, "version", "unsupported schema version (expected " +
                                    std::to_string(config_schema_version) + ")");

    ExperimentSpec spec;
    if (doc.contains("name"))
        spec.name = require_string(doc, "name", origin, "");
    spec.scenario = parse_scenario(require(doc, "scenario", origin, ""), origin);

    const json& sweep = require(doc, "sweep", origin, "");
    try
    {
        spec.axis = axis_from_name(require_string(sweep, "axis", origin, "sweep."));
    }
    catch (const std::invalid_argument& e)
    {
        fail(origin, "sweep.axis", e.what());
    }
    const json& values = require(sweep, "values", origin, "sweep.");
    if (!values.is_array() || values.empty())
        fail(origin, "sweep.values", "expected a nonempty array of numbers");
    for (const json& v : values)
    {
        if (!v.is_number())
            fail(origin, "sweep.values", "expected a nonempty array of numbers");
        spec.axis_values.push_back(v.get<double>());
    }

    const json& solvers = require(doc, "solvers", origin, "");
    if (!solvers.is_array() || solvers.empty())
        fail(origin, "solvers", "expected a nonempty array of solver names");
    for (const json& s : solvers)
    {
        if (!s.is_string())
            fail(origin, "solvers", "expected solver names as strings");
        try
        {
            spec.solvers.push_back(solver_from_name(s.get<std::string>()));
        }
        catch (const std::invalid_argument& e)
        {
            fail(origin, "solvers", e.what());
        }
    }

    const std::string deployment = require_string(doc, "deployment", origin, "");
    if (deployment == "distributed")
        spec.deployment = Deployment::distributed;
    else if (deployment == "centralized")
        spec.deployment = Deployment::centralized;
    else
        fail(origin, "deployment", "expected distributed|centralized");

    if (doc.contains("mc") && !doc["mc"].is_null())
    {
        const json& mc = doc["mc"];
        McConfig cfg;
        cfg.trials = require_count(mc, "trials", origin, "mc.");
        const json& seed = require(mc, "seed", origin, "mc.");
        if (!seed.is_number_unsigned())
            fail(origin, "mc.seed", "expected an unsigned integer");
        cfg.seed = seed.get<std::uint64_t>();
        cfg.confidence = require_number(mc, "confidence", origin, "mc.");
        if (!(cfg.confidence > 0.0 && cfg.confidence < 1.0))
            fail(origin, "mc.confidence", "must lie in (0, 1)");
        spec.mc = cfg;
    }

    if (doc.contains("seed"))
    {
        const json& seed = doc["seed"];
        if (!seed.is_number_unsigned())
            fail(origin, "seed", "expected an unsigned integer");
        spec.seed = seed.get<std::uint64_t>();
    }
    if (doc.contains("exhaustive_budget"))
    {
        const json& budget = doc["exhaustive_budget"];
        if (!budget.is_number_unsigned() || budget.get<std::uint64_t>() == 0)
            fail(origin, "exhaustive_budget", "expected a positive integer");
        spec.exhaustive_budget = budget.get<std::uint64_t>();
    }

    try
    {
        spec.validate();
    }
    catch (const std::invalid_argument& e)
    {
        throw ConfigError(origin + ": " + e.what());
    }
    return spec;
}

ExperimentSpec load_experiment_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return experiment_from_json(buffer.str(), path.filename().string());
}

std::string experiment_to_json(const ExperimentSpec& spec)
{
    json doc;
    doc["version"] = config_schema_version;
    doc["name"] = spec.name;

    json scenario;
    scenario["dims"] = json{{"M", spec.scenario.dims.M},
                            {"N_x", spec.scenario.dims.N_x},
                            {"N_z", spec.scenario.dims.N_z},
                            {"L", spec.scenario.dims.L},
                            {"K", spec.scenario.dims.K}};
    scenario["carrier_ghz"] = spec.scenario.carrier_ghz;
    scenario["bs_spacing_wavelengths"] = spec.scenario.bs_spacing_wavelengths;
    scenario["irs_spacing_wavelengths"] = spec.scenario.irs_spacing_wavelengths;
    scenario["arc"] = json{{"irs_radius_m", spec.scenario.layout.irs_radius_m},
                           {"user_radius_m", spec.scenario.layout.user_radius_m},
                           {"far_user_radius_m", spec.scenario.layout.far_user_radius_m},
                           {"far_user_index", spec.scenario.layout.far_user_index},
                           {"sector_start_deg", rad_to_deg(spec.scenario.layout.sector_start_rad)},
                           {"sector_end_deg", rad_to_deg(spec.scenario.layout.sector_end_rad)}};
    scenario["loss"] = json{{"bs_irs", loss_to_json(spec.scenario.budget.bs_irs)},
                            {"irs_user", loss_to_json(spec.scenario.budget.irs_user)},
                            {"direct", loss_to_json(spec.scenario.budget.direct)}};
    scenario["noise_dbm"] = linear_to_db(spec.scenario.budget.noise_w / 1e-3);
    scenario["p_max_w"] = spec.scenario.budget.p_max_w;
    doc["scenario"] = std::move(scenario);

    json sweep;
    sweep["axis"] = axis_name(spec.axis);
    sweep["values"] = spec.axis_values;
    doc["sweep"] = std::move(sweep);

    json solvers = json::array();
    for (SolverKind s : spec.solvers)
        solvers.push_back(solver_name(s));
    doc["solvers"] = std::move(solvers);

    doc["deployment"] = spec.deployment == Deployment::centralized ? "centralized" : "distributed";
    if (spec.mc)
        doc["mc"] = json{{"trials", spec.mc->trials}, {"seed", spec.mc->seed}, {"confidence", spec.mc->confidence}};
    doc["seed"] = spec.seed;
    doc["exhaustive_budget"] = spec.exhaustive_budget;
    return doc.dump(2) + "\n";
}

std::string solve_result_to_json(const SolveResult& result)
{
    json doc;
    json lambda = json::array();
    for (arma::uword k = 0; k < result.assoc.n_users(); ++k)
    {
        json row = json::array();
        for (arma::uword l = 0; l < result.assoc.n_irs(); ++l)
            row.push_back(result.assoc.matrix()(k, l));
        lambda.push_back(std::move(row));
    }
    doc["lambda"] = std::move(lambda);
    doc["min_sinr"] = result.min_sinr;
    doc["per_user"] = std::vector<double>(result.per_user.begin(), result.per_user.end());
    doc["iterations"] = result.iterations;
    doc["evaluations"] = result.evaluations;
    doc["trajectory"] = result.trajectory;
    return doc.dump(2) + "\n";
}

} // namespace irsim
