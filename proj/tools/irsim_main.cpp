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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsim/config.hpp"
#include "irsim/experiment.hpp"

namespace
{

irsim::ExperimentSpec resolve_config(const std::string& config)
{
    if (std::filesystem::exists(config))
        return irsim::load_experiment_file(config);
    const auto names = irsim::preset_names();
    if (std::find(names.begin(), names.end(), config) != names.end())
        return irsim::preset(config);
    std::string joined;
    for (const auto& n : names)
        joined += (joined.empty() ? "" : ", ") + n;
    throw irsim::ConfigError("--config '" + config + "' is neither a file nor a preset (presets: " +
                             joined + ")");
}

std::string fmt_value(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_trial_dumps(const irsim::ResultTable& table, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    for (const irsim::ResultRow& row : table.rows)
    {
        if (row.mc_trials.n_elem == 0)
            continue;
        const std::string stem =
            irsim::axis_name(table.axis) + "_" + fmt_value(row.value) + "_" + irsim::solver_name(row.solver);
        std::ofstream out(dir / (stem + ".csv"), std::ios::binary);
        out << "trial";
        for (arma::uword k = 1; k <= table.K; ++k)
            out << ",gamma_" << k;
        out << "\r\n";
        for (arma::uword t = 0; t < row.mc_trials.n_rows; ++t)
        {
            out << t;
            for (arma::uword k = 0; k < table.K; ++k)
            {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.9g", row.mc_trials(t, k));
                out << ',' << buf;
            }
            out << "\r\n";
        }
        std::cout << "wrote " << (dir / (stem + ".csv")).string() << "\n";
    }
}

void write_solution_dumps(const irsim::ResultTable& table, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    for (const irsim::ResultRow& row : table.rows)
    {
        if (!row.solution)
            continue;
        const std::string stem =
            irsim::axis_name(table.axis) + "_" + fmt_value(row.value) + "_" + irsim::solver_name(row.solver);
        std::ofstream out(dir / (stem + ".json"), std::ios::binary);
        out << irsim::solve_result_to_json(*row.solution);
        std::cout << "wrote " << (dir / (stem + ".json")).string() << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Distributed-IRS multi-user MISO downlink simulator"};
    app.require_subcommand(1);

    std::string config;
    std::string out_dir = "results";
    std::string format = "both";
    std::vector<std::string> solver_names;
    std::uint64_t mc_trials = 0;
    bool have_seed = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    bool dump_trials = false;
    bool dump_solutions = false;

    CLI::App* simulate = app.add_subcommand("simulate", "Run a sweep experiment and emit result tables");
    simulate
        ->add_option("--config", config,
                     "Experiment config file or preset name (see `irsim presets`)")
        ->required();
    simulate->add_option("--out", out_dir, "Output directory")->capture_default_str();
    simulate->add_option("--mc-trials", mc_trials,
                         "Override the Monte-Carlo trial count (enables MC when absent)");
    simulate->add_option("--seed", seed, "Override the experiment and Monte-Carlo seeds")
        ->each([&](const std::string&) { have_seed = true; });
    simulate->add_option("--solver", solver_names,
                         "Override the solver set: exhaustive|sr|nearest|random|none (repeatable)");
    simulate->add_option("--format", format, "Output format: csv, json or both")
        ->check(CLI::IsMember({"csv", "json", "both"}))
        ->capture_default_str();
    simulate->add_option("--budget", budget, "Override the exhaustive-search enumeration budget");
    simulate->add_flag("--dump-trials", dump_trials,
                       "Also write per-trial Monte-Carlo SINRs under <out>/trials/");
    simulate->add_flag("--dump-solutions", dump_solutions,
                       "Also write each cell's solver outcome under <out>/solutions/");

    CLI::App* presets = app.add_subcommand("presets", "List the built-in experiment presets");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (presets->parsed())
        {
            for (const auto& name : irsim::preset_names())
                std::cout << name << "\n";
            return 0;
        }

        irsim::ExperimentSpec spec = resolve_config(config);
        if (!solver_names.empty())
        {
            spec.solvers.clear();
            for (const auto& name : solver_names)
                spec.solvers.push_back(irsim::solver_from_name(name));
        }
        if (mc_trials > 0)
        {
            if (!spec.mc)
                spec.mc = irsim::McConfig{};
            spec.mc->trials = mc_trials;
        }
        if (have_seed)
        {
            spec.seed = seed;
            if (spec.mc)
                spec.mc->seed = seed;
        }
        if (budget > 0)
            spec.exhaustive_budget = budget;
        spec.keep_mc_trials = dump_trials;
        spec.keep_solutions = dump_solutions;

        const irsim::ResultTable table = irsim::run_experiment(spec);

        irsim::EmitFormat emit_format = irsim::EmitFormat::both;
        if (format == "csv")
            emit_format = irsim::EmitFormat::csv;
        else if (format == "json")
            emit_format = irsim::EmitFormat::json;

        for (const auto& path : irsim::emit(table, out_dir, emit_format))
            std::cout << "wrote " << path.string() << "\n";
        if (dump_trials)
            write_trial_dumps(table, std::filesystem::path(out_dir) / "trials");
        if (dump_solutions)
            write_solution_dumps(table, std::filesystem::path(out_dir) / "solutions");
        return 0;
    }
    catch (const irsim::ConfigError& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
