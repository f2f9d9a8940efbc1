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

#ifndef IRSIM_EXPERIMENT_HPP
#define IRSIM_EXPERIMENT_HPP

#include <armadillo>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irsim/assoc.hpp"
#include "irsim/montecarlo.hpp"
#include "irsim/scenario.hpp"

namespace irsim
{

enum class SolverKind
{
    exhaustive,
    sr,
    nearest,
    random,
    none // no-IRS baseline: R_k = beta_d I_M
};

std::string solver_name(SolverKind s);
SolverKind solver_from_name(const std::string& name);

enum class Deployment
{
    distributed,
    centralized
};

// JSON-facing scenario inputs; build() turns them into a DeploymentScenario.
struct ScenarioConfig
{
    SystemDims dims;
    double carrier_ghz = 2.5;
    double bs_spacing_wavelengths = 0.5;
    double irs_spacing_wavelengths = 0.5;
    ArcLayout layout;
    LinkBudget budget;

    ArrayGeometry geometry() const;
    DeploymentScenario build(Deployment deployment = Deployment::distributed) const;
};

enum class SweepAxis
{
    N,     // IRS elements per surface (N_z fixed, N_x = value / N_z)
    L,     // IRS count
    sigma2 // noise power [W]
};

std::string axis_name(SweepAxis a);
SweepAxis axis_from_name(const std::string& name);

struct ExperimentSpec
{
    std::string name = "experiment";
    ScenarioConfig scenario;
    SweepAxis axis = SweepAxis::N;
    std::vector<double> axis_values;
    std::vector<SolverKind> solvers;
    Deployment deployment = Deployment::distributed;
    std::optional<McConfig> mc;
    std::uint64_t seed = 1;                    // random_assignment seed
    std::uint64_t exhaustive_budget = 1u << 20;
    bool keep_mc_trials = false;               // retain per-trial SINRs in the rows
    bool keep_solutions = false;               // retain each cell's SolveResult

    void validate() const; // axis values strictly increasing, solver set nonempty
};

// One table row per (axis value, solver). Vectors are sized K, or empty for
// the columns a row does not populate (MC columns without an MC config,
// everything but status on a failed row).
struct ResultRow
{
    double value = 0.0;
    SolverKind solver = SolverKind::none;
    std::string status = "ok";
    double min_gamma_db = 0.0;
    arma::vec gamma_db;
    arma::vec low_db;
    arma::vec up_db;
    arma::vec mc_db;
    arma::vec mc_ratio_db;
    arma::vec mc_stderr;  // linear standard error of the MC mean
    arma::mat mc_trials;  // trials x K, only with ExperimentSpec::keep_mc_trials
    std::optional<SolveResult> solution; // only with ExperimentSpec::keep_solutions
};

struct ResultTable
{
    SweepAxis axis = SweepAxis::N;
    arma::uword K = 0;
    std::vector<ResultRow> rows; // ordered by (axis value, solver enum)
};

// Run every (axis value, solver) cell: rebuild the scenario, solve the
// association, evaluate the closed-form SINRs and bounds, and sample the
// Monte-Carlo estimates when configured. Deterministic given the spec.
ResultTable run_experiment(const ExperimentSpec& spec);

// RFC-4180 CSV with a header row; dB values carry 6 significant digits.
std::string to_csv(const ResultTable& table);
ResultTable parse_csv(const std::string& csv);

std::string to_json(const ResultTable& table);

enum class EmitFormat
{
    csv,
    json,
    both
};

// Writes results.csv / results.json under out_dir; returns the paths written.
std::vector<std::filesystem::path> emit(const ResultTable& table,
                                        const std::filesystem::path& out_dir,
                                        EmitFormat format = EmitFormat::both);

// Figure-reproduction presets: fig3, fig5, fig7, fig8, fig9.
ExperimentSpec preset(const std::string& name);
std::vector<std::string> preset_names();

} // namespace irsim

#endif
