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

#ifndef IRSIM_CONFIG_HPP
#define IRSIM_CONFIG_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "irsim/experiment.hpp"

namespace irsim
{

// Raised on malformed experiment configs; the message carries the offending
// file, the line (for syntax errors) or the field path (for value errors).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int config_schema_version = 1;

// Parse an experiment spec from its JSON document (schema documented in
// docs/config-schema.md). `origin` labels diagnostics, usually the file name.
ExperimentSpec experiment_from_json(const std::string& text, const std::string& origin = "config");

ExperimentSpec load_experiment_file(const std::filesystem::path& path);

// Serialize a spec back to its JSON document form.
std::string experiment_to_json(const ExperimentSpec& spec);

// Serialize a solver outcome: the binary association matrix, per-user and
// minimum SINR (linear), trace counters, and the accepted-step trajectory.
std::string solve_result_to_json(const SolveResult& result);

} // namespace irsim

#endif
