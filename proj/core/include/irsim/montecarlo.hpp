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

#ifndef IRSIM_MONTECARLO_HPP
#define IRSIM_MONTECARLO_HPP

#include <armadillo>
#include <cstdint>
#include <vector>

#include "irsim/assoc.hpp"
#include "irsim/beamform.hpp"
#include "irsim/channel.hpp"
#include "irsim/scenario.hpp"

namespace irsim
{

struct McConfig
{
    arma::uword trials = 1000;
    std::uint64_t seed = 1;
    double confidence = 0.95; // CI coverage, in (0, 1)
    bool keep_trials = false; // retain the per-trial SINR matrix for dumps

    void validate() const;
};

struct McEstimate
{
    arma::vec mean;           // K, sample mean of the instantaneous SINR
    arma::vec stderr_of_mean; // K, sample standard error (0 when trials == 1)
    arma::vec ci_halfwidth;   // K, z(confidence) * stderr
    arma::vec ratio_of_means; // K, E[num]/E[den] estimator (ratio-of-expectations)
    arma::uword trials_used = 0;
    arma::mat per_trial;      // trials x K, filled only when keep_trials
};

// Upper quantile of the standard normal at coverage level `confidence`
// (e.g. 0.95 -> 1.95996).
double normal_quantile_two_sided(double confidence);

// Instantaneous SINR per user for one fading realization: gain-optimal
// reflect vectors for each IRS's associated user, effective channels, MRT with
// the analytic normalizers tr(R_k), then
//   gamma_k = p_k |h_k^H f_k|^2 / ( sum_{t != k} p_t |h_k^H f_t|^2 + sigma^2 ).
// Also exposes the numerator / denominator split for ratio-of-means sampling.
struct SinrSample
{
    arma::vec gamma;       // K
    arma::vec numerator;   // K, p_k |h_k^H f_k|^2
    arma::vec denominator; // K, interference + sigma^2
};

SinrSample instantaneous_sinr_split(const ChannelSet& channels, const std::vector<LosChannel>& los,
                                    const AssociationMatrix& assoc, const PowerAllocation& pow,
                                    const arma::vec& normalizers, double sigma2);

arma::vec instantaneous_sinr(const ChannelSet& channels, const std::vector<LosChannel>& los,
                             const AssociationMatrix& assoc, const PowerAllocation& pow,
                             const arma::vec& normalizers, double sigma2);

// Sample mean of the instantaneous SINR over independent per-trial channel
// sets, plus the ratio-of-means estimator. Deterministic for a given
// (scn, assoc, cfg) regardless of thread count: trials use counter-based
// streams and the reduction is a compensated sum in trial order.
McEstimate mc_average_sinr(const DeploymentScenario& scn, const AssociationMatrix& assoc,
                           const PowerAllocation& pow, const McConfig& cfg);

// Empirical covariance (1/T) sum h_k h_k^H of user k's effective channel.
arma::cx_mat mc_correlation(const DeploymentScenario& scn, const AssociationMatrix& assoc,
                            arma::uword user, const McConfig& cfg);

} // namespace irsim

#endif
