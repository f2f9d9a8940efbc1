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

#ifndef IRSIM_ANALYTIC_HPP
#define IRSIM_ANALYTIC_HPP

#include <armadillo>
#include <utility>
#include <vector>

#include "irsim/beamform.hpp"
#include "irsim/channel.hpp"
#include "irsim/scenario.hpp"

namespace irsim
{

// Entrywise z / |z| with the phase of 0 defined as 0 (entry becomes 1).
arma::cx_mat phase_only(const arma::cx_mat& x);

// Covariance of the aligned cascade v~ = diag(|h2|) exp(j*arg(H1^H h_d)) for
// one (l, k) link:
//   Sigma = beta_2 * I_N + (pi*beta_2/4) * phase_only(H1^H H1) o (1 - I).
// Hermitian; diagonal beta_2, off-diagonal magnitudes pi*beta_2/4.
arma::cx_mat sigma_v(double beta_2, const LosChannel& los);

// Correlation matrix R_k of the effective channel of user k under an
// association row (lambda_{l,k} over l):
//   R_k = beta_d I_M
//       + sum_l lambda_l [ 2*sqrt(beta_1 beta_2 beta_d) * N*pi/(4*sqrt(M))
//                            * phase_only(H1 H1^H)
//                          + H1 Sigma H1^H - beta_2 H1 H1^H ]
//       + sum_l beta_2 H1 H1^H.
// The trailing sum runs over all l: non-associated IRSs still contribute
// beta_2 * H1 H1^H. H1 may cover fewer than dims.L IRSs (the first
// los.size() ones); an empty list yields beta_d * I_M.
arma::cx_mat correlation_matrix(const DeploymentScenario& scn, arma::uword user,
                                const arma::uvec& assoc_row, const std::vector<LosChannel>& los);

// Closed-form E[||h_k||^2]; equals tr(correlation_matrix(...)) identically.
double mean_sq_gain(const DeploymentScenario& scn, arma::uword user, const arma::uvec& assoc_row,
                    const std::vector<LosChannel>& los);

// E[||h||^4] = tr(R^2) + tr(R)^2 for h ~ CN(0, R)
double fourth_moment(const arma::cx_mat& R);

// E[|h_k^H h_t|^2] = tr(R_t R_k) for independent h_k ~ CN(0,R_k), h_t ~ CN(0,R_t)
double cross_term(const arma::cx_mat& R_k, const arma::cx_mat& R_t);

struct AvgSinrReport
{
    arma::vec gamma_bar; // K, per-user average SINR (linear)
    arma::vec gamma_low; // K, identical-correlation lower bound
    arma::vec gamma_up;  // K, orthogonal-correlation upper bound
    arma::uword min_user;
    double min_sinr;
};

// Average SINR per user:
//   gamma_k = c_k (tr(R_k^2) + tr(R_k)^2)
//             / ( sum_{t != k} c_t tr(R_t R_k) + sigma^2 ),  c_k = p_k / tr(R_k).
// c is derived from pow.p and the given R; min_user breaks ties by lowest index.
AvgSinrReport avg_sinr(const std::vector<arma::cx_mat>& R, const PowerAllocation& pow,
                       double sigma2);

// Bounds for one user; first = lower (identical correlations),
// second = upper (orthogonal correlations):
//   up  = c_k (tr(R_k^2) + tr(R_k)^2) / sigma^2
//   low = (1 + tr(R_k)^2 / tr(R_k^2)) / ((K - 1) + sigma^2 / (c_k tr(R_k^2)))
std::pair<double, double> sinr_bounds(const arma::cx_mat& R_k, double c_k, double sigma2,
                                      arma::uword K);

// Precomputed correlation building blocks for fast association search:
// R_k(assoc) = base[k] + sum over associated l of block[l][k].
struct CorrelationBlocks
{
    std::vector<arma::cx_mat> base;                // K matrices, beta_d I + all-l floor
    std::vector<std::vector<arma::cx_mat>> block;  // [L][K] association blocks
    arma::uword M = 0;

    arma::cx_mat assemble(arma::uword user, const arma::uvec& assoc_row) const;
};

CorrelationBlocks correlation_blocks(const DeploymentScenario& scn,
                                     const std::vector<LosChannel>& los);

} // namespace irsim

#endif
