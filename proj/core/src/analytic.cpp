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

#include "irsim/analytic.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace irsim
{

arma::cx_mat phase_only(const arma::cx_mat& x)
{
    arma::cx_mat out(x.n_rows, x.n_cols);
    for (arma::uword i = 0; i < x.n_elem; ++i)
    {
        const double mag = std::abs(x[i]);
        out[i] = (mag == 0.0) ? std::complex<double>(1.0, 0.0) : x[i] / mag;
    }
    return out;
}

arma::cx_mat sigma_v(double beta_2, const LosChannel& los)
{
    if (beta_2 <= 0.0)
        throw std::invalid_argument("sigma_v: beta_2 must be positive.");
    arma::cx_mat off = phase_only(los.H1.t() * los.H1);
    off.diag().zeros();
    arma::cx_mat sigma = (pi * beta_2 / 4.0) * off;
    sigma.diag() += beta_2;
    return sigma;
}

namespace
{

void check_inputs(const DeploymentScenario& scn, arma::uword user, const arma::uvec& assoc_row,
                  const std::vector<LosChannel>& los)
{
    if (user >= scn.dims.K)
        throw std::invalid_argument("correlation_matrix: user index out of range.");
    if (assoc_row.n_elem != los.size())
        throw std::invalid_argument("correlation_matrix: association row does not match the IRS list.");
    if (los.size() > scn.dims.L)
        throw std::invalid_argument("correlation_matrix: more LoS channels than IRSs.");
    for (const auto& l : los)
        if (l.H1.n_rows != scn.dims.M)
            throw std::invalid_argument("correlation_matrix: H1 row count does not match M.");
}

// Leading coefficient of the direct/cascade alignment block.
double cross_block_coeff(double beta_1, double beta_2, double beta_d, arma::uword M, arma::uword N)
{
    return 2.0 * std::sqrt(beta_1 * beta_2 * beta_d) * (double)N * pi / (4.0 * std::sqrt((double)M));
}

} // namespace

arma::cx_mat correlation_matrix(const DeploymentScenario& scn, arma::uword user,
                                const arma::uvec& assoc_row, const std::vector<LosChannel>& los)
{
    check_inputs(scn, user, assoc_row, los);
    const arma::uword M = scn.dims.M;

    arma::cx_mat R(M, M, arma::fill::zeros);
    R.diag() += scn.beta_d[user];

    for (std::size_t l = 0; l < los.size(); ++l)
    {
        const double beta_2 = scn.beta_2(l, user);
        const arma::cx_mat gram = los[l].H1 * los[l].H1.t(); // M x M
        R += beta_2 * gram;                                  // floor from every IRS
        if (assoc_row[l] != 0)
        {
            const arma::uword N = los[l].H1.n_cols;
            R += cross_block_coeff(los[l].beta_1, beta_2, scn.beta_d[user], M, N) * phase_only(gram);
            R += los[l].H1 * sigma_v(beta_2, los[l]) * los[l].H1.t();
            R -= beta_2 * gram;
        }
    }
    return R;
}

double mean_sq_gain(const DeploymentScenario& scn, arma::uword user, const arma::uvec& assoc_row,
                    const std::vector<LosChannel>& los)
{
    check_inputs(scn, user, assoc_row, los);
    const arma::uword M = scn.dims.M;

    double total = (double)M * scn.beta_d[user];
    for (std::size_t l = 0; l < los.size(); ++l)
    {
        const double beta_2 = scn.beta_2(l, user);
        const double tr_gram = arma::accu(arma::square(arma::abs(los[l].H1))); // tr(H1^H H1)
        total += beta_2 * tr_gram;
        if (assoc_row[l] != 0)
        {
            const arma::uword N = los[l].H1.n_cols;
            const double alpha = std::sqrt(los[l].beta_1 * beta_2 * scn.beta_d[user]) * pi *
                                 std::sqrt((double)M) * (double)N / 2.0;
            // tr(H1^H H1 Sigma) expanded against the Sigma structure:
            // beta_2 tr(G) + (pi beta_2 / 4) sum_{n != m} |G_{nm}|, G = H1^H H1.
            const arma::mat gram_abs = arma::abs(los[l].H1.t() * los[l].H1);
            const double off_abs = arma::accu(gram_abs) - arma::trace(gram_abs);
            const double tr_gram_sigma = beta_2 * tr_gram + (pi * beta_2 / 4.0) * off_abs;
            total += alpha + tr_gram_sigma - beta_2 * tr_gram;
        }
    }
    return total;
}

double fourth_moment(const arma::cx_mat& R)
{
    if (R.n_rows != R.n_cols)
        throw std::invalid_argument("fourth_moment: R must be square.");
    const double tr = std::real(arma::trace(R));
    const double tr_sq = arma::accu(arma::square(arma::abs(R))); // tr(R^2) for Hermitian R
    return tr_sq + tr * tr;
}

double cross_term(const arma::cx_mat& R_k, const arma::cx_mat& R_t)
{
    if (R_k.n_rows != R_t.n_rows || R_k.n_cols != R_t.n_cols || R_k.n_rows != R_k.n_cols)
        throw std::invalid_argument("cross_term: dimension mismatch.");
    // tr(R_t R_k) = <vec(R_k), vec(R_t)> for Hermitian arguments
    return std::real(arma::cdot(arma::vectorise(R_k), arma::vectorise(R_t)));
}

AvgSinrReport avg_sinr(const std::vector<arma::cx_mat>& R, const PowerAllocation& pow, double sigma2)
{
    const arma::uword K = R.size();
    if (K == 0)
        throw std::invalid_argument("avg_sinr: no users.");
    if (pow.p.n_elem != K)
        throw std::invalid_argument("avg_sinr: power vector length mismatch.");
    if (sigma2 <= 0.0)
        throw std::invalid_argument("avg_sinr: sigma2 must be positive.");

    arma::vec tr(K), tr_sq(K), c(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        tr[k] = std::real(arma::trace(R[k]));
        tr_sq[k] = arma::accu(arma::square(arma::abs(R[k])));
        if (tr[k] <= 0.0)
            throw std::invalid_argument("avg_sinr: correlation traces must be positive.");
        c[k] = pow.p[k] / tr[k];
    }

    AvgSinrReport report;
    report.gamma_bar.set_size(K);
    report.gamma_low.set_size(K);
    report.gamma_up.set_size(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        const double numerator = c[k] * (tr_sq[k] + tr[k] * tr[k]);
        double interference = 0.0;
        for (arma::uword t = 0; t < K; ++t)
            if (t != k)
                interference += c[t] * cross_term(R[k], R[t]);
        report.gamma_bar[k] = numerator / (interference + sigma2);
        const auto bounds = sinr_bounds(R[k], c[k], sigma2, K);
        report.gamma_low[k] = bounds.first;
        report.gamma_up[k] = bounds.second;
    }
    report.min_user = report.gamma_bar.index_min(); // first minimum = lowest index
    report.min_sinr = report.gamma_bar[report.min_user];
    return report;
}

std::pair<double, double> sinr_bounds(const arma::cx_mat& R_k, double c_k, double sigma2, arma::uword K)
{
    const double tr = std::real(arma::trace(R_k));
    const double tr_sq = arma::accu(arma::square(arma::abs(R_k)));
    const double up = c_k * (tr_sq + tr * tr) / sigma2;
    const double low = (1.0 + tr * tr / tr_sq) / ((double)(K - 1) + sigma2 / (c_k * tr_sq));
    return {low, up};
}

arma::cx_mat CorrelationBlocks::assemble(arma::uword user, const arma::uvec& assoc_row) const
{
    arma::cx_mat R = base[user];
    for (arma::uword l = 0; l < assoc_row.n_elem; ++l)
        if (assoc_row[l] != 0)
            R += block[l][user];
    return R;
}

CorrelationBlocks correlation_blocks(const DeploymentScenario& scn, const std::vector<LosChannel>& los)
{
    const arma::uword K = scn.dims.K, M = scn.dims.M;
    CorrelationBlocks out;
    out.M = M;
    out.base.reserve(K);
    out.block.resize(los.size());

    std::vector<arma::cx_mat> gram(los.size());
    for (std::size_t l = 0; l < los.size(); ++l)
        gram[l] = los[l].H1 * los[l].H1.t();

    for (arma::uword k = 0; k < K; ++k)
    {
        arma::cx_mat base(M, M, arma::fill::zeros);
        base.diag() += scn.beta_d[k];
        for (std::size_t l = 0; l < los.size(); ++l)
            base += scn.beta_2(l, k) * gram[l];
        out.base.push_back(std::move(base));
    }
    for (std::size_t l = 0; l < los.size(); ++l)
    {
        out.block[l].reserve(K);
        const arma::uword N = los[l].H1.n_cols;
        for (arma::uword k = 0; k < K; ++k)
        {
            const double beta_2 = scn.beta_2(l, k);
            arma::cx_mat blk =
                cross_block_coeff(los[l].beta_1, beta_2, scn.beta_d[k], M, N) * phase_only(gram[l]);
            blk += los[l].H1 * sigma_v(beta_2, los[l]) * los[l].H1.t();
            blk -= beta_2 * gram[l];
            out.block[l].push_back(std::move(blk));
        }
    }
    return out;
}

} // namespace irsim
