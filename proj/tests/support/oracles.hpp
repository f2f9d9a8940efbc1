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
//
// Test-only reference implementations. These deliberately avoid the library's
// helpers and recompute everything with dense, literal formulas so they can
// serve as independent oracles.

#ifndef IRSIM_TESTS_ORACLES_HPP
#define IRSIM_TESTS_ORACLES_HPP

#include <armadillo>
#include <complex>
#include <vector>

#include "irsim/assoc.hpp"
#include "irsim/channel.hpp"
#include "irsim/rng.hpp"
#include "irsim/scenario.hpp"

namespace irsim::testing
{

// Straight-line instantaneous SINR: dense reflect vectors, dense cascades,
// dense inner products. Shares only the inputs with the library path.
inline arma::vec straight_line_sinr(const DeploymentScenario& scn, const ChannelSet& set,
                                    const AssociationMatrix& assoc, const arma::vec& p,
                                    const arma::vec& normalizers, double sigma2)
{
    const arma::uword K = scn.dims.K, L = scn.dims.L, M = scn.dims.M, N = scn.dims.N();
    const double wavenumber = 2.0 * irsim::pi / scn.geometry.lambda_c;

    // Steering vectors from the raw formulas.
    std::vector<arma::cx_vec> a(L), b(L);
    for (arma::uword l = 0; l < L; ++l)
    {
        a[l].set_size(M);
        for (arma::uword m = 0; m < M; ++m)
            a[l][m] = std::exp(std::complex<double>(0.0, -wavenumber * scn.geometry.d_bs * (double)m *
                                                             std::cos(scn.theta[l])));
        arma::cx_vec bx(scn.dims.N_x), bz(scn.dims.N_z);
        for (arma::uword n = 0; n < scn.dims.N_x; ++n)
            bx[n] = std::exp(std::complex<double>(0.0, -wavenumber * scn.geometry.d_irs * (double)n *
                                                           std::sin(scn.phi[l]) * std::cos(scn.vartheta[l])));
        for (arma::uword m = 0; m < scn.dims.N_z; ++m)
            bz[m] = std::exp(std::complex<double>(
                0.0, -wavenumber * scn.geometry.d_irs * (double)m * std::cos(scn.phi[l])));
        b[l].set_size(N);
        for (arma::uword n = 0; n < scn.dims.N_x; ++n)
            for (arma::uword m = 0; m < scn.dims.N_z; ++m)
                b[l][n * scn.dims.N_z + m] = bx[n] * bz[m];
    }

    // Gain-optimal reflect phases, written out element by element.
    std::vector<arma::cx_vec> v(L);
    for (arma::uword l = 0; l < L; ++l)
    {
        const arma::uword tuned = assoc.user_of(l);
        std::complex<double> align(0.0, 0.0);
        for (arma::uword m = 0; m < M; ++m)
            align += std::conj(a[l][m]) * set.h_d[tuned][m];
        const double global_phase = (align == std::complex<double>(0.0, 0.0)) ? 0.0 : std::arg(align);
        v[l].set_size(N);
        for (arma::uword n = 0; n < N; ++n)
        {
            const std::complex<double> w = std::conj(set.h_2[l][tuned][n]) * b[l][n];
            const double local = (w == std::complex<double>(0.0, 0.0)) ? 0.0 : std::arg(w);
            v[l][n] = std::exp(std::complex<double>(0.0, local + global_phase));
        }
    }

    // Effective channels through dense M x N cascades.
    std::vector<arma::cx_vec> h(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        h[k] = set.h_d[k];
        for (arma::uword l = 0; l < L; ++l)
        {
            arma::cx_mat H1(M, N);
            for (arma::uword m = 0; m < M; ++m)
                for (arma::uword n = 0; n < N; ++n)
                    H1(m, n) = std::sqrt(scn.beta_1[l]) * a[l][m] * std::conj(b[l][n]);
            arma::cx_mat H0(M, N);
            for (arma::uword m = 0; m < M; ++m)
                for (arma::uword n = 0; n < N; ++n)
                    H0(m, n) = H1(m, n) * set.h_2[l][k][n];
            h[k] += H0 * v[l];
        }
    }

    arma::vec gamma(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        std::complex<double> sig(0.0, 0.0);
        for (arma::uword m = 0; m < M; ++m)
            sig += std::conj(h[k][m]) * h[k][m] / std::sqrt(normalizers[k]);
        double interference = 0.0;
        for (arma::uword t = 0; t < K; ++t)
        {
            if (t == k)
                continue;
            std::complex<double> x(0.0, 0.0);
            for (arma::uword m = 0; m < M; ++m)
                x += std::conj(h[k][m]) * h[t][m] / std::sqrt(normalizers[t]);
            interference += p[t] * std::norm(x);
        }
        gamma[k] = p[k] * std::norm(sig) / (interference + sigma2);
    }
    return gamma;
}

// Channel gain ||h_d^H + v^H H0^H||^2 for one IRS, dense evaluation.
inline double single_irs_gain(const arma::cx_vec& h_d, const arma::cx_mat& H0, const arma::cx_vec& v)
{
    const arma::cx_vec combined = h_d + H0 * v;
    return arma::dot(arma::abs(combined), arma::abs(combined));
}

// Best gain over the 16-level phase grid for N <= 4 elements.
inline double grid_search_gain(const arma::cx_vec& h_d, const arma::cx_mat& H0, arma::uword levels = 16)
{
    const arma::uword N = H0.n_cols;
    arma::uvec digits(N, arma::fill::zeros);
    arma::cx_vec v(N);
    double best = 0.0;
    const arma::uword total = (arma::uword)std::pow((double)levels, (double)N);
    for (arma::uword idx = 0; idx < total; ++idx)
    {
        arma::uword rem = idx;
        for (arma::uword n = 0; n < N; ++n)
        {
            digits[n] = rem % levels;
            rem /= levels;
        }
        for (arma::uword n = 0; n < N; ++n)
            v[n] = std::polar(1.0, 2.0 * irsim::pi * (double)digits[n] / (double)levels);
        best = std::max(best, single_irs_gain(h_d, H0, v));
    }
    return best;
}

// Random unit-modulus vector.
inline arma::cx_vec random_phases(arma::uword N, RngStream& rng)
{
    arma::cx_vec v(N);
    for (arma::uword n = 0; n < N; ++n)
        v[n] = std::polar(1.0, 2.0 * irsim::pi * rng.next_uniform());
    return v;
}

// Draw h ~ CN(0, R) through an eigendecomposition of R.
inline arma::cx_vec sample_cn(const arma::cx_mat& R, RngStream& rng)
{
    arma::vec eigval;
    arma::cx_mat eigvec;
    arma::eig_sym(eigval, eigvec, R);
    arma::cx_vec z(R.n_rows);
    for (arma::uword i = 0; i < R.n_rows; ++i)
        z[i] = std::sqrt(std::max(eigval[i], 0.0)) * rng.next_cgauss();
    return eigvec * z;
}

} // namespace irsim::testing

#endif
