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

#include "irsim/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace irsim
{

arma::cx_vec ula_steering(arma::uword M, double theta, const ArrayGeometry& geometry)
{
    if (M == 0)
        throw std::invalid_argument("ula_steering: M must be at least 1.");
    const double step = -geometry.wavenumber() * geometry.d_bs * std::cos(theta);
    arma::cx_vec a(M);
    for (arma::uword m = 0; m < M; ++m)
        a[m] = std::polar(1.0, step * (double)m);
    return a;
}

arma::cx_vec upa_steering(arma::uword N_x, arma::uword N_z, double phi, double vartheta,
                          const ArrayGeometry& geometry)
{
    if (N_x == 0 || N_z == 0)
        throw std::invalid_argument("upa_steering: N_x and N_z must be at least 1.");
    const double kd = geometry.wavenumber() * geometry.d_irs;
    const double step_x = -kd * std::sin(phi) * std::cos(vartheta);
    const double step_z = -kd * std::cos(phi);

    arma::cx_vec bx(N_x), bz(N_z);
    for (arma::uword n = 0; n < N_x; ++n)
        bx[n] = std::polar(1.0, step_x * (double)n);
    for (arma::uword m = 0; m < N_z; ++m)
        bz[m] = std::polar(1.0, step_z * (double)m);
    return arma::kron(bx, bz);
}

LosChannel make_los_channel(double beta_1, const arma::cx_vec& a, const arma::cx_vec& b)
{
    if (beta_1 <= 0.0)
        throw std::invalid_argument("make_los_channel: beta_1 must be positive.");
    LosChannel los;
    los.beta_1 = beta_1;
    los.a = a;
    los.b = b;
    los.H1 = std::sqrt(beta_1) * (a * b.t()); // b.t() is the conjugate transpose
    return los;
}

std::vector<LosChannel> los_channels(const DeploymentScenario& scn)
{
    std::vector<LosChannel> out;
    out.reserve(scn.dims.L);
    for (arma::uword l = 0; l < scn.dims.L; ++l)
    {
        const arma::cx_vec a = ula_steering(scn.dims.M, scn.theta[l], scn.geometry);
        const arma::cx_vec b =
            upa_steering(scn.dims.N_x, scn.dims.N_z, scn.phi[l], scn.vartheta[l], scn.geometry);
        out.push_back(make_los_channel(scn.beta_1[l], a, b));
    }
    return out;
}

arma::cx_vec sample_cgauss(arma::uword dim, double beta, RngStream& rng)
{
    if (beta <= 0.0)
        throw std::invalid_argument("sample_cgauss: beta must be positive.");
    const double scale = std::sqrt(beta);
    arma::cx_vec z(dim);
    for (arma::uword i = 0; i < dim; ++i)
        z[i] = scale * rng.next_cgauss();
    return z;
}

ChannelSet draw_channel_set(const DeploymentScenario& scn, std::uint64_t seed, std::uint64_t trial)
{
    return draw_channel_set(scn, seed, trial, scn.dims.L);
}

ChannelSet draw_channel_set(const DeploymentScenario& scn, std::uint64_t seed, std::uint64_t trial,
                            arma::uword n_irs)
{
    if (n_irs > scn.dims.L)
        throw std::invalid_argument("draw_channel_set: n_irs exceeds the deployment's IRS count.");
    const arma::uword L = n_irs, K = scn.dims.K;
    ChannelSet set;
    set.h_d.reserve(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        RngStream rng(seed, trial, k);
        set.h_d.push_back(sample_cgauss(scn.dims.M, scn.beta_d[k], rng));
    }
    set.h_2.resize(L);
    for (arma::uword l = 0; l < L; ++l)
    {
        set.h_2[l].reserve(K);
        for (arma::uword k = 0; k < K; ++k)
        {
            RngStream rng(seed, trial, K + l * K + k);
            set.h_2[l].push_back(sample_cgauss(scn.dims.N(), scn.beta_2(l, k), rng));
        }
    }
    return set;
}

arma::cx_mat cascaded_channel(const LosChannel& los, const arma::cx_vec& h2)
{
    if (h2.n_elem != los.H1.n_cols)
        throw std::invalid_argument("cascaded_channel: h2 length does not match H1 columns.");
    return los.H1 * arma::diagmat(h2);
}

arma::cx_vec effective_channel(const arma::cx_vec& h_d, const std::vector<arma::cx_mat>& cascaded,
                               const std::vector<arma::cx_vec>& v)
{
    if (cascaded.size() != v.size())
        throw std::invalid_argument("effective_channel: cascaded/v count mismatch.");
    arma::cx_vec h = h_d;
    for (std::size_t l = 0; l < v.size(); ++l)
    {
        if (v[l].n_elem != cascaded[l].n_cols)
            throw std::invalid_argument("effective_channel: v length does not match the cascade.");
        for (const auto& coeff : v[l])
            if (std::abs(std::abs(coeff) - 1.0) > 1e-9)
                throw std::invalid_argument("effective_channel: reflect coefficients must be unit-modulus.");
        h += cascaded[l] * v[l];
    }
    return h;
}

} // namespace irsim
