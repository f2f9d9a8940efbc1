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

#ifndef IRSIM_CHANNEL_HPP
#define IRSIM_CHANNEL_HPP

#include <armadillo>
#include <vector>

#include "irsim/rng.hpp"
#include "irsim/scenario.hpp"

namespace irsim
{

// ULA response at the BS: entry m = exp(-j * k * d_bs * m * cos(theta)),
// m = 0..M-1. Unit-modulus entries, first entry 1.
arma::cx_vec ula_steering(arma::uword M, double theta, const ArrayGeometry& geometry);

// UPA response at an IRS: Kronecker product of the horizontal factor (phase
// -k * d_irs * n * sin(phi) * cos(vartheta), n = 0..N_x-1) and the vertical
// factor (phase -k * d_irs * m * cos(phi), m = 0..N_z-1). Entry layout is
// n * N_z + m.
arma::cx_vec upa_steering(arma::uword N_x, arma::uword N_z, double phi, double vartheta,
                          const ArrayGeometry& geometry);

// Deterministic LoS BS-IRS channel H1 = sqrt(beta_1) * a * b^H, rank one.
struct LosChannel
{
    arma::cx_mat H1;  // M x N
    double beta_1;
    arma::cx_vec a;   // M, BS ULA response
    arma::cx_vec b;   // N, IRS UPA response
};

LosChannel make_los_channel(double beta_1, const arma::cx_vec& a, const arma::cx_vec& b);

// LoS channels for every IRS of a deployment.
std::vector<LosChannel> los_channels(const DeploymentScenario& scn);

// i.i.d. CN(0, beta) vector: real and imaginary parts each N(0, beta/2).
arma::cx_vec sample_cgauss(arma::uword dim, double beta, RngStream& rng);

// One block-fading realization of every random link.
struct ChannelSet
{
    std::vector<arma::cx_vec> h_d;              // K direct channels, each M
    std::vector<std::vector<arma::cx_vec>> h_2; // [L][K] IRS-user channels, each N
};

// Stream ids: direct link k -> k, IRS-user link (l,k) -> K + l*K + k, so each
// (trial, link) pair draws from its own counter-based stream. n_irs limits the
// draw to the first n_irs surfaces (defaults to all of them).
ChannelSet draw_channel_set(const DeploymentScenario& scn, std::uint64_t seed, std::uint64_t trial);
ChannelSet draw_channel_set(const DeploymentScenario& scn, std::uint64_t seed, std::uint64_t trial,
                            arma::uword n_irs);

// Cascaded IRS channel H0 = H1 * diag(h2); column n is H1 column n scaled by h2[n].
arma::cx_mat cascaded_channel(const LosChannel& los, const arma::cx_vec& h2);

// Effective downlink channel h = h_d + sum_l H0_l * v_l. Every IRS contributes
// regardless of association; association only decides which user each v_l is
// tuned to. The v_l must be unit-modulus.
arma::cx_vec effective_channel(const arma::cx_vec& h_d, const std::vector<arma::cx_mat>& cascaded,
                               const std::vector<arma::cx_vec>& v);

} // namespace irsim

#endif
