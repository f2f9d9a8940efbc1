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

#ifndef IRSIM_BEAMFORM_HPP
#define IRSIM_BEAMFORM_HPP

#include <armadillo>
#include <vector>

#include "irsim/channel.hpp"

namespace irsim
{

struct ReflectVector
{
    arma::cx_vec v;          // N unit-modulus reflection coefficients
    arma::uword tuned_user;  // user the IRS is tuned to
    bool degenerate = false; // set when the global phase a^H h_d was zero
};

// Gain-optimal reflect vector for one IRS tuned to one user:
// v_n = exp(j * arg(conj(h2_n) * b_n)) * exp(j * arg(a^H h_d)).
// Maximizes || h_d^H + v^H H0^H ||^2 over unit-modulus v.
ReflectVector optimal_reflect_vector(const arma::cx_vec& h2, const arma::cx_vec& b,
                                     const arma::cx_vec& a, const arma::cx_vec& h_d,
                                     arma::uword tuned_user = 0);

// MRT precoders f_k = h_k / sqrt(normalizer_k); the normalizer is the
// statistic E[||h_k||^2] = tr(R_k), not a per-realization estimate.
struct Precoder
{
    std::vector<arma::cx_vec> f; // K vectors, each M
    arma::vec normalizer;        // K, E[||h_k||^2] used in the denominators
};

Precoder mrt_precoders(const std::vector<arma::cx_vec>& channels, const arma::vec& normalizers);

// Per-user transmit powers with the derived SINR constants
// c_k = p_k / tr(R_k). The c field is bound to the trace vector it was built
// from; rebuilding is required whenever the association (hence R_k) changes.
struct PowerAllocation
{
    arma::vec p;  // K, per-user power [W]
    double p_max; // budget [W]
    arma::vec c;  // K, c_k = p_k / tr(R_k)
};

PowerAllocation equal_power(double p_max, arma::uword K, const arma::vec& tr_R);

} // namespace irsim

#endif
