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

#include "irsim/beamform.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace irsim
{

ReflectVector optimal_reflect_vector(const arma::cx_vec& h2, const arma::cx_vec& b,
                                     const arma::cx_vec& a, const arma::cx_vec& h_d,
                                     arma::uword tuned_user)
{
    if (h2.n_elem != b.n_elem)
        throw std::invalid_argument("optimal_reflect_vector: h2 and b length mismatch.");
    if (a.n_elem != h_d.n_elem)
        throw std::invalid_argument("optimal_reflect_vector: a and h_d length mismatch.");

    ReflectVector out;
    out.tuned_user = tuned_user;

    const std::complex<double> align = arma::cdot(a, h_d); // a^H h_d
    double global_phase = 0.0;
    if (align == std::complex<double>(0.0, 0.0))
        out.degenerate = true; // any global phase is optimal; use 0
    else
        global_phase = std::arg(align);

    out.v.set_size(h2.n_elem);
    for (arma::uword n = 0; n < h2.n_elem; ++n)
    {
        const std::complex<double> w = std::conj(h2[n]) * b[n];
        const double local_phase = (w == std::complex<double>(0.0, 0.0)) ? 0.0 : std::arg(w);
        out.v[n] = std::polar(1.0, local_phase + global_phase);
    }
    return out;
}

Precoder mrt_precoders(const std::vector<arma::cx_vec>& channels, const arma::vec& normalizers)
{
    if (channels.size() != normalizers.n_elem)
        throw std::invalid_argument("mrt_precoders: channel/normalizer count mismatch.");
    Precoder out;
    out.normalizer = normalizers;
    out.f.reserve(channels.size());
    for (arma::uword k = 0; k < channels.size(); ++k)
    {
        if (normalizers[k] <= 0.0)
            throw std::invalid_argument("mrt_precoders: normalizers must be positive.");
        if (arma::norm(channels[k]) == 0.0)
            throw std::invalid_argument("mrt_precoders: zero channel, precoder undefined.");
        out.f.push_back(channels[k] / std::sqrt(normalizers[k]));
    }
    return out;
}

PowerAllocation equal_power(double p_max, arma::uword K, const arma::vec& tr_R)
{
    if (p_max <= 0.0)
        throw std::invalid_argument("equal_power: power budget must be positive.");
    if (tr_R.n_elem != K)
        throw std::invalid_argument("equal_power: trace vector length mismatch.");
    PowerAllocation out;
    out.p_max = p_max;
    out.p = arma::vec(K, arma::fill::value(p_max / (double)K));
    out.c = out.p / tr_R;
    return out;
}

} // namespace irsim
