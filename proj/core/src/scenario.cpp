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

#include "irsim/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irsim
{

void SystemDims::validate() const
{
    if (M == 0 || N_x == 0 || N_z == 0 || L == 0 || K == 0)
        throw std::invalid_argument("System dimensions must all be at least 1.");
}

void ArrayGeometry::validate() const
{
    if (d_bs <= 0.0 || d_irs <= 0.0 || lambda_c <= 0.0)
        throw std::invalid_argument("Array spacings and wavelength must be positive.");
}

double path_gain(const PathLossModel& model, double distance_m)
{
    if (distance_m <= 0.0)
        throw std::domain_error("path_gain: distance must be positive.");
    const double exponent_db10 = (model.antenna_gain_dbi - model.fixed_loss_db - model.penetration_db) / 10.0;
    return std::pow(10.0, exponent_db10 - model.exponent * std::log10(distance_m));
}

void DeploymentScenario::validate() const
{
    dims.validate();
    geometry.validate();
    const arma::uword L = dims.L, K = dims.K;
    if (irs_pos.n_rows != 2 || irs_pos.n_cols != L || user_pos.n_rows != 2 || user_pos.n_cols != K)
        throw std::invalid_argument("Scenario position arrays do not match the declared dimensions.");
    if (beta_1.n_elem != L || beta_2.n_rows != L || beta_2.n_cols != K || beta_d.n_elem != K)
        throw std::invalid_argument("Scenario gain arrays do not match the declared dimensions.");
    if (theta.n_elem != L || phi.n_elem != L || vartheta.n_elem != L)
        throw std::invalid_argument("Scenario angle arrays do not match the declared dimensions.");
    if (beta_1.min() <= 0.0 || beta_2.min() <= 0.0 || beta_d.min() <= 0.0)
        throw std::invalid_argument("Path gains must be positive.");
    if (sigma2 <= 0.0 || p_max <= 0.0)
        throw std::invalid_argument("Noise power and power budget must be positive.");
}

namespace
{

double wrap_angle(double a)
{
    a = std::fmod(a, 2.0 * pi);
    if (a < 0.0)
        a += 2.0 * pi;
    return a;
}

// n points uniformly across [start, end] (endpoints included); midpoint for n = 1
arma::vec spread_angles(double start, double end, arma::uword n)
{
    arma::vec angles(n);
    if (n == 1)
    {
        angles[0] = 0.5 * (start + end);
        return angles;
    }
    for (arma::uword i = 0; i < n; ++i)
        angles[i] = start + (end - start) * (double)i / (double)(n - 1);
    return angles;
}

arma::vec on_arc(const arma::vec& center, double radius, double bearing)
{
    return arma::vec{center[0] + radius * std::cos(bearing), center[1] + radius * std::sin(bearing)};
}

void fill_link_stats(DeploymentScenario& scn, const LinkBudget& budget)
{
    const arma::uword L = scn.dims.L, K = scn.dims.K;
    scn.beta_1.set_size(L);
    scn.beta_2.set_size(L, K);
    scn.beta_d.set_size(K);
    scn.theta.set_size(L);
    scn.phi.set_size(L);
    scn.vartheta.set_size(L);

    for (arma::uword l = 0; l < L; ++l)
    {
        const arma::vec irs = scn.irs_pos.col(l);
        scn.beta_1[l] = path_gain(budget.bs_irs, arma::norm(irs - scn.bs_pos));
        const LinkAngles angles = link_angles(scn.bs_pos, irs);
        scn.theta[l] = angles.theta;
        scn.phi[l] = angles.phi;
        scn.vartheta[l] = angles.vartheta;
        for (arma::uword k = 0; k < K; ++k)
            scn.beta_2(l, k) = path_gain(budget.irs_user, arma::norm(irs - scn.user_pos.col(k)));
    }
    for (arma::uword k = 0; k < K; ++k)
        scn.beta_d[k] = path_gain(budget.direct, arma::norm(scn.user_pos.col(k) - scn.bs_pos));
}

} // namespace

LinkAngles link_angles(const arma::vec& bs_pos, const arma::vec& irs_pos)
{
    const arma::vec d = irs_pos - bs_pos;
    if (arma::norm(d) == 0.0)
        throw std::domain_error("link_angles: coincident BS and IRS positions.");
    LinkAngles out;
    out.theta = wrap_angle(std::atan2(d[1], d[0]));
    out.vartheta = wrap_angle(out.theta + pi);
    out.phi = pi / 2.0;
    return out;
}

DeploymentScenario build_arc_scenario(const SystemDims& dims, const ArrayGeometry& geometry,
                                      const ArcLayout& layout, const LinkBudget& budget)
{
    dims.validate();
    geometry.validate();
    if (!(layout.sector_start_rad <= layout.sector_end_rad))
        throw std::invalid_argument("build_arc_scenario: sector angles must be ordered.");
    if (layout.irs_radius_m <= 0.0 || layout.user_radius_m <= 0.0 || layout.far_user_radius_m <= 0.0)
        throw std::invalid_argument("build_arc_scenario: arc radii must be positive.");
    if (layout.far_user_index >= (arma::sword)dims.K)
        throw std::invalid_argument("build_arc_scenario: far_user_index out of range.");

    DeploymentScenario scn;
    scn.dims = dims;
    scn.geometry = geometry;
    scn.bs_pos = {0.0, 0.0};
    scn.sigma2 = budget.noise_w;
    scn.p_max = budget.p_max_w;

    const arma::vec irs_bearings = spread_angles(layout.sector_start_rad, layout.sector_end_rad, dims.L);
    const arma::vec user_bearings = spread_angles(layout.sector_start_rad, layout.sector_end_rad, dims.K);

    scn.irs_pos.set_size(2, dims.L);
    for (arma::uword l = 0; l < dims.L; ++l)
        scn.irs_pos.col(l) = on_arc(scn.bs_pos, layout.irs_radius_m, irs_bearings[l]);

    scn.user_pos.set_size(2, dims.K);
    for (arma::uword k = 0; k < dims.K; ++k)
    {
        const double radius =
            ((arma::sword)k == layout.far_user_index) ? layout.far_user_radius_m : layout.user_radius_m;
        scn.user_pos.col(k) = on_arc(scn.bs_pos, radius, user_bearings[k]);
    }

    // Reject coincident nodes: they would put a zero distance into path_gain.
    arma::mat all = arma::join_rows(scn.bs_pos, arma::join_rows(scn.irs_pos, scn.user_pos));
    for (arma::uword i = 0; i < all.n_cols; ++i)
        for (arma::uword j = i + 1; j < all.n_cols; ++j)
            if (arma::norm(all.col(i) - all.col(j)) == 0.0)
                throw std::invalid_argument("build_arc_scenario: overlapping node positions (columns " +
                                            std::to_string(i) + ", " + std::to_string(j) + ").");

    fill_link_stats(scn, budget);
    scn.validate();
    return scn;
}

DeploymentScenario centralize_irs(const DeploymentScenario& scn, const ArcLayout& layout,
                                  const LinkBudget& budget)
{
    DeploymentScenario out = scn;
    const double mid = 0.5 * (layout.sector_start_rad + layout.sector_end_rad);
    const arma::vec site = on_arc(out.bs_pos, layout.irs_radius_m, mid);
    for (arma::uword l = 0; l < out.dims.L; ++l)
        out.irs_pos.col(l) = site;
    fill_link_stats(out, budget);
    out.validate();
    return out;
}

} // namespace irsim
