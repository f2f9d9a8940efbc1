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

#ifndef IRSIM_SCENARIO_HPP
#define IRSIM_SCENARIO_HPP

#include <armadillo>

#include "irsim/units.hpp"

namespace irsim
{

// System dimensions: M BS antennas, L IRSs of N = N_x * N_z elements, K users.
struct SystemDims
{
    arma::uword M = 16;   // BS antenna count (ULA)
    arma::uword N_x = 4;  // IRS elements per horizontal axis
    arma::uword N_z = 4;  // IRS elements per vertical axis
    arma::uword L = 8;    // IRS count
    arma::uword K = 4;    // user count

    arma::uword N() const { return N_x * N_z; }
    void validate() const; // throws std::invalid_argument when any field is 0
};

struct ArrayGeometry
{
    double d_bs = 0.5 * 0.1199169832;  // BS inter-antenna spacing [m]
    double d_irs = 0.5 * 0.1199169832; // IRS inter-element spacing [m]
    double lambda_c = 0.1199169832;    // carrier wavelength [m], default 2.5 GHz

    double wavenumber() const { return 2.0 * pi / lambda_c; }
    void validate() const;
};

// Large-scale gain model 10^(-C/10) / d^alpha with penetration loss and
// antenna gain folded in as fixed dB offsets per link.
struct PathLossModel
{
    double fixed_loss_db = 30.0;   // C, loss at d = 1 m
    double exponent = 3.67;        // alpha
    double penetration_db = 0.0;
    double antenna_gain_dbi = 0.0;
};

// linear gain = 10^((gain - C - penetration)/10) * d^(-alpha); d must be > 0
double path_gain(const PathLossModel& model, double distance_m);

// Per-link loss models plus the power/noise budget of a deployment.
struct LinkBudget
{
    PathLossModel bs_irs{25.0, 2.2, 0.0, 5.0};    // beta_1
    PathLossModel irs_user{30.0, 3.67, 5.0, 5.0}; // beta_2
    PathLossModel direct{30.0, 3.67, 20.0, 5.0};  // beta_d
    double noise_w = 1e-9;                        // sigma^2, -60 dBm
    double p_max_w = 1.0;                         // BS power budget
};

// Arc deployment: BS at the origin, IRSs on one arc, users on another, with
// one user pushed to a farther radius to create a bottleneck.
struct ArcLayout
{
    double irs_radius_m = 100.0;
    double user_radius_m = 85.0;
    double far_user_radius_m = 130.0;
    arma::sword far_user_index = 1; // zero-based; 1 is "user 2"; -1 disables
    double sector_start_rad = pi * 30.0 / 180.0;
    double sector_end_rad = pi * 150.0 / 180.0;
};

struct DeploymentScenario
{
    SystemDims dims;
    ArrayGeometry geometry;

    arma::vec bs_pos{0.0, 0.0}; // 2-D Cartesian [m]
    arma::mat irs_pos;          // 2 x L
    arma::mat user_pos;         // 2 x K

    arma::vec beta_1;   // L, BS-IRS path gains (linear)
    arma::mat beta_2;   // L x K, IRS-user path gains (linear)
    arma::vec beta_d;   // K, direct path gains (linear)

    arma::vec theta;    // L, bearing BS -> IRS [rad], drives the ULA response
    arma::vec phi;      // L, UPA elevation AoA [rad], pi/2 in the planar layout
    arma::vec vartheta; // L, bearing IRS -> BS [rad], drives the UPA azimuth factor

    double sigma2 = 1e-9; // noise power [W]
    double p_max = 1.0;   // power budget [W]

    void validate() const;
};

// In-plane bearings for one BS-IRS link: theta is the bearing BS->IRS,
// vartheta the bearing IRS->BS, phi fixed at pi/2 (planar deployment, the UPA
// azimuth factor carries the geometry). Angles in [0, 2*pi).
struct LinkAngles
{
    double theta;
    double phi;
    double vartheta;
};
LinkAngles link_angles(const arma::vec& bs_pos, const arma::vec& irs_pos);

DeploymentScenario build_arc_scenario(const SystemDims& dims, const ArrayGeometry& geometry,
                                      const ArcLayout& layout, const LinkBudget& budget);

// Relocate all L IRSs to the mid-sector point of the IRS arc (one "central"
// unit of L*N elements). Angles and beta_1 become identical across l and
// beta_2 is recomputed from the new distances; fading stays independent per
// (l, k) link.
DeploymentScenario centralize_irs(const DeploymentScenario& scn, const ArcLayout& layout,
                                  const LinkBudget& budget);

} // namespace irsim

#endif
