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

#ifndef IRSIM_ASSOC_HPP
#define IRSIM_ASSOC_HPP

#include <armadillo>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "irsim/analytic.hpp"
#include "irsim/beamform.hpp"
#include "irsim/scenario.hpp"

namespace irsim
{

// Raised when an enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Binary K x L association matrix with one-hot columns: every IRS serves
// exactly one user.
class AssociationMatrix
{
  public:
    AssociationMatrix(arma::uword K, arma::uword L); // all IRSs to user 0

    static AssociationMatrix all_to_user(arma::uword K, arma::uword L, arma::uword user);

    arma::uword n_users() const { return lambda_.n_rows; }
    arma::uword n_irs() const { return lambda_.n_cols; }

    arma::uword user_of(arma::uword irs) const { return column_user_[irs]; }
    void assign(arma::uword irs, arma::uword user);

    // lambda_{l,k} over l for a fixed user k, the analytic-module row
    arma::uvec row_for_user(arma::uword user) const;

    const arma::umat& matrix() const { return lambda_; }

    // IRS count per user
    arma::uvec load() const;

    bool operator==(const AssociationMatrix& other) const;

    void validate() const; // one-hot columns, binary entries

  private:
    arma::umat lambda_;            // K x L of 0/1
    std::vector<arma::uword> column_user_; // cached one-hot position per column
};

// Number of candidate matrices K^L; throws when it exceeds budget (or overflows).
std::uint64_t codebook_size(arma::uword K, arma::uword L, std::uint64_t budget);

// The base-K codebook entry for index n in [1, K^L]: digit l of the base-K
// representation of n (least significant first) selects the user of IRS l.
AssociationMatrix assoc_from_index(arma::uword K, arma::uword L, std::uint64_t n);

// All K^L candidates in index order, subject to the enumeration budget.
std::vector<AssociationMatrix> codebook(arma::uword K, arma::uword L,
                                        std::uint64_t budget = 1u << 20);

struct SolveResult
{
    AssociationMatrix assoc{1, 1};
    double min_sinr = 0.0;           // linear
    arma::vec per_user;              // linear
    arma::uword iterations = 0;      // refinement rounds (SR) / 1 (others)
    std::uint64_t evaluations = 0;   // closed-form SINR evaluations performed
    std::vector<double> trajectory;  // accepted min-SINR sequence (SR)
};

// Closed-form average SINR for one candidate association (helper shared by all
// solvers; powers from pow.p, c recomputed per candidate).
AvgSinrReport evaluate_association(const CorrelationBlocks& blocks, const AssociationMatrix& assoc,
                                   const PowerAllocation& pow, double sigma2);

// Max-min over the whole base-K codebook; ties resolved to the lowest index.
SolveResult exhaustive_search(const DeploymentScenario& scn, const PowerAllocation& pow,
                              double sigma2, std::uint64_t budget = 1u << 20);

// Successive refinement: repeatedly move one IRS to the bottleneck user,
// keeping the move that maximizes the system minimum; stops (and reverts)
// as soon as a round fails to strictly improve it.
SolveResult successive_refinement(const DeploymentScenario& scn, const PowerAllocation& pow,
                                  double sigma2, const AssociationMatrix& init);

// Each IRS to its nearest user (lowest user index on ties).
AssociationMatrix nearest_rule(const DeploymentScenario& scn);

// Each IRS to an independently uniform user.
AssociationMatrix random_assignment(arma::uword K, arma::uword L, std::uint64_t seed);

} // namespace irsim

#endif
