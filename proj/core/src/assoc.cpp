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

#include "irsim/assoc.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "irsim/rng.hpp"
#include "parallel.hpp"

namespace irsim
{

AssociationMatrix::AssociationMatrix(arma::uword K, arma::uword L)
    : lambda_(K, L, arma::fill::zeros), column_user_(L, 0)
{
    if (K == 0)
        throw std::invalid_argument("AssociationMatrix: need at least one user.");
    lambda_.row(0).ones();
}

AssociationMatrix AssociationMatrix::all_to_user(arma::uword K, arma::uword L, arma::uword user)
{
    AssociationMatrix m(K, L);
    for (arma::uword l = 0; l < L; ++l)
        m.assign(l, user);
    return m;
}

void AssociationMatrix::assign(arma::uword irs, arma::uword user)
{
    if (irs >= n_irs() || user >= n_users())
        throw std::invalid_argument("AssociationMatrix::assign: index out of range.");
    lambda_(column_user_[irs], irs) = 0;
    lambda_(user, irs) = 1;
    column_user_[irs] = user;
}

arma::uvec AssociationMatrix::row_for_user(arma::uword user) const
{
    if (user >= n_users())
        throw std::invalid_argument("AssociationMatrix::row_for_user: index out of range.");
    return lambda_.row(user).t();
}

arma::uvec AssociationMatrix::load() const
{
    return arma::sum(lambda_, 1);
}

bool AssociationMatrix::operator==(const AssociationMatrix& other) const
{
    return lambda_.n_rows == other.lambda_.n_rows && lambda_.n_cols == other.lambda_.n_cols &&
           arma::all(arma::vectorise(lambda_) == arma::vectorise(other.lambda_));
}

void AssociationMatrix::validate() const
{
    for (arma::uword l = 0; l < n_irs(); ++l)
    {
        arma::uword ones = 0;
        for (arma::uword k = 0; k < n_users(); ++k)
        {
            if (lambda_(k, l) > 1)
                throw std::invalid_argument("AssociationMatrix: entries must be binary.");
            ones += lambda_(k, l);
        }
        if (ones != 1)
            throw std::invalid_argument("AssociationMatrix: every IRS must serve exactly one user.");
        if (lambda_(column_user_[l], l) != 1)
            throw std::invalid_argument("AssociationMatrix: cached column user out of sync.");
    }
}

std::uint64_t codebook_size(arma::uword K, arma::uword L, std::uint64_t budget)
{
    if (K == 0 || L == 0)
        throw std::invalid_argument("codebook_size: K and L must be at least 1.");
    std::uint64_t size = 1;
    for (arma::uword l = 0; l < L; ++l)
    {
        if (size > budget / K)
            throw BudgetError("association codebook K^L exceeds the enumeration budget of " +
                              std::to_string(budget) + " candidates; use successive_refinement instead");
        size *= K;
    }
    if (size > budget)
        throw BudgetError("association codebook K^L exceeds the enumeration budget of " +
                          std::to_string(budget) + " candidates; use successive_refinement instead");
    return size;
}

AssociationMatrix assoc_from_index(arma::uword K, arma::uword L, std::uint64_t n)
{
    AssociationMatrix m(K, L);
    // Base-K digits of n, least significant first; digit l picks the user of
    // IRS l. Index K^L wraps to the all-user-1 matrix via its (L+1)-th digit.
    for (arma::uword l = 0; l < L; ++l)
    {
        m.assign(l, (arma::uword)(n % K));
        n /= K;
    }
    return m;
}

std::vector<AssociationMatrix> codebook(arma::uword K, arma::uword L, std::uint64_t budget)
{
    const std::uint64_t size = codebook_size(K, L, budget);
    std::vector<AssociationMatrix> out;
    out.reserve(size);
    for (std::uint64_t n = 1; n <= size; ++n)
        out.push_back(assoc_from_index(K, L, n));
    return out;
}

AvgSinrReport evaluate_association(const CorrelationBlocks& blocks, const AssociationMatrix& assoc,
                                   const PowerAllocation& pow, double sigma2)
{
    const arma::uword K = assoc.n_users();
    std::vector<arma::cx_mat> R;
    R.reserve(K);
    for (arma::uword k = 0; k < K; ++k)
        R.push_back(blocks.assemble(k, assoc.row_for_user(k)));
    return avg_sinr(R, pow, sigma2);
}

SolveResult exhaustive_search(const DeploymentScenario& scn, const PowerAllocation& pow,
                              double sigma2, std::uint64_t budget)
{
    const arma::uword K = scn.dims.K, L = scn.dims.L;
    const std::uint64_t size = codebook_size(K, L, budget);
    const CorrelationBlocks blocks = correlation_blocks(scn, los_channels(scn));

    struct Best
    {
        double min_sinr = -std::numeric_limits<double>::infinity();
        std::uint64_t index = 0;
    };

    const unsigned workers = std::max(1u, detail::thread_count());
    std::vector<Best> best_per_chunk(std::min<std::uint64_t>(workers, size));
    detail::parallel_chunks(size, [&](std::uint64_t begin, std::uint64_t end, unsigned chunk_id)
    {
        Best best;
        for (std::uint64_t i = begin; i < end; ++i)
        {
            const std::uint64_t index = i + 1; // codebook indices run 1..K^L
            const AssociationMatrix cand = assoc_from_index(K, L, index);
            const AvgSinrReport rep = evaluate_association(blocks, cand, pow, sigma2);
            if (rep.min_sinr > best.min_sinr)
            {
                best.min_sinr = rep.min_sinr;
                best.index = index;
            }
        }
        best_per_chunk[chunk_id] = best;
    });

    Best best;
    for (const Best& b : best_per_chunk) // chunks in ascending index order: ties keep the lowest
        if (b.index != 0 && b.min_sinr > best.min_sinr)
            best = b;

    SolveResult result;
    result.assoc = assoc_from_index(K, L, best.index);
    const AvgSinrReport rep = evaluate_association(blocks, result.assoc, pow, sigma2);
    result.min_sinr = rep.min_sinr;
    result.per_user = rep.gamma_bar;
    result.iterations = 1;
    result.evaluations = size;
    result.trajectory = {rep.min_sinr};
    return result;
}

SolveResult successive_refinement(const DeploymentScenario& scn, const PowerAllocation& pow,
                                  double sigma2, const AssociationMatrix& init)
{
    init.validate();
    if (init.n_users() != scn.dims.K || init.n_irs() != scn.dims.L)
        throw std::invalid_argument("successive_refinement: init does not match the scenario.");

    const CorrelationBlocks blocks = correlation_blocks(scn, los_channels(scn));

    SolveResult result;
    result.assoc = init;
    AvgSinrReport report = evaluate_association(blocks, result.assoc, pow, sigma2);
    result.evaluations = 1;
    result.trajectory = {report.min_sinr};

    while (true)
    {
        ++result.iterations;
        const arma::uword bottleneck = report.min_user;
        const double current_min = report.min_sinr;

        // Tentatively hand each foreign IRS to the bottleneck user and score
        // the resulting system minimum; keep the best move (lowest l on ties).
        std::optional<arma::uword> best_l;
        AvgSinrReport best_report;
        for (arma::uword l = 0; l < scn.dims.L; ++l)
        {
            if (result.assoc.user_of(l) == bottleneck)
                continue;
            const arma::uword previous = result.assoc.user_of(l);
            result.assoc.assign(l, bottleneck);
            const AvgSinrReport tentative = evaluate_association(blocks, result.assoc, pow, sigma2);
            ++result.evaluations;
            result.assoc.assign(l, previous);
            if (!best_l || tentative.min_sinr > best_report.min_sinr)
            {
                best_l = l;
                best_report = tentative;
            }
        }
        if (!best_l)
            break; // bottleneck user already owns every IRS

        if (best_report.min_sinr <= current_min)
            break; // no strictly improving move; keep the current matrix

        result.assoc.assign(*best_l, bottleneck);
        report = best_report;
        result.trajectory.push_back(report.min_sinr);
    }

    result.min_sinr = report.min_sinr;
    result.per_user = report.gamma_bar;
    return result;
}

AssociationMatrix nearest_rule(const DeploymentScenario& scn)
{
    AssociationMatrix assoc(scn.dims.K, scn.dims.L);
    for (arma::uword l = 0; l < scn.dims.L; ++l)
    {
        arma::vec dist(scn.dims.K);
        for (arma::uword k = 0; k < scn.dims.K; ++k)
            dist[k] = arma::norm(scn.irs_pos.col(l) - scn.user_pos.col(k));
        assoc.assign(l, dist.index_min()); // first minimum = lowest user index
    }
    return assoc;
}

AssociationMatrix random_assignment(arma::uword K, arma::uword L, std::uint64_t seed)
{
    AssociationMatrix assoc(K, L);
    RngStream rng(seed, 0, 0);
    for (arma::uword l = 0; l < L; ++l)
        assoc.assign(l, (arma::uword)rng.next_below(K));
    return assoc;
}

} // namespace irsim
