#include <benchmark/benchmark.h>

#include "irsim/analytic.hpp"
#include "irsim/assoc.hpp"
#include "irsim/channel.hpp"
#include "irsim/scenario.hpp"

namespace
{

using namespace irsim;

DeploymentScenario scenario_for(arma::uword N_x)
{
    SystemDims dims;
    dims.N_x = N_x;
    return build_arc_scenario(dims, {}, {}, {});
}

void BM_correlation_matrix(benchmark::State& state)
{
    const DeploymentScenario scn = scenario_for((arma::uword)state.range(0));
    const auto los = los_channels(scn);
    const AssociationMatrix assoc = nearest_rule(scn);
    for (auto _ : state)
        for (arma::uword k = 0; k < scn.dims.K; ++k)
            benchmark::DoNotOptimize(correlation_matrix(scn, k, assoc.row_for_user(k), los));
}
BENCHMARK(BM_correlation_matrix)->Arg(4)->Arg(8)->Arg(16);

void BM_block_assembly_and_sinr(benchmark::State& state)
{
    const DeploymentScenario scn = scenario_for(4);
    const CorrelationBlocks blocks = correlation_blocks(scn, los_channels(scn));
    const AssociationMatrix assoc = nearest_rule(scn);
    PowerAllocation pow;
    pow.p = arma::vec(scn.dims.K, arma::fill::value(scn.p_max / (double)scn.dims.K));
    pow.p_max = scn.p_max;
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_association(blocks, assoc, pow, scn.sigma2));
}
BENCHMARK(BM_block_assembly_and_sinr);

} // namespace
