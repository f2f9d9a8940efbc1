#include <benchmark/benchmark.h>

#include "irsim/assoc.hpp"
#include "irsim/scenario.hpp"

namespace
{

using namespace irsim;

PowerAllocation flat_power(const DeploymentScenario& scn)
{
    PowerAllocation pow;
    pow.p = arma::vec(scn.dims.K, arma::fill::value(scn.p_max / (double)scn.dims.K));
    pow.p_max = scn.p_max;
    return pow;
}

void BM_exhaustive_search(benchmark::State& state)
{
    SystemDims dims;
    dims.L = (arma::uword)state.range(0);
    const DeploymentScenario scn = build_arc_scenario(dims, {}, {}, {});
    const PowerAllocation pow = flat_power(scn);
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_search(scn, pow, scn.sigma2));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_exhaustive_search)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_successive_refinement(benchmark::State& state)
{
    SystemDims dims;
    dims.L = (arma::uword)state.range(0);
    const DeploymentScenario scn = build_arc_scenario(dims, {}, {}, {});
    const PowerAllocation pow = flat_power(scn);
    const AssociationMatrix init = nearest_rule(scn);
    for (auto _ : state)
        benchmark::DoNotOptimize(successive_refinement(scn, pow, scn.sigma2, init));
}
BENCHMARK(BM_successive_refinement)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

} // namespace
