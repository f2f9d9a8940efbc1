#include <benchmark/benchmark.h>

#include "irsim/assoc.hpp"
#include "irsim/montecarlo.hpp"
#include "irsim/scenario.hpp"

namespace
{

using namespace irsim;

void BM_channel_draw(benchmark::State& state)
{
    const DeploymentScenario scn = build_arc_scenario({}, {}, {}, {});
    std::uint64_t trial = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(draw_channel_set(scn, 1, trial++));
}
BENCHMARK(BM_channel_draw);

void BM_mc_average_sinr(benchmark::State& state)
{
    const DeploymentScenario scn = build_arc_scenario({}, {}, {}, {});
    const AssociationMatrix assoc = nearest_rule(scn);
    PowerAllocation pow;
    pow.p = arma::vec(scn.dims.K, arma::fill::value(scn.p_max / (double)scn.dims.K));
    pow.p_max = scn.p_max;
    McConfig cfg;
    cfg.trials = (arma::uword)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_average_sinr(scn, assoc, pow, cfg));
    state.SetItemsProcessed((std::int64_t)state.iterations() * state.range(0));
}
BENCHMARK(BM_mc_average_sinr)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace
