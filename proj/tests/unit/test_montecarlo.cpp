#include <doctest.h>

#include <cstdlib>

#include "irsim/analytic.hpp"
#include "irsim/assoc.hpp"
#include "irsim/montecarlo.hpp"
#include "irsim/units.hpp"
#include "oracles.hpp"

using namespace irsim;

namespace
{

DeploymentScenario tiny_scenario()
{
    SystemDims dims;
    dims.M = 2;
    dims.N_x = 2;
    dims.N_z = 1;
    dims.L = 1;
    dims.K = 2;
    return build_arc_scenario(dims, {}, {}, {});
}

PowerAllocation flat_power(const DeploymentScenario& scn)
{
    PowerAllocation pow;
    pow.p = arma::vec(scn.dims.K, arma::fill::value(scn.p_max / (double)scn.dims.K));
    pow.p_max = scn.p_max;
    return pow;
}

arma::vec normalizers_for(const DeploymentScenario& scn, const AssociationMatrix& assoc)
{
    const auto los = los_channels(scn);
    arma::vec tr(scn.dims.K);
    for (arma::uword k = 0; k < scn.dims.K; ++k)
        tr[k] = mean_sq_gain(scn, k, assoc.row_for_user(k), los);
    return tr;
}

} // namespace

TEST_CASE("Monte-Carlo config validation")
{
    McConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.trials = 10;
    cfg.confidence = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.confidence = 0.95;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("normal quantiles against tabulated values")
{
    CHECK(normal_quantile_two_sided(0.95) == doctest::Approx(1.959964).epsilon(1e-5));
    CHECK(normal_quantile_two_sided(0.99) == doctest::Approx(2.575829).epsilon(1e-5));
    CHECK(normal_quantile_two_sided(0.6827) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("single-user instantaneous SINR reduces to the textbook ratio")
{
    SystemDims dims;
    dims.M = 3;
    dims.N_x = dims.N_z = 2;
    dims.L = 2;
    dims.K = 1;
    ArcLayout layout;
    layout.far_user_index = -1;
    const DeploymentScenario scn = build_arc_scenario(dims, {}, layout, {});
    const auto los = los_channels(scn);
    const AssociationMatrix assoc = AssociationMatrix::all_to_user(1, 2, 0);
    const arma::vec norms = normalizers_for(scn, assoc);
    const PowerAllocation pow = flat_power(scn);

    const ChannelSet set = draw_channel_set(scn, 3, 0);
    const arma::vec gamma = instantaneous_sinr(set, los, assoc, pow, norms, scn.sigma2);

    // gamma = p ||h||^4 / (normalizer * sigma^2) with f = h / sqrt(normalizer)
    std::vector<arma::cx_vec> v;
    for (arma::uword l = 0; l < 2; ++l)
        v.push_back(optimal_reflect_vector(set.h_2[l][0], los[l].b, los[l].a, set.h_d[0], 0).v);
    arma::cx_vec h = set.h_d[0];
    for (arma::uword l = 0; l < 2; ++l)
        h += cascaded_channel(los[l], set.h_2[l][0]) * v[l];
    const double gain = std::real(arma::cdot(h, h));
    CHECK(gamma[0] == doctest::Approx(pow.p[0] * gain * gain / (norms[0] * scn.sigma2)).epsilon(1e-12));
}

TEST_CASE("instantaneous SINR vanishes monotonically as noise grows")
{
    const DeploymentScenario scn = tiny_scenario();
    const auto los = los_channels(scn);
    const AssociationMatrix assoc = nearest_rule(scn);
    const arma::vec norms = normalizers_for(scn, assoc);
    const PowerAllocation pow = flat_power(scn);
    const ChannelSet set = draw_channel_set(scn, 5, 0);

    double prev = arma::datum::inf;
    for (double sigma2 : {1e-12, 1e-10, 1e-8, 1e-6, 1e-4})
    {
        const arma::vec gamma = instantaneous_sinr(set, los, assoc, pow, norms, sigma2);
        CHECK(gamma[0] < prev);
        prev = gamma[0];
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("library SINR equals a straight-line dense reimplementation")
{
    const DeploymentScenario scn = tiny_scenario();
    const auto los = los_channels(scn);
    const AssociationMatrix assoc = nearest_rule(scn);
    const arma::vec norms = normalizers_for(scn, assoc);
    const PowerAllocation pow = flat_power(scn);

    for (std::uint64_t trial = 0; trial < 20; ++trial)
    {
        const ChannelSet set = draw_channel_set(scn, 17, trial);
        const arma::vec lib = instantaneous_sinr(set, los, assoc, pow, norms, scn.sigma2);
        const arma::vec oracle = testing::straight_line_sinr(scn, set, assoc, pow.p, norms, scn.sigma2);
        for (arma::uword k = 0; k < scn.dims.K; ++k)
            CHECK(lib[k] == doctest::Approx(oracle[k]).epsilon(1e-12));
    }
}

TEST_CASE("a single trial is its own mean with zero spread")
{
    const DeploymentScenario scn = tiny_scenario();
    const auto los = los_channels(scn);
    const AssociationMatrix assoc = nearest_rule(scn);
    const PowerAllocation pow = flat_power(scn);
    McConfig cfg;
    cfg.trials = 1;
    cfg.seed = 8;
    const McEstimate est = mc_average_sinr(scn, assoc, pow, cfg);
    const ChannelSet set = draw_channel_set(scn, 8, 0);
    const arma::vec gamma =
        instantaneous_sinr(set, los, assoc, pow, normalizers_for(scn, assoc), scn.sigma2);
    CHECK(est.mean[0] == doctest::Approx(gamma[0]).epsilon(1e-15));
    CHECK(est.stderr_of_mean[0] == 0.0);
}

TEST_CASE("standard error shrinks like the square root of the trial count")
{
    const DeploymentScenario scn = tiny_scenario();
    const AssociationMatrix assoc = nearest_rule(scn);
    const PowerAllocation pow = flat_power(scn);
    McConfig cfg;
    cfg.trials = 2000;
    cfg.seed = 10;
    const McEstimate small = mc_average_sinr(scn, assoc, pow, cfg);
    cfg.trials = 4000;
    const McEstimate big = mc_average_sinr(scn, assoc, pow, cfg);
    const double ratio = big.stderr_of_mean[0] / small.stderr_of_mean[0];
    CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.20));
}

TEST_CASE("estimates are bit-identical for any worker count")
{
    const DeploymentScenario scn = tiny_scenario();
    const AssociationMatrix assoc = nearest_rule(scn);
    const PowerAllocation pow = flat_power(scn);
    McConfig cfg;
    cfg.trials = 500;
    cfg.seed = 4;

    setenv("IRSIM_THREADS", "1", 1);
    const McEstimate serial = mc_average_sinr(scn, assoc, pow, cfg);
    setenv("IRSIM_THREADS", "7", 1);
    const McEstimate threaded = mc_average_sinr(scn, assoc, pow, cfg);
    unsetenv("IRSIM_THREADS");

    for (arma::uword k = 0; k < scn.dims.K; ++k)
    {
        CHECK(serial.mean[k] == threaded.mean[k]);
        CHECK(serial.stderr_of_mean[k] == threaded.stderr_of_mean[k]);
        CHECK(serial.ratio_of_means[k] == threaded.ratio_of_means[k]);
    }
}

TEST_CASE("empirical covariance without IRSs is the direct-link identity")
{
    const DeploymentScenario scn = tiny_scenario();
    McConfig cfg;
    cfg.trials = 4000;
    cfg.seed = 13;
    const AssociationMatrix no_irs(scn.dims.K, 0);
    const arma::cx_mat cov = mc_correlation(scn, no_irs, 0, cfg);

    CHECK(arma::norm(cov - cov.t(), "fro") < 1e-14 * arma::norm(cov, "fro"));
    const double beta_d = scn.beta_d[0];
    const double tol = 4.0 * beta_d / std::sqrt((double)cfg.trials);
    for (arma::uword i = 0; i < scn.dims.M; ++i)
        for (arma::uword j = 0; j < scn.dims.M; ++j)
        {
            const std::complex<double> expect = (i == j) ? std::complex<double>(beta_d, 0.0) : 0.0;
            CHECK(std::abs(cov(i, j) - expect) < tol);
        }
}

TEST_CASE("tuning an IRS to a user never hurts that user's sampled channel gain")
{
    const DeploymentScenario scn = tiny_scenario();
    const auto los = los_channels(scn);
    const arma::uword k = 1, l = 0;
    const arma::uword T = 200;

    double tuned_sum = 0.0, random_sum = 0.0;
    RngStream phase_rng(777, 0, 0);
    for (arma::uword t = 0; t < T; ++t)
    {
        const ChannelSet set = draw_channel_set(scn, 31, t);
        const arma::cx_vec tuned_v =
            optimal_reflect_vector(set.h_2[l][k], los[l].b, los[l].a, set.h_d[k], k).v;
        const arma::cx_vec random_v = testing::random_phases(scn.dims.N(), phase_rng);
        const arma::cx_mat H0 = cascaded_channel(los[l], set.h_2[l][k]);
        tuned_sum += testing::single_irs_gain(set.h_d[k], H0, tuned_v);
        random_sum += testing::single_irs_gain(set.h_d[k], H0, random_v);
    }
    CHECK(tuned_sum / T > random_sum / T);
}

TEST_CASE("MRT precoders with analytic normalizers have unit mean square norm")
{
    const DeploymentScenario scn = tiny_scenario();
    const auto los = los_channels(scn);
    const AssociationMatrix assoc = nearest_rule(scn);
    const arma::vec norms = normalizers_for(scn, assoc);
    const arma::uword T = 10000, k = 0;

    double acc = 0.0;
    for (arma::uword t = 0; t < T; ++t)
    {
        const ChannelSet set = draw_channel_set(scn, 41, t);
        std::vector<arma::cx_vec> v;
        std::vector<arma::cx_mat> cascades;
        for (arma::uword l = 0; l < scn.dims.L; ++l)
        {
            const arma::uword tuned = assoc.user_of(l);
            v.push_back(optimal_reflect_vector(set.h_2[l][tuned], los[l].b, los[l].a, set.h_d[tuned], tuned).v);
            cascades.push_back(cascaded_channel(los[l], set.h_2[l][k]));
        }
        const arma::cx_vec h = effective_channel(set.h_d[k], cascades, v);
        const Precoder precoder = mrt_precoders({h}, arma::vec{norms[k]});
        acc += std::norm(arma::norm(precoder.f[0]));
    }
    CHECK(acc / T == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("ratio-of-means stays close to the per-trial mean in the noise-limited regime")
{
    const DeploymentScenario scn = tiny_scenario();
    const AssociationMatrix assoc = nearest_rule(scn);
    const PowerAllocation pow = flat_power(scn);
    McConfig cfg;
    cfg.trials = 3000;
    cfg.seed = 20;
    const McEstimate est = mc_average_sinr(scn, assoc, pow, cfg);
    for (arma::uword k = 0; k < scn.dims.K; ++k)
        CHECK(std::abs(est.mean[k] - est.ratio_of_means[k]) / est.mean[k] < 0.10);
}
