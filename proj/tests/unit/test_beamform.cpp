#include <doctest.h>

#include <complex>

#include "irsim/beamform.hpp"
#include "irsim/channel.hpp"
#include "irsim/rng.hpp"
#include "irsim/units.hpp"
#include "oracles.hpp"

using namespace irsim;

namespace
{

ArrayGeometry half_wave()
{
    ArrayGeometry g;
    g.lambda_c = 0.12;
    g.d_bs = 0.06;
    g.d_irs = 0.06;
    return g;
}

} // namespace

TEST_CASE("already-aligned inputs give the all-ones reflect vector")
{
    const arma::cx_vec b(4, arma::fill::ones);
    const arma::cx_vec h2{1.0, 2.0, 0.5, 3.0};
    const arma::cx_vec a{1.0, 1.0};
    const ReflectVector rv = optimal_reflect_vector(h2, b, a, a);
    for (const auto& e : rv.v)
        CHECK(std::abs(e - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK_FALSE(rv.degenerate);
}

TEST_CASE("single-element reflect vector is unit-modulus")
{
    RngStream rng(4, 0, 0);
    const arma::cx_vec h2 = sample_cgauss(1, 1.0, rng);
    const arma::cx_vec b = sample_cgauss(1, 1.0, rng);
    const arma::cx_vec a = sample_cgauss(2, 1.0, rng);
    const arma::cx_vec h_d = sample_cgauss(2, 1.0, rng);
    const ReflectVector rv = optimal_reflect_vector(h2, b, a, h_d);
    REQUIRE(rv.v.n_elem == 1);
    CHECK(std::abs(std::abs(rv.v[0]) - 1.0) < 1e-12);
}

TEST_CASE("optimal reflect vector beats a 16-level phase grid at N <= 4")
{
    const ArrayGeometry g = half_wave();
    for (std::uint64_t seed : {1ull, 2ull, 3ull})
    {
        RngStream rng(seed, 0, 0);
        const arma::uword M = 3, N = 4;
        const LosChannel los =
            make_los_channel(0.7, ula_steering(M, 0.9, g), upa_steering(2, 2, pi / 2, 1.7, g));
        const arma::cx_vec h2 = sample_cgauss(N, 1.3, rng);
        const arma::cx_vec h_d = sample_cgauss(M, 0.8, rng);
        const arma::cx_mat H0 = cascaded_channel(los, h2);

        const ReflectVector rv = optimal_reflect_vector(h2, los.b, los.a, h_d);
        const double optimal = testing::single_irs_gain(h_d, H0, rv.v);
        const double grid_best = testing::grid_search_gain(h_d, H0, 16);
        CHECK(optimal >= grid_best * (1.0 - 1e-12));
    }
}

TEST_CASE("optimal reflect vector dominates ten thousand random phase vectors")
{
    const ArrayGeometry g = half_wave();
    RngStream rng(99, 0, 0);
    const arma::uword M = 4, N = 4;
    const LosChannel los = make_los_channel(1.1, ula_steering(M, 2.2, g), upa_steering(4, 1, pi / 2, 0.4, g));
    const arma::cx_vec h2 = sample_cgauss(N, 1.0, rng);
    const arma::cx_vec h_d = sample_cgauss(M, 1.0, rng);
    const arma::cx_mat H0 = cascaded_channel(los, h2);

    // objective of (P0'): 2<v, H0^H h_d> + ||v^H H0^H||^2
    const auto objective = [&](const arma::cx_vec& v)
    {
        const arma::cx_vec target = H0.t() * h_d;
        const arma::cx_vec column = H0 * v; // (v^H H0^H)^H
        return 2.0 * std::real(arma::cdot(v, target)) + std::norm(arma::norm(column));
    };

    const ReflectVector rv = optimal_reflect_vector(h2, los.b, los.a, h_d);
    const double best = objective(rv.v);
    for (int i = 0; i < 10000; ++i)
        CHECK(best >= objective(testing::random_phases(N, rng)) * (1.0 - 1e-12));
}

TEST_CASE("quadratic term at the optimum reaches its closed-form maximum")
{
    const ArrayGeometry g = half_wave();
    RngStream rng(12, 0, 0);
    const arma::uword M = 5, N = 4;
    // beta_1 = 1 first: ||v^H H0^H||^2 == ||a||^2 (sum |h2_n| |b_n|)^2
    for (double beta_1 : {1.0, 0.37})
    {
        const LosChannel los =
            make_los_channel(beta_1, ula_steering(M, 1.0, g), upa_steering(2, 2, pi / 2, 0.8, g));
        const arma::cx_vec h2 = sample_cgauss(N, 2.0, rng);
        const arma::cx_vec h_d = sample_cgauss(M, 1.0, rng);
        const ReflectVector rv = optimal_reflect_vector(h2, los.b, los.a, h_d);

        const arma::cx_vec column = cascaded_channel(los, h2) * rv.v; // (v^H H0^H)^H
        const double got = std::norm(arma::norm(column));
        const double closed_form =
            beta_1 * std::norm(arma::norm(los.a)) * std::pow(arma::accu(arma::abs(h2) % arma::abs(los.b)), 2);
        CHECK(got == doctest::Approx(closed_form).epsilon(1e-10));
    }
}

TEST_CASE("reflect phases ignore positive scaling of h2 and h_d")
{
    const ArrayGeometry g = half_wave();
    RngStream rng(31, 0, 0);
    const LosChannel los = make_los_channel(0.9, ula_steering(3, 0.2, g), upa_steering(2, 2, pi / 2, 1.0, g));
    const arma::cx_vec h2 = sample_cgauss(4, 1.0, rng);
    const arma::cx_vec h_d = sample_cgauss(3, 1.0, rng);
    const ReflectVector base = optimal_reflect_vector(h2, los.b, los.a, h_d);
    const ReflectVector scaled = optimal_reflect_vector(3.7 * h2, los.b, los.a, 0.5 * h_d);
    CHECK(arma::norm(base.v - scaled.v) < 1e-12);
}

TEST_CASE("orthogonal direct channel flags the degenerate global phase")
{
    const arma::cx_vec a{1.0, 1.0};
    const arma::cx_vec h_d{1.0, -1.0}; // a^H h_d = 0
    const arma::cx_vec b{1.0, 1.0};
    const arma::cx_vec h2{1.0, 2.0};
    const ReflectVector rv = optimal_reflect_vector(h2, b, a, h_d);
    CHECK(rv.degenerate);
    for (const auto& e : rv.v)
        CHECK(std::abs(std::abs(e) - 1.0) < 1e-12);
}

TEST_CASE("MRT precoders normalize, scale linearly, and reject zero channels")
{
    arma::cx_vec h{std::complex<double>(3.0, 0.0), std::complex<double>(0.0, 4.0)};
    const double norm_sq = 25.0;
    const Precoder p = mrt_precoders({h}, arma::vec{norm_sq});
    CHECK(arma::norm(p.f[0]) == doctest::Approx(1.0).epsilon(1e-14));

    const Precoder doubled = mrt_precoders({2.0 * h}, arma::vec{norm_sq});
    CHECK(arma::norm(doubled.f[0] - 2.0 * p.f[0]) < 1e-14);

    CHECK_THROWS_AS(mrt_precoders({arma::cx_vec(2, arma::fill::zeros)}, arma::vec{1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mrt_precoders({h}, arma::vec{0.0}), std::invalid_argument);
}

TEST_CASE("equal power split and the derived constants")
{
    const arma::vec tr{2.0, 4.0, 8.0, 16.0};
    const PowerAllocation pow = equal_power(1.0, 4, tr);
    for (arma::uword k = 0; k < 4; ++k)
    {
        CHECK(pow.p[k] == doctest::Approx(0.25));
        CHECK(pow.c[k] * tr[k] == doctest::Approx(pow.p[k]).epsilon(1e-15));
    }
    const PowerAllocation single = equal_power(2.0, 1, arma::vec{5.0});
    CHECK(single.p[0] == doctest::Approx(2.0));
    CHECK_THROWS_AS(equal_power(0.0, 2, arma::vec{1.0, 1.0}), std::invalid_argument);
}
