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

#include "irsim/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "irsim/analytic.hpp"
#include "parallel.hpp"

namespace irsim
{

void McConfig::validate() const
{
    if (trials == 0)
        throw std::invalid_argument("McConfig: need at least one trial.");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("McConfig: confidence must lie in (0, 1).");
}

double normal_quantile_two_sided(double confidence)
{
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("normal_quantile_two_sided: confidence must lie in (0, 1).");
    const double p = 0.5 * (1.0 + confidence);

    // Acklam's rational approximation of the inverse normal CDF (~1e-9 absolute).
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                               1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                               6.680131188771972e+01,  -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                               -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                               3.754408661907416e+00};
    const double p_low = 0.02425;
    double q, r;
    if (p < p_low)
    {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low)
    {
        q = p - 0.5;
        r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

namespace
{

// h_d + sum_l H1_l diag(h2_l) v_l through the rank-one structure of H1:
// H1 diag(h2) v = a * (sqrt(beta_1) * b^H (h2 o v)).
arma::cx_vec effective_channel_rank1(const arma::cx_vec& h_d, const std::vector<LosChannel>& los,
                                     const std::vector<const arma::cx_vec*>& h2,
                                     const std::vector<arma::cx_vec>& v)
{
    arma::cx_vec h = h_d;
    for (std::size_t l = 0; l < los.size(); ++l)
    {
        const std::complex<double> s =
            std::sqrt(los[l].beta_1) * arma::cdot(los[l].b, (*h2[l]) % v[l]);
        h += s * los[l].a;
    }
    return h;
}

arma::vec analytic_normalizers(const DeploymentScenario& scn, const AssociationMatrix& assoc,
                               const std::vector<LosChannel>& los)
{
    arma::vec tr(scn.dims.K);
    for (arma::uword k = 0; k < scn.dims.K; ++k)
        tr[k] = mean_sq_gain(scn, k, assoc.row_for_user(k), los);
    return tr;
}

struct TrialBuffers
{
    arma::mat gamma;       // trials x K
    arma::mat numerator;   // trials x K
    arma::mat denominator; // trials x K
};

TrialBuffers run_trials(const DeploymentScenario& scn, const AssociationMatrix& assoc,
                        const PowerAllocation& pow, const McConfig& cfg,
                        const std::vector<LosChannel>& los, const arma::vec& normalizers)
{
    const arma::uword K = scn.dims.K;
    TrialBuffers buf;
    buf.gamma.set_size(cfg.trials, K);
    buf.numerator.set_size(cfg.trials, K);
    buf.denominator.set_size(cfg.trials, K);

    detail::parallel_chunks(cfg.trials, [&](std::uint64_t begin, std::uint64_t end, unsigned)
    {
        for (std::uint64_t t = begin; t < end; ++t)
        {
            const ChannelSet set = draw_channel_set(scn, cfg.seed, t, assoc.n_irs());
            const SinrSample sample =
                instantaneous_sinr_split(set, los, assoc, pow, normalizers, scn.sigma2);
            buf.gamma.row(t) = sample.gamma.t();
            buf.numerator.row(t) = sample.numerator.t();
            buf.denominator.row(t) = sample.denominator.t();
        }
    });
    return buf;
}

double column_mean(const arma::mat& m, arma::uword col)
{
    detail::CompensatedSum sum;
    for (arma::uword t = 0; t < m.n_rows; ++t)
        sum.add(m(t, col));
    return sum.value() / (double)m.n_rows;
}

} // namespace

SinrSample instantaneous_sinr_split(const ChannelSet& channels, const std::vector<LosChannel>& los,
                                    const AssociationMatrix& assoc, const PowerAllocation& pow,
                                    const arma::vec& normalizers, double sigma2)
{
    const arma::uword K = assoc.n_users(), L = assoc.n_irs();
    if (channels.h_d.size() != K || channels.h_2.size() != L || los.size() != L)
        throw std::invalid_argument("instantaneous_sinr: channel set does not match the association.");
    if (pow.p.n_elem != K || normalizers.n_elem != K)
        throw std::invalid_argument("instantaneous_sinr: power/normalizer length mismatch.");
    assoc.validate();

    // Reflect vector of each IRS, tuned to its associated user's fading.
    std::vector<arma::cx_vec> v;
    v.reserve(L);
    for (arma::uword l = 0; l < L; ++l)
    {
        const arma::uword tuned = assoc.user_of(l);
        v.push_back(
            optimal_reflect_vector(channels.h_2[l][tuned], los[l].b, los[l].a, channels.h_d[tuned], tuned).v);
    }

    std::vector<arma::cx_vec> h(K);
    std::vector<const arma::cx_vec*> h2(L);
    for (arma::uword k = 0; k < K; ++k)
    {
        for (arma::uword l = 0; l < L; ++l)
            h2[l] = &channels.h_2[l][k];
        h[k] = effective_channel_rank1(channels.h_d[k], los, h2, v);
    }

    const Precoder precoder = mrt_precoders(h, normalizers);

    SinrSample out;
    out.gamma.set_size(K);
    out.numerator.set_size(K);
    out.denominator.set_size(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        const double signal = std::norm(arma::cdot(h[k], precoder.f[k]));
        double interference = 0.0;
        for (arma::uword t = 0; t < K; ++t)
            if (t != k)
                interference += pow.p[t] * std::norm(arma::cdot(h[k], precoder.f[t]));
        out.numerator[k] = pow.p[k] * signal;
        out.denominator[k] = interference + sigma2;
        out.gamma[k] = out.numerator[k] / out.denominator[k];
    }
    return out;
}

arma::vec instantaneous_sinr(const ChannelSet& channels, const std::vector<LosChannel>& los,
                             const AssociationMatrix& assoc, const PowerAllocation& pow,
                             const arma::vec& normalizers, double sigma2)
{
    return instantaneous_sinr_split(channels, los, assoc, pow, normalizers, sigma2).gamma;
}

McEstimate mc_average_sinr(const DeploymentScenario& scn, const AssociationMatrix& assoc,
                           const PowerAllocation& pow, const McConfig& cfg)
{
    cfg.validate();
    if (assoc.n_irs() > scn.dims.L || assoc.n_users() != scn.dims.K)
        throw std::invalid_argument("mc_average_sinr: association does not match the scenario.");
    const arma::uword K = scn.dims.K;
    std::vector<LosChannel> los = los_channels(scn);
    los.resize(assoc.n_irs()); // an association over fewer IRSs runs the sub-deployment
    const arma::vec normalizers = analytic_normalizers(scn, assoc, los);

    const TrialBuffers buf = run_trials(scn, assoc, pow, cfg, los, normalizers);

    McEstimate est;
    est.trials_used = cfg.trials;
    est.mean.set_size(K);
    est.stderr_of_mean.set_size(K);
    est.ci_halfwidth.set_size(K);
    est.ratio_of_means.set_size(K);
    const double z = normal_quantile_two_sided(cfg.confidence);

    for (arma::uword k = 0; k < K; ++k)
    {
        est.mean[k] = column_mean(buf.gamma, k);
        est.ratio_of_means[k] = column_mean(buf.numerator, k) / column_mean(buf.denominator, k);
        if (cfg.trials > 1)
        {
            detail::CompensatedSum sq;
            for (arma::uword t = 0; t < cfg.trials; ++t)
            {
                const double d = buf.gamma(t, k) - est.mean[k];
                sq.add(d * d);
            }
            const double variance = sq.value() / (double)(cfg.trials - 1);
            est.stderr_of_mean[k] = std::sqrt(variance / (double)cfg.trials);
        }
        else
        {
            est.stderr_of_mean[k] = 0.0;
        }
        est.ci_halfwidth[k] = z * est.stderr_of_mean[k];
    }
    if (cfg.keep_trials)
        est.per_trial = buf.gamma;
    return est;
}

arma::cx_mat mc_correlation(const DeploymentScenario& scn, const AssociationMatrix& assoc,
                            arma::uword user, const McConfig& cfg)
{
    cfg.validate();
    if (user >= scn.dims.K)
        throw std::invalid_argument("mc_correlation: user index out of range.");
    if (assoc.n_irs() > scn.dims.L || assoc.n_users() != scn.dims.K)
        throw std::invalid_argument("mc_correlation: association does not match the scenario.");
    const arma::uword L = assoc.n_irs(), M = scn.dims.M;
    std::vector<LosChannel> los = los_channels(scn);
    los.resize(L);

    arma::cx_mat per_trial(M, cfg.trials);
    detail::parallel_chunks(cfg.trials, [&](std::uint64_t begin, std::uint64_t end, unsigned)
    {
        std::vector<arma::cx_vec> v(L);
        std::vector<const arma::cx_vec*> h2(L);
        for (std::uint64_t t = begin; t < end; ++t)
        {
            const ChannelSet set = draw_channel_set(scn, cfg.seed, t, L);
            for (arma::uword l = 0; l < L; ++l)
            {
                const arma::uword tuned = assoc.user_of(l);
                v[l] = optimal_reflect_vector(set.h_2[l][tuned], los[l].b, los[l].a, set.h_d[tuned], tuned).v;
                h2[l] = &set.h_2[l][user];
            }
            per_trial.col(t) = effective_channel_rank1(set.h_d[user], los, h2, v);
        }
    });

    // Outer products accumulated in trial order: deterministic for any schedule.
    arma::cx_mat acc(M, M, arma::fill::zeros);
    for (arma::uword t = 0; t < cfg.trials; ++t)
        acc += per_trial.col(t) * per_trial.col(t).t();
    return acc / (double)cfg.trials;
}

} // namespace irsim
