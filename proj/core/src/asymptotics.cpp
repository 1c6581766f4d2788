#include "macri/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "macri/normal.hpp"
#include "macri/posterior.hpp"
#include "macri/rng.hpp"
#include "quadrature.hpp"

namespace macri {

namespace {

void check_regime(const AsymptoticRegime& regime, double n) {
    if (!(regime.b > 0.0) || !(regime.k > 0.0) || !std::isfinite(regime.a)) {
        throw std::domain_error("AsymptoticRegime: requires finite a, b > 0, k > 0");
    }
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error("AsymptoticRegime: n must be a positive real");
    }
}

void check_continuous_prior(const ModelPair& pair) {
    if (pair.point_null()) {
        throw std::domain_error(
            "appendix content: prior0 is a point mass, so the prior is not continuous and "
            "the Phi(-k) limit theorem does not apply");
    }
}

double mixture_prior_continuous(const ModelPair& pair, double theta) {
    return mixture_prior_density(pair, theta).continuous;
}

}  // namespace

double limit_posterior_model_prob_m1(const ModelPair& pair) {
    if (pair.point_null()) return 0.0;
    double g0 = std::get<ZeroMeanNormalPrior>(pair.prior0()).variance;
    double g1 = pair.prior1().variance;
    double prior_odds_01 = pair.prior_prob_m0() / pair.prior_prob_m1();
    return 1.0 / (1.0 + prior_odds_01 * std::sqrt(g1 / g0));
}

double appendix_content_closed_form(const ModelPair& pair, const AsymptoticRegime& regime,
                                    double n) {
    check_regime(regime, n);
    check_continuous_prior(pair);
    double sqrt_n = std::sqrt(n);
    DataSummary data = DataSummary::from_ybar(n, regime.a + regime.b / sqrt_n);
    double t = regime.a + (regime.b - regime.k) / sqrt_n;
    return posterior_cdf(model_averaged_posterior(pair, data), t, /*closed=*/false);
}

double appendix_content_quadrature(const ModelPair& pair, const AsymptoticRegime& regime,
                                   double n) {
    check_regime(regime, n);
    check_continuous_prior(pair);
    double sqrt_n = std::sqrt(n);
    const auto integrand = [&](double s) {
        return mixture_prior_continuous(pair, regime.a + (regime.b + s) / sqrt_n) *
               normal_pdf(s);
    };
    // The prior factor has scale sqrt(g n) in s, so the standard normal
    // factor controls the tails; |s| = 40 is far past double underflow.
    const double cut = 40.0;
    double upper_num = std::min(-regime.k, cut);
    double numerator =
        (upper_num > -cut) ? detail::integrate_adaptive(integrand, -cut, upper_num) : 0.0;
    double denominator = detail::integrate_adaptive(integrand, -cut, -regime.k) +
                         detail::integrate_adaptive(integrand, -regime.k, 0.0) +
                         detail::integrate_adaptive(integrand, 0.0, cut);
    if (!(denominator > 0.0)) {
        throw std::runtime_error("appendix quadrature: denominator integral vanished");
    }
    return numerator / denominator;
}

double appendix_posterior_content(const ModelPair& pair, const AsymptoticRegime& regime,
                                  double n) {
    double closed_form = appendix_content_closed_form(pair, regime, n);
    double quadrature = appendix_content_quadrature(pair, regime, n);
    if (std::fabs(closed_form - quadrature) > 1e-6) {
        throw std::runtime_error("appendix content: closed form " + std::to_string(closed_form) +
                                 " and quadrature " + std::to_string(quadrature) +
                                 " disagree beyond 1e-6");
    }
    return closed_form;
}

RatioEstimate appendix_content_monte_carlo(const ModelPair& pair, const AsymptoticRegime& regime,
                                           double n, std::uint64_t draws, std::uint64_t seed) {
    check_regime(regime, n);
    check_continuous_prior(pair);
    if (draws < 1000) {
        throw std::invalid_argument("appendix Monte Carlo: need at least 1000 draws");
    }
    double sqrt_n = std::sqrt(n);
    CounterRng rng(seed, /*stream=*/0);
    double sum_w = 0.0;
    double sum_iw = 0.0;
    double sum_w2 = 0.0;
    double sum_iw2 = 0.0;
    double sum_iww = 0.0;
    for (std::uint64_t i = 0; i < draws; ++i) {
        double s = rng.next_normal();
        double w = mixture_prior_continuous(pair, regime.a + (regime.b + s) / sqrt_n);
        double iw = (s < -regime.k) ? w : 0.0;
        sum_w += w;
        sum_iw += iw;
        sum_w2 += w * w;
        sum_iw2 += iw * iw;
        sum_iww += iw * w;
    }
    double m = static_cast<double>(draws);
    double ratio = sum_iw / sum_w;
    // Delta-method standard error of the ratio estimator.
    double mean_w = sum_w / m;
    double var_num = sum_iw2 / m - (sum_iw / m) * (sum_iw / m);
    double var_den = sum_w2 / m - mean_w * mean_w;
    double cov = sum_iww / m - (sum_iw / m) * mean_w;
    double var_ratio =
        (var_num - 2.0 * ratio * cov + ratio * ratio * var_den) / (mean_w * mean_w * m);
    double se = var_ratio > 0.0 ? std::sqrt(var_ratio) : 0.0;
    return RatioEstimate{ratio, se, draws, seed};
}

}  // namespace macri
