#include "macri/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "macri/normal.hpp"

namespace macri {

double NormalComponent::sd() const { return std::sqrt(variance); }

double ModelAveragedPosterior::atom_location() const {
    if (!atom_location_) {
        throw std::logic_error("ModelAveragedPosterior: no atom in a continuous posterior");
    }
    return *atom_location_;
}

double ModelAveragedPosterior::reference_location() const {
    return atom_location_.value_or(0.0);
}

namespace {

NormalComponent conjugate_component(const DataSummary& data, double g) {
    double n = data.n();
    double z = data.z();
    return NormalComponent{z * std::sqrt(n) * g / (1.0 + n * g), g / (1.0 + n * g)};
}

}  // namespace

BayesFactorResult bayes_factor_01(const ModelPair& pair, const DataSummary& data) {
    double n = data.n();
    double z = data.z();
    double g1 = pair.prior1().variance;
    double log_bf;
    if (const auto* normal0 = std::get_if<ZeroMeanNormalPrior>(&pair.prior0())) {
        double g0 = normal0->variance;
        log_bf = 0.5 * (std::log1p(n * g1) - std::log1p(n * g0)) +
                 (g0 - g1) * n * z * z / (2.0 * (1.0 + n * g0) * (1.0 + n * g1));
    } else {
        // Marginal likelihood of the point mass at theta0 against the slab:
        // log N(ybar; theta0, 1/n) - log N(ybar; 0, g1 + 1/n).
        double theta0 = std::get<PointMassPrior>(pair.prior0()).location;
        double shifted = z - theta0 * std::sqrt(n);
        log_bf = 0.5 * std::log1p(n * g1) - 0.5 * shifted * shifted +
                 0.5 * z * z / (1.0 + n * g1);
    }
    return BayesFactorResult{log_bf, std::exp(log_bf)};
}

PosteriorModelProbs posterior_model_probs(const ModelPair& pair, const DataSummary& data) {
    double log_bf = bayes_factor_01(pair, data).log_bf01;
    double prior_odds_01 = pair.prior_prob_m0() / pair.prior_prob_m1();
    // Each probability from its own logistic expression keeps full relative
    // precision near 0 and near 1.
    double pm0 = 1.0 / (1.0 + std::exp(-log_bf) / prior_odds_01);
    double pm1 = 1.0 / (1.0 + std::exp(log_bf) * prior_odds_01);
    return PosteriorModelProbs{pm0, pm1};
}

ModelAveragedPosterior model_averaged_posterior(const ModelPair& pair, const DataSummary& data) {
    ModelAveragedPosterior post;
    post.weights_ = posterior_model_probs(pair, data);
    post.component1_ = conjugate_component(data, pair.prior1().variance);
    if (const auto* normal0 = std::get_if<ZeroMeanNormalPrior>(&pair.prior0())) {
        post.component0_ = conjugate_component(data, normal0->variance);
    } else {
        post.atom_location_ = std::get<PointMassPrior>(pair.prior0()).location;
    }
    return post;
}

double posterior_cdf(const ModelAveragedPosterior& post, double t, bool closed) {
    if (std::isnan(t)) throw std::domain_error("posterior_cdf: t is NaN");
    const auto& w = post.weights();
    double cdf = w.pm1 * normal_cdf(t, post.component1().mean, post.component1().variance);
    if (post.component0()) {
        cdf += w.pm0 * normal_cdf(t, post.component0()->mean, post.component0()->variance);
    } else {
        double loc = post.atom_location();
        bool counted = closed ? (t >= loc) : (t > loc);
        cdf += w.pm0 * (counted ? 1.0 : 0.0);
    }
    return cdf;
}

double posterior_pdf(const ModelAveragedPosterior& post, double t) {
    const auto& w = post.weights();
    double density = w.pm1 * normal_pdf(t, post.component1().mean, post.component1().variance);
    if (post.component0()) {
        density += w.pm0 * normal_pdf(t, post.component0()->mean, post.component0()->variance);
    }
    return density;
}

IncredibilityInterval incredibility_interval(const ModelAveragedPosterior& post) {
    double loc = post.reference_location();
    double lower = posterior_cdf(post, loc, /*closed=*/false);
    double upper = posterior_cdf(post, loc, /*closed=*/true);
    return IncredibilityInterval{lower, upper, loc};
}

namespace {

// Root of posterior_cdf(t, open) = alpha in the continuous region:
// bracketed bisection with Newton steps clamped to the bracket, so the
// result holds |cdf - alpha| <= 1e-12 at any posterior scale.
double solve_quantile(const ModelAveragedPosterior& post, double alpha) {
    const auto cdf = [&](double t) { return posterior_cdf(post, t, false); };

    // Initial bracket: 12 sd around the wider continuous component.
    double lo;
    double hi;
    {
        NormalComponent wide = post.component1();
        if (post.component0() && post.component0()->variance > wide.variance) {
            wide = *post.component0();
        }
        double spread = 12.0 * wide.sd();
        lo = wide.mean - spread;
        hi = wide.mean + spread;
        if (post.component0()) {
            lo = std::min(lo, post.component0()->mean - 12.0 * post.component0()->sd());
            hi = std::max(hi, post.component0()->mean + 12.0 * post.component0()->sd());
        }
        if (post.has_atom()) {
            lo = std::min(lo, post.atom_location() - spread);
            hi = std::max(hi, post.atom_location() + spread);
        }
    }
    double width = hi - lo;
    int widen = 0;
    while (cdf(lo) > alpha || cdf(hi) < alpha) {
        width *= 2.0;
        lo -= width;
        hi += width;
        if (++widen > 200) {
            throw std::runtime_error("posterior_quantile: failed to bracket level " +
                                     std::to_string(alpha));
        }
    }

    double flo = cdf(lo) - alpha;
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double ft = cdf(t) - alpha;
        if (std::fabs(ft) <= 1e-13) break;
        if ((ft < 0.0) == (flo < 0.0)) {
            lo = t;
            flo = ft;
        } else {
            hi = t;
        }
        double dens = posterior_pdf(post, t);
        double next = (dens > 0.0) ? t - ft / dens : t;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // Newton left the bracket
        if (next == t) next = 0.5 * (lo + hi);
        t = next;
        if (hi - lo <= 1e-12 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)))) {
            break;
        }
    }
    return t;
}

}  // namespace

QuantileResult posterior_quantile(const ModelAveragedPosterior& post, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("posterior_quantile: alpha must be in (0,1), got " +
                                std::to_string(alpha));
    }
    QuantileResult result;
    if (post.has_atom()) {
        IncredibilityInterval jump = incredibility_interval(post);
        result.jump = jump;
        if (alpha == jump.lower) {
            result.kind = QuantileResult::Kind::AtomBoundary;
            result.value = jump.atom_location;
            result.open = false;  // [theta0, inf) carries exactly 1 - alpha
            return result;
        }
        if (alpha == jump.upper) {
            result.kind = QuantileResult::Kind::AtomBoundary;
            result.value = jump.atom_location;
            result.open = true;  // (theta0, inf) carries exactly 1 - alpha
            return result;
        }
        if (alpha > jump.lower && alpha < jump.upper) {
            result.kind = QuantileResult::Kind::InsideJump;
            return result;
        }
    }
    result.kind = QuantileResult::Kind::Exact;
    result.value = solve_quantile(post, alpha);
    return result;
}

}  // namespace macri
