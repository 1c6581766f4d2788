#include "macri/intervals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "macri/normal.hpp"

namespace macri {

double frequentist_ci_lower(const DataSummary& data, double a_level) {
    if (!(a_level > 0.0 && a_level < 1.0)) {
        throw std::domain_error("frequentist_ci_lower: A must be in (0,1), got " +
                                std::to_string(a_level));
    }
    return data.ybar() - normal_quantile(1.0 - a_level) / std::sqrt(data.n());
}

OneSidedCredible credible_one_sided(const ModelAveragedPosterior& post, double alpha) {
    QuantileResult q = posterior_quantile(post, alpha);
    switch (q.kind) {
        case QuantileResult::Kind::Exact:
            return OneSidedInterval{q.value, false, 1.0 - alpha};
        case QuantileResult::Kind::AtomBoundary:
            return OneSidedInterval{q.value, q.open, 1.0 - alpha};
        case QuantileResult::Kind::InsideJump:
        default:
            return UndefinedOneSided{q.jump, NearestLevels{1.0 - q.jump.lower, 1.0 - q.jump.upper}};
    }
}

namespace {

TailReport resolve_tail(const ModelAveragedPosterior& post, double level) {
    TailReport tail{level, posterior_quantile(post, level), std::nullopt};
    if (tail.quantile.kind == QuantileResult::Kind::InsideJump) {
        tail.stochastic = stochastic_bound(post, level);
    }
    return tail;
}

}  // namespace

TwoSidedCredible credible_two_sided(const ModelAveragedPosterior& post, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("credible_two_sided: alpha must be in (0,1), got " +
                                std::to_string(alpha));
    }
    TailReport lower = resolve_tail(post, alpha / 2.0);
    TailReport upper = resolve_tail(post, 1.0 - alpha / 2.0);
    if (lower.quantile.exists() && upper.quantile.exists()) {
        TwoSidedInterval interval;
        interval.lower = lower.quantile.value;
        interval.upper = upper.quantile.value;
        interval.level = 1.0 - alpha;
        // [lower, upper) by default; an AtomBoundary tail dictates its own
        // boundary semantics so the interval content stays exactly 1-alpha.
        if (lower.quantile.kind == QuantileResult::Kind::AtomBoundary) {
            interval.lower_open = lower.quantile.open;
        }
        if (upper.quantile.kind == QuantileResult::Kind::AtomBoundary) {
            interval.upper_open = !upper.quantile.open;
        }
        return interval;
    }
    UndefinedTwoSided undefined{lower, upper, incredibility_interval(post), std::nullopt};
    if (!lower.quantile.exists() && !upper.quantile.exists()) {
        undefined.point_or_empty = stochastic_two_sided(post, alpha);
    }
    return undefined;
}

StochasticBound stochastic_bound(const ModelAveragedPosterior& post, double alpha) {
    if (!post.has_atom()) {
        throw std::domain_error(
            "stochastic_bound: posterior has no atom; the quantile exists, use "
            "credible_one_sided");
    }
    IncredibilityInterval jump = incredibility_interval(post);
    if (!(alpha >= jump.lower && alpha <= jump.upper)) {
        throw std::domain_error("stochastic_bound: alpha=" + std::to_string(alpha) +
                                " lies outside the incredibility interval [" +
                                std::to_string(jump.lower) + ", " + std::to_string(jump.upper) +
                                "]; the quantile exists, use credible_one_sided");
    }
    double gamma = (alpha - jump.upper) / (jump.lower - jump.upper);
    return StochasticBound{jump.atom_location, false, jump.atom_location, true, gamma, alpha};
}

StochasticTwoSided stochastic_two_sided(const ModelAveragedPosterior& post, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("stochastic_two_sided: alpha must be in (0,1), got " +
                                std::to_string(alpha));
    }
    if (!post.has_atom()) {
        throw std::domain_error("stochastic_two_sided: posterior has no atom");
    }
    IncredibilityInterval jump = incredibility_interval(post);
    double lo_level = alpha / 2.0;
    double hi_level = 1.0 - alpha / 2.0;
    if (!(lo_level >= jump.lower && lo_level <= jump.upper)) {
        throw std::domain_error("stochastic_two_sided: lower tail level " +
                                std::to_string(lo_level) +
                                " is outside the incredibility interval; only the one-sided "
                                "stochastic bound applies to that tail");
    }
    if (!(hi_level >= jump.lower && hi_level <= jump.upper)) {
        throw std::domain_error("stochastic_two_sided: upper tail level " +
                                std::to_string(hi_level) +
                                " is outside the incredibility interval; only the one-sided "
                                "stochastic bound applies to that tail");
    }
    double atom_mass = post.atom_mass();
    double psi = (atom_mass - alpha) / (2.0 * atom_mass - 1.0);
    if (!(psi >= 0.0 && psi <= 1.0)) {
        throw std::runtime_error("stochastic_two_sided: psi=" + std::to_string(psi) +
                                 " falls outside [0,1]; the two-point construction is not a "
                                 "probability mixture for these inputs");
    }
    return StochasticTwoSided{post.atom_location(), psi, alpha};
}

OneSidedInterval realize(const StochasticBound& bound, CounterRng& rng) {
    bool pick_a = rng.next_bernoulli(bound.prob_a);
    double value = pick_a ? bound.value_a : bound.value_b;
    bool open = pick_a ? bound.value_a_open : bound.value_b_open;
    return OneSidedInterval{value, open, 1.0 - bound.alpha};
}

TwoSidedInterval realize(const StochasticTwoSided& interval, CounterRng& rng) {
    TwoSidedInterval out;
    out.level = 1.0 - interval.alpha;
    if (rng.next_bernoulli(interval.prob_point)) {
        out.lower = out.upper = interval.point;
        out.lower_open = out.upper_open = false;
        out.degenerate = Degenerate::SinglePoint;
    } else {
        out.degenerate = Degenerate::Empty;
        out.lower = out.upper = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

}  // namespace macri
