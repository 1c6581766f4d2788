// Frequentist confidence intervals, conventional credible intervals on the
// model-averaged posterior, and the stochastic credible intervals that take
// over when the target level falls inside the CDF jump.
//
// "Undefined" outcomes are ordinary values carrying the incredibility
// interval and the nearest achievable levels; the stochastic constructors
// are deterministic and a realization draws from a caller-supplied
// CounterRng.  An interval boundary "open" flag stands in for the paper
// convention of a bound displaced by an arbitrarily small epsilon: the
// probability content of an open bound at the atom is exact, a finite
// epsilon would not be.
#pragma once

#include <optional>
#include <variant>

#include "macri/posterior.hpp"
#include "macri/rng.hpp"

namespace macri {

struct OneSidedInterval {
    double lower;
    bool lower_open;  // false: [lower, inf); true: (lower, inf)
    double level;     // 1 - alpha
};

enum class Degenerate { No, SinglePoint, Empty };

struct TwoSidedInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_open = false;  // default [lower, upper)
    bool upper_open = true;
    double level = 0.0;
    Degenerate degenerate = Degenerate::No;
};

// Two-point distribution over one-sided boundaries: value_a with
// probability prob_a (= gamma), else value_b.  Mixing is chosen so the
// expected strict-CDF content at the boundary equals alpha exactly.
struct StochasticBound {
    double value_a;
    bool value_a_open;
    double value_b;
    bool value_b_open;
    double prob_a;  // gamma
    double alpha;
};

// Two-point distribution over degenerate two-sided intervals: the single
// point {point} with probability prob_point (= psi), else the empty set.
struct StochasticTwoSided {
    double point;
    double prob_point;  // psi
    double alpha;
};

struct NearestLevels {
    double level_closed;  // 1 - Pr(theta < theta0), attained by [theta0, inf)
    double level_open;    // 1 - Pr(theta <= theta0), attained by (theta0, inf)
};

struct UndefinedOneSided {
    IncredibilityInterval jump;
    NearestLevels nearest;
};

using OneSidedCredible = std::variant<OneSidedInterval, UndefinedOneSided>;

struct TailReport {
    double target;  // requested strict-CDF level for this tail
    QuantileResult quantile;
    // Present when this tail's level is inside the jump: the per-tail
    // stochastic boundary consistent with the one-sided construction.
    std::optional<StochasticBound> stochastic;
};

struct UndefinedTwoSided {
    TailReport lower_tail;
    TailReport upper_tail;
    IncredibilityInterval jump;
    // Present when both tail levels are inside the jump.
    std::optional<StochasticTwoSided> point_or_empty;
};

using TwoSidedCredible = std::variant<TwoSidedInterval, UndefinedTwoSided>;

// Lower bound of the upper one-sided (1-A) confidence interval:
// ybar - Q(1-A)/sqrt(n).
double frequentist_ci_lower(const DataSummary& data, double a_level);

OneSidedCredible credible_one_sided(const ModelAveragedPosterior& post, double alpha);

// Equal-tailed interval from the alpha/2 and 1-alpha/2 quantiles.
TwoSidedCredible credible_two_sided(const ModelAveragedPosterior& post, double alpha);

// Requires jump.lower <= alpha <= jump.upper; throws std::domain_error
// pointing at credible_one_sided otherwise.
StochasticBound stochastic_bound(const ModelAveragedPosterior& post, double alpha);

// Requires both alpha/2 and 1-alpha/2 inside the jump; throws a
// std::domain_error naming the offending tail otherwise.  psi is validated
// to lie in [0,1] rather than assumed.
StochasticTwoSided stochastic_two_sided(const ModelAveragedPosterior& post, double alpha);

OneSidedInterval realize(const StochasticBound& bound, CounterRng& rng);
TwoSidedInterval realize(const StochasticTwoSided& interval, CounterRng& rng);

}  // namespace macri
