// Closed-form asymptotic limits and the fixed-p-value regime
// ybar = a + b / sqrt(n): the posterior probability content of the
// confidence interval (ybar - k/sqrt(n), inf), which tends to Phi(-k) as
// n grows for any continuous prior positive at a.
//
// The content is computed three independent ways -- conjugate closed form,
// adaptive quadrature of the standardized expectation ratio, and Monte
// Carlo over S ~ N(0,1) -- so each path cross-checks the others.
#pragma once

#include <cstdint>

#include "macri/model.hpp"

namespace macri {

struct AsymptoticRegime {
    double a;  // null location held fixed
    double b;  // z-offset: ybar = a + b / sqrt(n), b > 0
    double k;  // CI multiplier: lower bound a + (b - k) / sqrt(n), k > 0
};

// lim Pr(M1 | data) as n -> infinity at fixed z.  For two normal priors
// this is prior-odds-weighted sqrt(g0/g1) shrinkage, independent of the
// data; with equal prior odds it reduces to (1 + sqrt(g1/g0))^-1.  For a
// point-null prior0 the limit is 0 (all mass on M0).
double limit_posterior_model_prob_m1(const ModelPair& pair);

// Pr(theta < a + (b-k)/sqrt(n) | ybar = a + b/sqrt(n)).  Closed form,
// cross-checked against the quadrature path to 1e-6 on every call; throws
// std::runtime_error if the two paths disagree, std::domain_error if
// prior0 is a point mass (the limit theorem needs a continuous prior).
double appendix_posterior_content(const ModelPair& pair, const AsymptoticRegime& regime,
                                  double n);

double appendix_content_closed_form(const ModelPair& pair, const AsymptoticRegime& regime,
                                    double n);
double appendix_content_quadrature(const ModelPair& pair, const AsymptoticRegime& regime,
                                   double n);

struct RatioEstimate {
    double value;
    double std_error;
    std::uint64_t draws;
    std::uint64_t seed;
};

RatioEstimate appendix_content_monte_carlo(const ModelPair& pair, const AsymptoticRegime& regime,
                                           double n, std::uint64_t draws, std::uint64_t seed);

}  // namespace macri
