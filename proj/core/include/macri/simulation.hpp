// Repeated-sampling verification of the stochastic credible intervals and
// the Jeffreys-Lindley exclusion-probability sweep.
//
// Replications are embarrassingly parallel: replication i draws from
// CounterRng stream i, so results are bit-identical for any thread count.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "macri/intervals.hpp"
#include "macri/model.hpp"

namespace macri {

struct CoverageReport {
    std::uint64_t replications;
    double target;     // 1 - alpha
    double empirical;  // fraction of draws inside the realized interval
    double std_error;  // binomial SE at the target
    std::uint64_t seed;

    bool within_3se() const;
    bool operator==(const CoverageReport&) const = default;
};

// Draws theta from the model-averaged posterior and an independent
// stochastic bound realization per replication; reports the fraction of
// replications with theta inside the realized one-sided interval.
// Requires alpha inside (or at the edge of) the incredibility interval and
// reps >= 1000.  threads = 0 picks hardware concurrency.
CoverageReport simulate_stochastic_content(const ModelPair& pair, const DataSummary& data,
                                           double alpha, std::uint64_t reps, std::uint64_t seed,
                                           unsigned threads = 0);

// Slow mode: samples the full data-generating process (model, theta, ybar),
// keeps studies whose realized z lands within bin_width/2 of z_target, and
// checks the conditional coverage of each study's own (possibly stochastic)
// interval.  replications in the report counts accepted studies.
CoverageReport simulate_joint_dgp(const ModelPair& pair, double n, double z_target, double alpha,
                                  std::uint64_t total_draws, std::uint64_t seed,
                                  double bin_width = 0.05, unsigned threads = 0);

struct ExclusionPoint {
    double n;
    double jump_lower;     // Pr(theta < theta0 | data)
    double jump_upper;     // Pr(theta <= theta0 | data)
    double gamma;          // defined only when alpha is inside the jump
    bool gamma_defined;
    double exclusion_probability() const { return 1.0 - gamma; }
};

// For data held at a fixed one-sided p-value (z = Q(1-p)) and a fixed
// alpha, sweeps n and reports 1-gamma, which tends to alpha as n grows.
// Grid points where alpha falls outside the jump are flagged, not dropped.
std::vector<ExclusionPoint> jl_exclusion_curve(const ModelPair& pair, double p, double alpha,
                                               std::span<const double> n_grid);

// Largest integer n in [1, n_max] for which the alpha-quantile of the
// point-null posterior at fixed z still exists (0 if none does).
std::int64_t largest_n_with_quantile(const ModelPair& pair, double z, double alpha,
                                     std::int64_t n_max);

}  // namespace macri
