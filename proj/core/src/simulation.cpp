#include "macri/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "macri/normal.hpp"
#include "macri/posterior.hpp"

namespace macri {

bool CoverageReport::within_3se() const {
    return std::fabs(empirical - target) <= 3.0 * std_error;
}

namespace {

// Deterministic parallel map-reduce over replication indices: each worker
// owns a contiguous index range and every replication derives its own RNG
// stream, so the integer tally is independent of the partition.
template <typename PerRep>
std::uint64_t count_over_reps(std::uint64_t reps, unsigned threads, PerRep&& per_rep) {
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, reps / 1024)));
    if (workers <= 1) {
        std::uint64_t count = 0;
        for (std::uint64_t i = 0; i < reps; ++i) count += per_rep(i) ? 1 : 0;
        return count;
    }
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = reps / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = (w + 1 == workers) ? reps : begin + chunk;
        pool.emplace_back([&, w, begin, end] {
            std::uint64_t local = 0;
            for (std::uint64_t i = begin; i < end; ++i) local += per_rep(i) ? 1 : 0;
            counts[w] = local;
        });
    }
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

double binomial_se(double target, std::uint64_t reps) {
    return std::sqrt(target * (1.0 - target) / static_cast<double>(reps));
}

}  // namespace

CoverageReport simulate_stochastic_content(const ModelPair& pair, const DataSummary& data,
                                           double alpha, std::uint64_t reps, std::uint64_t seed,
                                           unsigned threads) {
    if (reps < 1000) {
        throw std::invalid_argument(
            "simulate_stochastic_content: fewer than 1000 replications gives a standard error "
            "too large to be meaningful");
    }
    ModelAveragedPosterior post = model_averaged_posterior(pair, data);
    StochasticBound bound = stochastic_bound(post, alpha);  // validates alpha in the jump
    const double atom_mass = post.atom_mass();
    const double atom_loc = post.atom_location();
    const NormalComponent slab = post.component1();

    std::uint64_t hits = count_over_reps(reps, threads, [&](std::uint64_t i) {
        CounterRng rng(seed, /*stream=*/i);
        double theta =
            rng.next_bernoulli(atom_mass) ? atom_loc : slab.mean + slab.sd() * rng.next_normal();
        bool bound_closed = rng.next_bernoulli(bound.prob_a) ? !bound.value_a_open
                                                             : !bound.value_b_open;
        return bound_closed ? theta >= atom_loc : theta > atom_loc;
    });

    double empirical = static_cast<double>(hits) / static_cast<double>(reps);
    return CoverageReport{reps, 1.0 - alpha, empirical, binomial_se(1.0 - alpha, reps), seed};
}

CoverageReport simulate_joint_dgp(const ModelPair& pair, double n, double z_target, double alpha,
                                  std::uint64_t total_draws, std::uint64_t seed, double bin_width,
                                  unsigned threads) {
    if (total_draws < 1000) {
        throw std::invalid_argument("simulate_joint_dgp: need at least 1000 draws");
    }
    if (!(bin_width > 0.0)) {
        throw std::invalid_argument("simulate_joint_dgp: bin_width must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("simulate_joint_dgp: alpha must be in (0,1)");
    }
    const double sqrt_n = std::sqrt(n);
    const double g1 = pair.prior1().variance;
    const double half_bin = 0.5 * bin_width;

    // Two tallies per draw (accepted? covered?); pack into one pass each.
    std::vector<std::uint64_t> accepted(1, 0);
    std::vector<std::uint64_t> covered(1, 0);
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total_draws / 4096)));
    accepted.assign(workers, 0);
    covered.assign(workers, 0);

    auto run_range = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t acc = 0;
        std::uint64_t cov = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, /*stream=*/i);
            bool from_m0 = rng.next_bernoulli(pair.prior_prob_m0());
            double theta;
            if (from_m0) {
                if (const auto* normal0 = std::get_if<ZeroMeanNormalPrior>(&pair.prior0())) {
                    theta = std::sqrt(normal0->variance) * rng.next_normal();
                } else {
                    theta = std::get<PointMassPrior>(pair.prior0()).location;
                }
            } else {
                theta = std::sqrt(g1) * rng.next_normal();
            }
            double z = theta * sqrt_n + rng.next_normal();  // z | theta ~ N(theta sqrt(n), 1)
            if (std::fabs(z - z_target) > half_bin) continue;
            ++acc;

            ModelAveragedPosterior post =
                model_averaged_posterior(pair, DataSummary::from_z(n, z));
            QuantileResult q = posterior_quantile(post, alpha);
            double lower;
            bool lower_open;
            if (q.kind == QuantileResult::Kind::InsideJump) {
                OneSidedInterval realized = realize(stochastic_bound(post, alpha), rng);
                lower = realized.lower;
                lower_open = realized.lower_open;
            } else {
                lower = q.value;
                lower_open = q.open;
            }
            if (lower_open ? theta > lower : theta >= lower) ++cov;
        }
        accepted[w] = acc;
        covered[w] = cov;
    };

    if (workers <= 1) {
        run_range(0, 0, total_draws);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        std::uint64_t chunk = total_draws / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t begin = w * chunk;
            std::uint64_t end = (w + 1 == workers) ? total_draws : begin + chunk;
            pool.emplace_back(run_range, w, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    std::uint64_t acc_total = 0;
    std::uint64_t cov_total = 0;
    for (unsigned w = 0; w < workers; ++w) {
        acc_total += accepted[w];
        cov_total += covered[w];
    }
    if (acc_total == 0) {
        throw std::runtime_error("simulate_joint_dgp: no draws landed in the z bin; widen "
                                 "bin_width or increase total_draws");
    }
    double empirical = static_cast<double>(cov_total) / static_cast<double>(acc_total);
    return CoverageReport{acc_total, 1.0 - alpha, empirical, binomial_se(1.0 - alpha, acc_total),
                          seed};
}

std::vector<ExclusionPoint> jl_exclusion_curve(const ModelPair& pair, double p, double alpha,
                                               std::span<const double> n_grid) {
    if (!pair.point_null()) {
        throw std::domain_error("jl_exclusion_curve: prior0 must be a point mass");
    }
    if (!(p > 0.0 && p < 1.0) || !(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("jl_exclusion_curve: p and alpha must be in (0,1)");
    }
    double z = normal_quantile(1.0 - p);
    std::vector<ExclusionPoint> curve;
    curve.reserve(n_grid.size());
    for (double n : n_grid) {
        ModelAveragedPosterior post = model_averaged_posterior(pair, DataSummary::from_z(n, z));
        IncredibilityInterval jump = incredibility_interval(post);
        ExclusionPoint point{n, jump.lower, jump.upper,
                             std::numeric_limits<double>::quiet_NaN(), false};
        if (alpha >= jump.lower && alpha <= jump.upper) {
            point.gamma = stochastic_bound(post, alpha).prob_a;
            point.gamma_defined = true;
        }
        curve.push_back(point);
    }
    return curve;
}

std::int64_t largest_n_with_quantile(const ModelPair& pair, double z, double alpha,
                                     std::int64_t n_max) {
    if (!pair.point_null()) {
        throw std::domain_error("largest_n_with_quantile: prior0 must be a point mass");
    }
    std::int64_t largest = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        ModelAveragedPosterior post = model_averaged_posterior(
            pair, DataSummary::from_z(static_cast<double>(n), z));
        if (posterior_quantile(post, alpha).exists()) largest = n;
    }
    return largest;
}

}  // namespace macri
