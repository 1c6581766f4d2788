#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "macri/rng.hpp"
#include "macri/simulation.hpp"

using namespace macri;

TEST_CASE("counter rng: determinism and stream independence") {
    CounterRng a(42), b(42);
    for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());

    CounterRng s0(42, 0), s1(42, 1);
    int same = 0;
    for (int i = 0; i < 64; ++i) {
        if (s0.next_u64() == s1.next_u64()) ++same;
    }
    CHECK(same == 0);

    CounterRng u(7);
    double mean = 0.0;
    for (int i = 0; i < 20000; ++i) {
        double x = u.next_uniform();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        mean += x;
    }
    CHECK(std::fabs(mean / 20000 - 0.5) < 0.01);

    CounterRng g(7, 3);
    double sum = 0.0, sum2 = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        double x = g.next_normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(std::fabs(sum / draws) < 0.03);
    CHECK(std::fabs(sum2 / draws - 1.0) < 0.05);
}

TEST_CASE("stochastic bound content simulation hits 1 - alpha") {
    auto point = ModelPair::with_point_null(0.0, 1.0);
    auto data = DataSummary::from_z(10.0, 1.645);
    auto report = simulate_stochastic_content(point, data, 0.05, 1000000, 42);
    CHECK(report.target == 0.95);
    CHECK(report.std_error == doctest::Approx(std::sqrt(0.05 * 0.95 / 1e6)).epsilon(1e-12));
    CHECK(report.within_3se());
    CHECK(std::fabs(report.empirical - 0.95) <= 3.0 * report.std_error);
}

TEST_CASE("simulation is bit-identical across repeats and thread counts") {
    auto point = ModelPair::with_point_null(0.0, 1.0);
    auto data = DataSummary::from_z(10.0, 1.645);
    auto first = simulate_stochastic_content(point, data, 0.05, 200000, 7, 2);
    auto second = simulate_stochastic_content(point, data, 0.05, 200000, 7, 2);
    auto serial = simulate_stochastic_content(point, data, 0.05, 200000, 7, 1);
    CHECK(first == second);
    CHECK(first == serial);
    auto other_seed = simulate_stochastic_content(point, data, 0.05, 200000, 8, 2);
    CHECK(first.empirical != other_seed.empirical);
}

TEST_CASE("simulation refuses meaningless replication counts") {
    auto point = ModelPair::with_point_null(0.0, 1.0);
    auto data = DataSummary::from_z(10.0, 1.645);
    CHECK_THROWS_AS(simulate_stochastic_content(point, data, 0.05, 10, 42),
                    std::invalid_argument);
}

TEST_CASE("jump-edge alphas give the degenerate deterministic draws") {
    auto point = ModelPair::with_point_null(0.0, 1.0);
    auto data = DataSummary::from_z(10.0, 1.645);
    auto post = model_averaged_posterior(point, data);
    auto jump = incredibility_interval(post);
    // gamma = 1: always the closed bound; content 1 - lower
    auto at_lower = simulate_stochastic_content(point, data, jump.lower, 100000, 3);
    CHECK(std::fabs(at_lower.empirical - (1.0 - jump.lower)) <= 3.0 * at_lower.std_error);
    // gamma = 0: always the open bound; content 1 - upper = 1 - Pr(theta <= 0)
    auto at_upper = simulate_stochastic_content(point, data, jump.upper, 100000, 3);
    CHECK(std::fabs(at_upper.empirical - (1.0 - jump.upper)) <= 3.0 * at_upper.std_error);
}

TEST_CASE("joint data-generating-process mode agrees conditionally on the z bin") {
    auto point = ModelPair::with_point_null(0.0, 1.0);
    auto report = simulate_joint_dgp(point, 10.0, 1.645, 0.05, 400000, 11, /*bin_width=*/0.2);
    CHECK(report.replications > 2000);
    CHECK(std::fabs(report.empirical - 0.95) <= 3.0 * report.std_error);
    auto repeat = simulate_joint_dgp(point, 10.0, 1.645, 0.05, 400000, 11, 0.2);
    CHECK(report == repeat);
    CHECK_THROWS_AS(simulate_joint_dgp(point, 10.0, 1.645, 0.05, 100, 11, 0.2),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_joint_dgp(point, 10.0, 1.645, 0.05, 10000, 11, -1.0),
                    std::invalid_argument);
}

TEST_CASE("exclusion curve: limit, flags, and the p=0.005 crossing") {
    auto point = ModelPair::with_point_null(0.0, 1.0);

    std::vector<double> big{1e8};
    auto limit_points = jl_exclusion_curve(point, 0.05, 0.05, big);
    REQUIRE(limit_points.size() == 1);
    REQUIRE(limit_points[0].gamma_defined);
    CHECK(std::fabs(limit_points[0].exclusion_probability() - 0.05) < 1e-3);

    // gamma(n) = (alpha - u)/(l - u) with l -> 0 and u -> 1
    CHECK(limit_points[0].jump_lower < 1e-3);
    CHECK(limit_points[0].jump_upper > 1.0 - 1e-3);

    // small n at p=0.05, alpha=0.05: quantile exists, so the point is flagged
    std::vector<double> small{1.0, 2.0};
    auto flagged = jl_exclusion_curve(point, 0.05, 0.05, small);
    CHECK_FALSE(flagged[0].gamma_defined);
    CHECK(std::isnan(flagged[0].gamma));

    // z = 2.575, alpha = 0.005: the quantile stops existing near n = 20
    double z = 2.575;
    std::int64_t crossing = largest_n_with_quantile(point, z, 0.005, 60);
    std::set<std::int64_t> allowed{18, 19, 20, 21};
    CHECK(allowed.count(crossing) == 1);

    CHECK_THROWS_AS(jl_exclusion_curve(ModelPair::mixture(0.02, 1.0), 0.05, 0.05, big),
                    std::domain_error);
}
