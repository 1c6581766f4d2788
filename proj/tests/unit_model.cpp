#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "macri/model.hpp"
#include "macri/normal.hpp"
#include "oracles.hpp"

using namespace macri;

TEST_CASE("ModelPair validation") {
    CHECK_THROWS_AS(ModelPair::mixture(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ModelPair::mixture(-0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(ModelPair::mixture(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(ModelPair::mixture(1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(ModelPair::mixture(1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ModelPair::with_point_null(0.0, -1.0), std::domain_error);
    CHECK(ModelPair::with_point_null(0.0, 1.0).point_null());
    CHECK_FALSE(ModelPair::mixture(0.02, 1.0).point_null());
    CHECK(ModelPair::with_point_null(1.5, 1.0).null_location() == 1.5);
}

TEST_CASE("DataSummary construction and z/ybar consistency") {
    CHECK_THROWS_AS(DataSummary::from_z(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(DataSummary::from_z(-2.0, 1.0), std::domain_error);
    auto d = DataSummary::from_z(10.0, 1.645);
    CHECK(d.ybar() * std::sqrt(d.n()) == doctest::Approx(d.z()).epsilon(1e-15));
    auto d2 = DataSummary::from_ybar(10.0, d.ybar());
    CHECK(d2.z() == doctest::Approx(d.z()).epsilon(1e-15));

    std::vector<double> y{0.2, -0.1, 0.7, 0.4};
    auto d3 = DataSummary::from_samples(y);
    CHECK(d3.n() == 4.0);
    CHECK(d3.ybar() == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("mixture_prior_density examples") {
    // 0.5 * N(0; 0, 0.02) + 0.5 * N(0; 0, 1) at theta = 0
    auto pair = ModelPair::mixture(0.02, 1.0);
    auto at0 = mixture_prior_density(pair, 0.0);
    CHECK(at0.atom_mass == 0.0);
    CHECK(at0.continuous == doctest::Approx(1.6099450990701071).epsilon(1e-13));

    auto point = ModelPair::with_point_null(0.0, 1.0);
    auto spike = mixture_prior_density(point, 0.0);
    CHECK(spike.atom_mass == 0.5);
    CHECK(spike.continuous == doctest::Approx(0.5 * 0.3989422804014327).epsilon(1e-13));
    auto away = mixture_prior_density(point, 0.3);
    CHECK(away.atom_mass == 0.0);

    // identical components collapse to a single N(0,1) prior
    auto same = ModelPair::mixture(1.0, 1.0);
    for (double theta : {-2.0, -0.3, 0.0, 1.7}) {
        CHECK(mixture_prior_density(same, theta).continuous ==
              doctest::Approx(normal_pdf(theta, 0.0, 1.0)).epsilon(1e-14));
    }
}

TEST_CASE("continuous prior mass integrates to 1 - atom mass") {
    struct Case {
        ModelPair pair;
        double atom;
    };
    std::vector<Case> cases{{ModelPair::mixture(0.02, 1.0), 0.0},
                            {ModelPair::mixture(4.0, 0.5, 0.3), 0.0},
                            {ModelPair::with_point_null(0.0, 1.0), 0.5},
                            {ModelPair::with_point_null(0.7, 2.0, 0.25), 0.25}};
    for (const auto& c : cases) {
        double g1 = c.pair.prior1().variance;
        double g_max = g1;
        if (const auto* n0 = std::get_if<ZeroMeanNormalPrior>(&c.pair.prior0())) {
            g_max = std::max(g_max, n0->variance);
        }
        double radius = 50.0 * std::sqrt(g_max);
        double mass = oracles::integrate(
            [&](double theta) { return mixture_prior_density(c.pair, theta).continuous; },
            -radius, radius, 1e-12);
        CHECK(std::fabs(mass - (1.0 - c.atom)) < 1e-8);
    }
}

TEST_CASE("one-sided p-values at the paper's data points") {
    CHECK(std::fabs(p_value_one_sided(DataSummary::from_z(7.0, 1.645)) - 0.05) < 5e-4);
    CHECK(std::fabs(p_value_one_sided(DataSummary::from_z(3.0, 2.575)) - 0.005) < 5e-5);
    CHECK(std::fabs(p_value_one_sided(DataSummary::from_ybar(100.0, 0.2054)) - 0.02) < 5e-4);
    // shifted null location
    auto d = DataSummary::from_ybar(4.0, 1.0);
    CHECK(p_value_one_sided(d, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("p-value strictly decreasing in z") {
    double n = 25.0;
    double prev = 1.0;
    for (double z = -3.0; z <= 3.0; z += 0.25) {
        double p = p_value_one_sided(DataSummary::from_z(n, z));
        CHECK(p < prev);
        prev = p;
    }
}
