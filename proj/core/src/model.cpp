#include "macri/model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "macri/normal.hpp"

namespace macri {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string("ModelPair: ") + what + " must be finite");
    }
}

}  // namespace

ModelPair::ModelPair(Prior prior0, ZeroMeanNormalPrior prior1, double prior_prob_m0)
    : prior0_(prior0), prior1_(prior1), prior_prob_m0_(prior_prob_m0) {
    if (const auto* normal0 = std::get_if<ZeroMeanNormalPrior>(&prior0_)) {
        if (!(normal0->variance > 0.0) || !std::isfinite(normal0->variance)) {
            throw std::domain_error("ModelPair: prior0 variance g0 must be positive, got " +
                                    std::to_string(normal0->variance));
        }
    } else {
        require_finite(std::get<PointMassPrior>(prior0_).location, "point-mass location");
    }
    if (!(prior1_.variance > 0.0) || !std::isfinite(prior1_.variance)) {
        throw std::domain_error("ModelPair: prior1 variance g1 must be positive, got " +
                                std::to_string(prior1_.variance));
    }
    if (!(prior_prob_m0_ > 0.0 && prior_prob_m0_ < 1.0)) {
        throw std::domain_error("ModelPair: prior_prob_m0 must be in (0,1), got " +
                                std::to_string(prior_prob_m0_));
    }
}

double ModelPair::null_location() const {
    if (const auto* atom = std::get_if<PointMassPrior>(&prior0_)) return atom->location;
    return 0.0;
}

ModelPair ModelPair::mixture(double g0, double g1, double prior_prob_m0) {
    return ModelPair(ZeroMeanNormalPrior{g0}, ZeroMeanNormalPrior{g1}, prior_prob_m0);
}

ModelPair ModelPair::with_point_null(double theta0, double g1, double prior_prob_m0) {
    return ModelPair(PointMassPrior{theta0}, ZeroMeanNormalPrior{g1}, prior_prob_m0);
}

DataSummary DataSummary::from_z(double n, double z) {
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error("DataSummary: n must be a positive real, got " +
                                std::to_string(n));
    }
    if (!std::isfinite(z)) {
        throw std::domain_error("DataSummary: z must be finite");
    }
    return DataSummary(n, z, z / std::sqrt(n));
}

DataSummary DataSummary::from_ybar(double n, double ybar) {
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error("DataSummary: n must be a positive real, got " +
                                std::to_string(n));
    }
    if (!std::isfinite(ybar)) {
        throw std::domain_error("DataSummary: ybar must be finite");
    }
    return DataSummary(n, ybar * std::sqrt(n), ybar);
}

DataSummary DataSummary::from_samples(std::span<const double> y) {
    if (y.empty()) {
        throw std::domain_error("DataSummary: sample vector is empty");
    }
    double sum = std::accumulate(y.begin(), y.end(), 0.0);
    if (!std::isfinite(sum)) {
        throw std::domain_error("DataSummary: samples contain non-finite values");
    }
    double n = static_cast<double>(y.size());
    return from_ybar(n, sum / n);
}

MixtureDensity mixture_prior_density(const ModelPair& pair, double theta) {
    double density1 = normal_pdf(theta, 0.0, pair.prior1().variance);
    double continuous = pair.prior_prob_m1() * density1;
    double atom_mass = 0.0;
    double atom_location = 0.0;
    if (const auto* normal0 = std::get_if<ZeroMeanNormalPrior>(&pair.prior0())) {
        continuous += pair.prior_prob_m0() * normal_pdf(theta, 0.0, normal0->variance);
    } else {
        const auto& atom = std::get<PointMassPrior>(pair.prior0());
        atom_location = atom.location;
        if (theta == atom.location) atom_mass = pair.prior_prob_m0();
    }
    return MixtureDensity{continuous, atom_mass, atom_location};
}

double p_value_one_sided(const DataSummary& data, double null_location) {
    double shifted = data.z() - std::sqrt(data.n()) * null_location;
    return normal_sf(shifted, 0.0, 1.0);
}

}  // namespace macri
