// Two-model Bayesian setup on a scalar location parameter: per-model priors,
// prior model probabilities, and the unit-variance Gaussian data model
// reduced to its sufficient statistic (n, z) with z = sqrt(n) * ybar.
#pragma once

#include <span>
#include <variant>

namespace macri {

struct ZeroMeanNormalPrior {
    double variance;  // > 0
};

struct PointMassPrior {
    double location = 0.0;  // atom carrying mass 1
};

using Prior = std::variant<ZeroMeanNormalPrior, PointMassPrior>;

// Model 0 may be a zero-mean normal or a point mass; model 1 is always a
// zero-mean normal slab.  Validated on construction.
class ModelPair {
  public:
    ModelPair(Prior prior0, ZeroMeanNormalPrior prior1, double prior_prob_m0 = 0.5);

    const Prior& prior0() const { return prior0_; }
    const ZeroMeanNormalPrior& prior1() const { return prior1_; }
    double prior_prob_m0() const { return prior_prob_m0_; }
    double prior_prob_m1() const { return 1.0 - prior_prob_m0_; }

    bool point_null() const { return std::holds_alternative<PointMassPrior>(prior0_); }
    // Atom location for a point-null prior; 0 otherwise (the natural
    // reference point for zero-mean priors).
    double null_location() const;

    static ModelPair mixture(double g0, double g1, double prior_prob_m0 = 0.5);
    static ModelPair with_point_null(double theta0, double g1, double prior_prob_m0 = 0.5);

  private:
    Prior prior0_;
    ZeroMeanNormalPrior prior1_;
    double prior_prob_m0_;
};

// Sufficient statistic of n unit-variance Gaussian observations.  n is a
// positive real so asymptotic sweeps can move smoothly; integer n is the
// ordinary case.
class DataSummary {
  public:
    static DataSummary from_z(double n, double z);
    static DataSummary from_ybar(double n, double ybar);
    static DataSummary from_samples(std::span<const double> y);

    double n() const { return n_; }
    double z() const { return z_; }
    double ybar() const { return ybar_; }

  private:
    DataSummary(double n, double z, double ybar) : n_(n), z_(z), ybar_(ybar) {}
    double n_;
    double z_;
    double ybar_;
};

// Value of the mixture prior at theta: the continuous density plus the
// atom mass sitting exactly at theta (zero if the prior has no atom there).
struct MixtureDensity {
    double continuous;
    double atom_mass;
    double atom_location;
};

MixtureDensity mixture_prior_density(const ModelPair& pair, double theta);

// One-sided p-value against H0: theta < null_location, i.e.
// Pr(Z >= z - sqrt(n) * null_location) under the null boundary.
double p_value_one_sided(const DataSummary& data, double null_location = 0.0);

}  // namespace macri
