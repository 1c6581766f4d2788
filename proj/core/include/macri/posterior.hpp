// Bayes factors, posterior model probabilities, and the model-averaged
// posterior with atom-aware CDF and quantile machinery.
//
// With a point-mass prior on model 0 the posterior carries an atom of mass
// Pr(M0|data) at theta0, so its CDF jumps there.  Pr(theta < t) and
// Pr(theta <= t) are both first-class ("open"/"closed" CDF), and the
// quantile is a tagged result: for target levels inside the CDF jump no
// quantile exists, which is a finding, not an error.
#pragma once

#include <optional>

#include "macri/model.hpp"

namespace macri {

struct BayesFactorResult {
    double log_bf01;
    double bf01;  // exp(log_bf01); may round to 0 or inf for extreme data
};

struct PosteriorModelProbs {
    double pm0;
    double pm1;
};

struct NormalComponent {
    double mean;
    double variance;
    double sd() const;
};

// Immutable value object produced by model_averaged_posterior().
// Exactly one of component0()/atom applies, depending on the prior kind.
class ModelAveragedPosterior {
  public:
    const PosteriorModelProbs& weights() const { return weights_; }
    const NormalComponent& component1() const { return component1_; }

    bool has_atom() const { return atom_location_.has_value(); }
    double atom_location() const;
    double atom_mass() const { return has_atom() ? weights_.pm0 : 0.0; }

    // Continuous posterior of model 0 (mixture case only).
    const std::optional<NormalComponent>& component0() const { return component0_; }

    // Reference location for jump diagnostics: the atom location when there
    // is one, 0 otherwise.
    double reference_location() const;

  private:
    friend ModelAveragedPosterior model_averaged_posterior(const ModelPair&, const DataSummary&);
    PosteriorModelProbs weights_;
    std::optional<NormalComponent> component0_;
    std::optional<double> atom_location_;
    NormalComponent component1_{};
};

// The pair of probability levels [Pr(theta < loc), Pr(theta <= loc)]
// spanned by the CDF jump at the atom; degenerate (lower == upper) when the
// posterior has no atom.
struct IncredibilityInterval {
    double lower;
    double upper;
    double atom_location;
    double width() const { return upper - lower; }
};

// BF01 computed in log space; exact for both the two-normal and the
// point-null case, stable for n up to 1e12 and beyond.
BayesFactorResult bayes_factor_01(const ModelPair& pair, const DataSummary& data);

PosteriorModelProbs posterior_model_probs(const ModelPair& pair, const DataSummary& data);

ModelAveragedPosterior model_averaged_posterior(const ModelPair& pair, const DataSummary& data);

// closed == false: Pr(theta < t); closed == true: Pr(theta <= t).
// The two differ exactly by atom_mass() when t is the atom location.
double posterior_cdf(const ModelAveragedPosterior& post, double t, bool closed = false);

// Density of the continuous part (the atom is not representable as a
// density value).
double posterior_pdf(const ModelAveragedPosterior& post, double t);

IncredibilityInterval incredibility_interval(const ModelAveragedPosterior& post);

struct QuantileResult {
    enum class Kind {
        Exact,         // theta* with Pr(theta < theta*) == alpha
        AtomBoundary,  // alpha hits a jump edge: theta* is the atom itself
        InsideJump     // no quantile exists; see jump
    };
    Kind kind;
    double value = 0.0;  // Exact / AtomBoundary
    // AtomBoundary semantics: false -> [value, inf) attains level 1-alpha,
    // true -> (value, inf) attains it.
    bool open = false;
    IncredibilityInterval jump{0.0, 0.0, 0.0};

    bool exists() const { return kind != Kind::InsideJump; }
};

// Solves Pr(theta < theta*) = alpha.  Exact roots are located by bracketed
// bisection refined with safeguarded Newton steps to |cdf - alpha| <= 1e-12.
QuantileResult posterior_quantile(const ModelAveragedPosterior& post, double alpha);

}  // namespace macri
