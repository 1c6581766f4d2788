// Data series behind the paper-style figures.  Each generator emits the
// exact numeric series (no rendering); grids are overridable and every row
// carries the grid value it was computed at.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace macri::cli {

struct FigureOptions {
    // model overrides (figure-specific defaults apply when unset)
    std::optional<double> g0;
    std::optional<bool> point_null;
    double theta0 = 0.0;
    double g1 = 1.0;
    double prior_prob_m0 = 0.5;
    // data / level overrides
    std::optional<double> n;
    std::optional<double> z;
    std::optional<double> ybar;
    std::optional<double> alpha;  // credible level
    std::optional<double> p;      // fixed p-value of the data (alpha_vs_n)
    // grids
    double n_min = 1.0;
    std::optional<double> n_max;
    std::size_t n_points = 81;
    std::size_t theta_points = 401;
    std::vector<double> p_values;  // gamma_curves
    std::vector<double> a_levels;  // alpha_vs_n
};

// Valid ids: prior_posterior_panels, alpha_vs_n, model_prob_vs_n,
// jump_bounds_vs_n, posterior_cdf, lower_bound_alpha0005, gamma_curves.
const std::vector<std::string>& figure_ids();

bool is_figure_id(const std::string& id);

// Builds the series for one figure; throws ConfigError for unknown ids.
Report make_figure(const std::string& id, const FigureOptions& options);

std::vector<double> log_spaced(double lo, double hi, std::size_t points);

}  // namespace macri::cli
