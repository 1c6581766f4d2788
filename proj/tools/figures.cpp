#include "figures.hpp"

#include <algorithm>
#include <cmath>

#include "config.hpp"
#include "macri/asymptotics.hpp"
#include "macri/intervals.hpp"
#include "macri/normal.hpp"
#include "macri/simulation.hpp"

namespace macri::cli {

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{
        "prior_posterior_panels", "alpha_vs_n",    "model_prob_vs_n", "jump_bounds_vs_n",
        "posterior_cdf",          "lower_bound_alpha0005", "gamma_curves"};
    return ids;
}

bool is_figure_id(const std::string& id) {
    const auto& ids = figure_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<double> log_spaced(double lo, double hi, std::size_t points) {
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(lo);
        return grid;
    }
    double log_lo = std::log10(lo);
    double step = (std::log10(hi) - log_lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid.push_back(std::pow(10.0, log_lo + step * static_cast<double>(i)));
    }
    return grid;
}

namespace {

ModelPair figure_model(const FigureOptions& options, bool default_point_null) {
    bool point_null = options.point_null.value_or(default_point_null);
    if (point_null) {
        return ModelPair::with_point_null(options.theta0, options.g1, options.prior_prob_m0);
    }
    return ModelPair::mixture(options.g0.value_or(0.02), options.g1, options.prior_prob_m0);
}

nlohmann::json model_meta(const ModelPair& pair) {
    nlohmann::json j;
    if (pair.point_null()) {
        j["model"] = "point-null";
        j["theta0"] = pair.null_location();
    } else {
        j["model"] = "mixture";
        j["g0"] = std::get<ZeroMeanNormalPrior>(pair.prior0()).variance;
    }
    j["g1"] = pair.prior1().variance;
    j["prior_prob_m0"] = pair.prior_prob_m0();
    return j;
}

Report prior_posterior_panels(const FigureOptions& options) {
    ModelPair pair = figure_model(options, false);
    double n = options.n.value_or(10.0);
    // The paper's panel data: ybar = 0.520 at n = 10 (z = 1.644... rounded).
    DataSummary data = options.z ? DataSummary::from_z(n, *options.z)
                                 : DataSummary::from_ybar(n, options.ybar.value_or(0.520));
    ModelAveragedPosterior post = model_averaged_posterior(pair, data);

    Table table;
    table.name = "prior_posterior_panels";
    table.columns = {"theta", "prior_m0", "prior_m1", "prior_mix",
                     "post_m0", "post_m1", "post_mix"};
    std::size_t points = std::max<std::size_t>(options.theta_points, 3);
    double lo = -3.0, hi = 3.0;
    for (std::size_t i = 0; i < points; ++i) {
        double theta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        double prior0 = 0.0;
        double post0 = 0.0;
        if (const auto* normal0 = std::get_if<ZeroMeanNormalPrior>(&pair.prior0())) {
            prior0 = normal_pdf(theta, 0.0, normal0->variance);
            post0 = normal_pdf(theta, post.component0()->mean, post.component0()->variance);
        }
        double prior1 = normal_pdf(theta, 0.0, pair.prior1().variance);
        double post1 = normal_pdf(theta, post.component1().mean, post.component1().variance);
        double prior_mix = mixture_prior_density(pair, theta).continuous;
        table.rows.push_back({theta, prior0, prior1, prior_mix, post0, post1,
                              posterior_pdf(post, theta)});
    }

    Report report;
    report.command = "figure";
    report.config = model_meta(pair);
    report.config["figure"] = table.name;
    report.config["n"] = data.n();
    report.config["ybar"] = data.ybar();
    report.config["z"] = data.z();
    report.results["pm0"] = post.weights().pm0;
    report.results["pm1"] = post.weights().pm1;
    if (pair.point_null()) {
        report.results["prior_atom_mass"] = pair.prior_prob_m0();
        report.results["posterior_atom_mass"] = post.atom_mass();
        report.results["atom_location"] = pair.null_location();
    }
    report.tables.push_back(std::move(table));
    return report;
}

Report alpha_vs_n(const FigureOptions& options) {
    ModelPair pair = figure_model(options, false);
    double p = options.p.value_or(0.05);  // fixed p-value of the data
    double z = options.z.value_or(normal_quantile(1.0 - p));
    std::vector<double> a_levels = options.a_levels;
    if (a_levels.empty()) a_levels = {0.05, 0.10, 0.20, 0.30};

    Table table;
    table.name = "alpha_vs_n";
    table.columns = {"n"};
    for (double a : a_levels) table.columns.push_back("alpha_A" + format_brief(a));

    for (double n : log_spaced(options.n_min, options.n_max.value_or(1e4), options.n_points)) {
        DataSummary data = DataSummary::from_z(n, z);
        ModelAveragedPosterior post = model_averaged_posterior(pair, data);
        std::vector<double> row{n};
        for (double a : a_levels) {
            row.push_back(posterior_cdf(post, frequentist_ci_lower(data, a), false));
        }
        table.rows.push_back(std::move(row));
    }

    Report report;
    report.command = "figure";
    report.config = model_meta(pair);
    report.config["figure"] = table.name;
    report.config["p"] = p;
    report.config["z"] = z;
    report.config["a_levels"] = a_levels;
    report.tables.push_back(std::move(table));
    return report;
}

Report model_prob_vs_n(const FigureOptions& options) {
    ModelPair pair = figure_model(options, false);
    double z = options.z.value_or(1.645);

    Table table;
    table.name = "model_prob_vs_n";
    table.columns = {"n", "pm0", "pm1", "pr_theta_lt_0"};
    for (double n : log_spaced(options.n_min, options.n_max.value_or(1e6), options.n_points)) {
        ModelAveragedPosterior post = model_averaged_posterior(pair, DataSummary::from_z(n, z));
        table.rows.push_back({n, post.weights().pm0, post.weights().pm1,
                              posterior_cdf(post, 0.0, false)});
    }

    Report report;
    report.command = "figure";
    report.config = model_meta(pair);
    report.config["figure"] = table.name;
    report.config["z"] = z;
    report.results["limit_pm1"] = limit_posterior_model_prob_m1(pair);
    report.tables.push_back(std::move(table));
    return report;
}

Report jump_bounds_vs_n(const FigureOptions& options) {
    ModelPair pair = figure_model(options, true);
    double z = options.z.value_or(1.645);

    Table table;
    table.name = "jump_bounds_vs_n";
    table.columns = {"n", "lower", "upper"};
    for (double n : log_spaced(options.n_min, options.n_max.value_or(1e4), options.n_points)) {
        auto jump = incredibility_interval(
            model_averaged_posterior(pair, DataSummary::from_z(n, z)));
        table.rows.push_back({n, jump.lower, jump.upper});
    }

    Report report;
    report.command = "figure";
    report.config = model_meta(pair);
    report.config["figure"] = table.name;
    report.config["z"] = z;
    report.tables.push_back(std::move(table));
    return report;
}

Report posterior_cdf_figure(const FigureOptions& options) {
    ModelPair pair = figure_model(options, true);
    double n = options.n.value_or(10.0);
    double z = options.z.value_or(1.645);
    DataSummary data = DataSummary::from_z(n, z);
    ModelAveragedPosterior post = model_averaged_posterior(pair, data);

    double center = post.component1().mean;
    double spread = 6.0 * post.component1().sd();
    std::size_t points = std::max<std::size_t>(options.theta_points, 3);
    std::vector<double> grid;
    grid.reserve(points + 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid.push_back(center - spread +
                       2.0 * spread * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    if (post.has_atom()) grid.push_back(post.atom_location());  // exact atom row
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    Table table;
    table.name = "posterior_cdf";
    table.columns = {"theta", "cdf_open", "cdf_closed"};
    for (double theta : grid) {
        table.rows.push_back(
            {theta, posterior_cdf(post, theta, false), posterior_cdf(post, theta, true)});
    }

    Report report;
    report.command = "figure";
    report.config = model_meta(pair);
    report.config["figure"] = table.name;
    report.config["n"] = n;
    report.config["z"] = z;
    report.results["incredibility"] = to_json(incredibility_interval(post));
    report.tables.push_back(std::move(table));
    return report;
}

Report lower_bound_alpha0005(const FigureOptions& options) {
    ModelPair pair = figure_model(options, true);
    double z = options.z.value_or(2.575);
    double alpha = options.alpha.value_or(0.005);
    auto n_max = static_cast<std::int64_t>(options.n_max.value_or(60.0));

    Table table;
    table.name = "lower_bound_alpha0005";
    table.columns = {"n", "jump_lower", "alpha_ref", "quantile_exists"};
    for (std::int64_t n = std::max<std::int64_t>(1, static_cast<std::int64_t>(options.n_min));
         n <= n_max; ++n) {
        ModelAveragedPosterior post = model_averaged_posterior(
            pair, DataSummary::from_z(static_cast<double>(n), z));
        auto jump = incredibility_interval(post);
        bool exists = posterior_quantile(post, alpha).exists();
        table.rows.push_back({static_cast<double>(n), jump.lower, alpha, exists ? 1.0 : 0.0});
    }

    Report report;
    report.command = "figure";
    report.config = model_meta(pair);
    report.config["figure"] = table.name;
    report.config["z"] = z;
    report.config["alpha"] = alpha;
    report.results["largest_n_defined"] = largest_n_with_quantile(pair, z, alpha, n_max);
    report.tables.push_back(std::move(table));
    return report;
}

Report gamma_curves(const FigureOptions& options) {
    ModelPair pair = figure_model(options, true);
    double alpha = options.alpha.value_or(0.05);
    std::vector<double> p_values = options.p_values;
    if (p_values.empty()) p_values = {0.05, 0.01, 0.005};
    auto grid = log_spaced(options.n_min, options.n_max.value_or(1e6), options.n_points);

    Table table;
    table.name = "gamma_curves";
    table.columns = {"n", "p", "jump_lower", "jump_upper",
                     "gamma", "one_minus_gamma", "gamma_defined"};
    for (double p : p_values) {
        for (const ExclusionPoint& point : jl_exclusion_curve(pair, p, alpha, grid)) {
            table.rows.push_back({point.n, p, point.jump_lower, point.jump_upper, point.gamma,
                                  point.exclusion_probability(),
                                  point.gamma_defined ? 1.0 : 0.0});
        }
    }

    Report report;
    report.command = "figure";
    report.config = model_meta(pair);
    report.config["figure"] = table.name;
    report.config["alpha"] = alpha;
    report.config["p_values"] = p_values;
    report.tables.push_back(std::move(table));
    return report;
}

}  // namespace

Report make_figure(const std::string& id, const FigureOptions& options) {
    if (id == "prior_posterior_panels") return prior_posterior_panels(options);
    if (id == "alpha_vs_n") return alpha_vs_n(options);
    if (id == "model_prob_vs_n") return model_prob_vs_n(options);
    if (id == "jump_bounds_vs_n") return jump_bounds_vs_n(options);
    if (id == "posterior_cdf") return posterior_cdf_figure(options);
    if (id == "lower_bound_alpha0005") return lower_bound_alpha0005(options);
    if (id == "gamma_curves") return gamma_curves(options);
    std::string known;
    for (const auto& figure : figure_ids()) known += "\n  " + figure;
    throw ConfigError("unknown figure id '" + id + "'; valid ids are:" + known);
}

}  // namespace macri::cli
