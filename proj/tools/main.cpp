// macri: model-averaged credible intervals for two-model Gaussian setups.
//
// Subcommands: bf (Bayes factor and model probabilities), cri (credible
// intervals, including undefined/stochastic outcomes), figure (numeric
// series behind the paper-style figures), simulate (repeated-sampling
// checks of the stochastic intervals).
//
// Exit codes: 0 success (an undefined interval is a finding, not an
// error), 2 configuration error, 3 numerical failure.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "figures.hpp"
#include "macri/asymptotics.hpp"
#include "macri/intervals.hpp"
#include "macri/simulation.hpp"
#include "report.hpp"

namespace cli = macri::cli;

namespace {

void add_model_flags(CLI::App* cmd, cli::RunConfig& config) {
    auto* g0 = cmd->add_option("--g0", config.g0, "Variance of the zero-mean normal null prior");
    auto* point = cmd->add_flag("--point-null", config.point_null,
                                "Use a point-mass null prior at --theta0");
    g0->excludes(point);
    cmd->add_option("--theta0", config.theta0, "Point-null location")->capture_default_str();
    cmd->add_option("--g1", config.g1, "Variance of the alternative (slab) prior")
        ->capture_default_str();
    cmd->add_option("--prior-prob-m0", config.prior_prob_m0, "Prior probability of model 0")
        ->capture_default_str();
}

void add_data_flags(CLI::App* cmd, cli::RunConfig& config) {
    cmd->add_option("--n", config.n, "Sample size (positive real)");
    auto* z = cmd->add_option("--z", config.z, "Summary statistic z = sqrt(n) * ybar");
    auto* ybar = cmd->add_option("--ybar", config.ybar, "Sample mean");
    auto* file = cmd->add_option("--data", config.data_file,
                                 "Data file: one value per line, '#' comments");
    z->excludes(ybar)->excludes(file);
    ybar->excludes(file);
}

void add_output_flags(CLI::App* cmd, cli::RunConfig& config) {
    std::map<std::string, cli::OutputFormat> formats{{"csv", cli::OutputFormat::Csv},
                                                     {"json", cli::OutputFormat::Json}};
    cmd->add_option("--format", config.format, "Machine-readable output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--out", config.out_path, "Write the report to this path");
}

void emit(const cli::Report& report, const cli::RunConfig& config) {
    bool machine = config.format != cli::OutputFormat::Human || config.out_path.has_value();
    if (config.out_path) {
        std::ofstream out(*config.out_path);
        if (!out) throw cli::ConfigError("cannot write to " + *config.out_path);
        if (config.format == cli::OutputFormat::Csv) {
            cli::write_csv(report, out);
        } else {
            cli::write_json(report, out);
        }
        cli::print_summary(report, std::cout);
        std::cout << "  wrote " << *config.out_path << "\n";
    } else if (machine) {
        if (config.format == cli::OutputFormat::Csv) {
            cli::write_csv(report, std::cout);
        } else {
            cli::write_json(report, std::cout);
        }
    } else {
        cli::print_summary(report, std::cout);
    }
}

cli::Report run_bf(const cli::RunConfig& config) {
    auto pair = config.model();
    auto data = config.data();
    cli::Report report;
    report.command = "bf";
    report.config = config.echo();
    report.results = cli::to_json(macri::bayes_factor_01(pair, data),
                                  macri::posterior_model_probs(pair, data));
    report.results["limit_pm1"] = macri::limit_posterior_model_prob_m1(pair);
    report.results["p_value_one_sided"] = macri::p_value_one_sided(data, pair.null_location());
    return report;
}

cli::Report run_cri(const cli::RunConfig& config) {
    if (!config.alpha) throw cli::ConfigError("cri requires --alpha");
    auto pair = config.model();
    auto data = config.data();
    auto post = macri::model_averaged_posterior(pair, data);
    double alpha = *config.alpha;

    cli::Report report;
    report.command = "cri";
    report.config = config.echo();
    report.results["frequentist_ci_lower"] = macri::frequentist_ci_lower(data, alpha);
    if (config.two_sided) {
        auto result = macri::credible_two_sided(post, alpha);
        report.results["two_sided"] = cli::to_json(result);
    } else {
        auto result = macri::credible_one_sided(post, alpha);
        report.results["one_sided"] = cli::to_json(result);
        if (std::holds_alternative<macri::UndefinedOneSided>(result)) {
            report.results["one_sided"]["stochastic"] =
                cli::to_json(macri::stochastic_bound(post, alpha));
        }
    }
    return report;
}

cli::Report run_simulate(const cli::RunConfig& config, bool joint, double bin_width) {
    if (!config.alpha) throw cli::ConfigError("simulate requires --alpha");
    auto pair = config.model();
    auto data = config.data();
    macri::CoverageReport coverage =
        joint ? macri::simulate_joint_dgp(pair, data.n(), data.z(), *config.alpha, config.reps,
                                          config.seed, bin_width, config.threads)
              : macri::simulate_stochastic_content(pair, data, *config.alpha, config.reps,
                                                   config.seed, config.threads);
    cli::Report report;
    report.command = "simulate";
    report.config = config.echo();
    report.config["reps"] = config.reps;
    if (joint) {
        report.config["joint"] = true;
        report.config["bin_width"] = bin_width;
    }
    report.results = cli::to_json(coverage);
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-averaged Bayesian inference for two nested Gaussian models"};
    app.require_subcommand(1);

    cli::RunConfig config;
    std::string figure_id;
    cli::FigureOptions figure_options;
    bool joint = false;
    double bin_width = 0.05;

    auto* bf = app.add_subcommand("bf", "Bayes factor and posterior model probabilities");
    add_model_flags(bf, config);
    add_data_flags(bf, config);
    add_output_flags(bf, config);

    auto* cri = app.add_subcommand("cri", "Credible interval (or its undefined diagnosis)");
    add_model_flags(cri, config);
    add_data_flags(cri, config);
    add_output_flags(cri, config);
    cri->add_option("--alpha", config.alpha, "Target level: interval covers 1 - alpha");
    cri->add_flag("--two-sided", config.two_sided, "Equal-tailed two-sided interval");

    auto* figure = app.add_subcommand("figure", "Emit the data series behind one figure");
    figure->add_option("id", figure_id, "Figure id (see --help-figures)")->required();
    figure->add_option("--g0", figure_options.g0, "Mixture null prior variance");
    figure->add_flag_callback("--point-null",
                              [&figure_options] { figure_options.point_null = true; },
                              "Force the point-null model");
    figure->add_option("--theta0", figure_options.theta0, "Point-null location");
    figure->add_option("--g1", figure_options.g1, "Slab prior variance")->capture_default_str();
    figure->add_option("--prior-prob-m0", figure_options.prior_prob_m0,
                       "Prior probability of model 0")
        ->capture_default_str();
    figure->add_option("--n", figure_options.n, "Sample size override");
    figure->add_option("--z", figure_options.z, "z override");
    figure->add_option("--ybar", figure_options.ybar, "ybar override");
    figure->add_option("--alpha", figure_options.alpha, "Credible level override");
    figure->add_option("--p", figure_options.p, "Fixed data p-value (alpha_vs_n)");
    figure->add_option("--p-values", figure_options.p_values,
                       "Data p-values, one curve each (gamma_curves)");
    figure->add_option("--a-levels", figure_options.a_levels,
                       "Frequentist A levels (alpha_vs_n)");
    figure->add_option("--n-min", figure_options.n_min, "Grid lower end")->capture_default_str();
    figure->add_option("--n-max", figure_options.n_max, "Grid upper end (figure default)");
    figure->add_option("--n-points", figure_options.n_points, "Grid points")
        ->capture_default_str();
    figure->add_option("--theta-points", figure_options.theta_points, "Theta grid points")
        ->capture_default_str();
    add_output_flags(figure, config);

    auto* simulate = app.add_subcommand("simulate", "Repeated-sampling coverage check");
    add_model_flags(simulate, config);
    add_data_flags(simulate, config);
    add_output_flags(simulate, config);
    simulate->add_option("--alpha", config.alpha, "Target level");
    simulate->add_option("--reps", config.reps, "Replications (>= 1000)")
        ->capture_default_str();
    simulate->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--threads", config.threads, "Worker threads (0 = auto)")
        ->capture_default_str();
    simulate->add_flag("--joint", joint,
                       "Slow mode: sample the joint DGP and condition on a z bin");
    simulate->add_option("--bin-width", bin_width, "z bin width for --joint")
        ->capture_default_str();

    // cri/bf echo the seed too; keep a --seed on cri for stochastic realizations later
    cri->add_option("--seed", config.seed, "RNG seed echoed into the report");
    bf->add_option("--seed", config.seed, "RNG seed echoed into the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    try {
        if (bf->parsed()) {
            emit(run_bf(config), config);
        } else if (cri->parsed()) {
            emit(run_cri(config), config);
        } else if (figure->parsed()) {
            cli::Report report = cli::make_figure(figure_id, figure_options);
            emit(report, config);
        } else if (simulate->parsed()) {
            emit(run_simulate(config, joint, bin_width), config);
        }
    } catch (const cli::ConfigError& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 2;
    } catch (const std::domain_error& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "numerical failure: " << error.what() << "\n";
        return 3;
    }
    return 0;
}
