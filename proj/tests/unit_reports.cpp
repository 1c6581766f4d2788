#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "config.hpp"
#include "figures.hpp"
#include "macri/posterior.hpp"
#include "macri/simulation.hpp"
#include "report.hpp"

using namespace macri;
using namespace macri::cli;

namespace {

// Pull every numeric cell out of a CSV report, in order.
std::vector<double> csv_numbers(const std::string& text) {
    std::vector<double> values;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                if (used == cell.size()) values.push_back(v);
            } catch (const std::exception&) {
            }
        }
    }
    return values;
}

void collect_json_numbers(const nlohmann::json& node, std::vector<double>& out) {
    if (node.is_object() || node.is_array()) {
        for (const auto& child : node) collect_json_numbers(child, out);
    } else if (node.is_number()) {
        out.push_back(node.get<double>());
    } else if (node.is_null()) {
        out.push_back(std::numeric_limits<double>::quiet_NaN());
    }
}

}  // namespace

TEST_CASE("run config: validation catches malformed input") {
    RunConfig config;
    CHECK_THROWS_AS(config.model(), ConfigError);  // no model chosen
    config.g0 = 0.02;
    config.point_null = true;
    CHECK_THROWS_AS(config.model(), ConfigError);  // both chosen
    config.point_null = false;
    CHECK_NOTHROW(config.model());
    CHECK_THROWS_AS(config.data(), ConfigError);  // no data
    config.n = 10.0;
    config.z = 1.645;
    config.ybar = 0.1;
    CHECK_THROWS_AS(config.data(), ConfigError);  // two data forms
    config.ybar.reset();
    CHECK_NOTHROW(config.data());
    config.alpha = 1.5;
    CHECK_THROWS_AS(config.validate_model(), ConfigError);
}

TEST_CASE("run config: resolved echo is reproducible metadata") {
    RunConfig config;
    config.point_null = true;
    config.n = 10.0;
    config.z = 1.645;
    config.alpha = 0.05;
    config.seed = 99;
    auto echo = config.echo();
    CHECK(echo["model"] == "point-null");
    CHECK(echo["n"].get<double>() == 10.0);
    CHECK(echo["z"].get<double>() == 1.645);
    CHECK(echo["ybar"].get<double>() == doctest::Approx(1.645 / std::sqrt(10.0)).epsilon(1e-15));
    // reconstruct a config from the echo and get identical results
    RunConfig again;
    again.point_null = true;
    again.theta0 = echo["theta0"].get<double>();
    again.g1 = echo["g1"].get<double>();
    again.prior_prob_m0 = echo["prior_prob_m0"].get<double>();
    again.n = echo["n"].get<double>();
    again.z = echo["z"].get<double>();
    auto original = posterior_model_probs(config.model(), config.data());
    auto rebuilt = posterior_model_probs(again.model(), again.data());
    CHECK(original.pm0 == rebuilt.pm0);
}

TEST_CASE("data file ingestion matches the equivalent --ybar run") {
    std::string path = "macri_test_data.txt";
    std::vector<double> values{0.31, -0.12, 0.58, 0.44, 0.05, 0.99, -0.27, 0.63};
    {
        std::ofstream out(path);
        out << "# generated fixture\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << format_full(values[i]);
            if (i == 2) out << "  # inline comment";
            out << "\n";
        }
        out << "\n";
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    double ybar = sum / static_cast<double>(values.size());

    RunConfig from_file;
    from_file.point_null = true;
    from_file.data_file = path;
    RunConfig from_ybar;
    from_ybar.point_null = true;
    from_ybar.n = static_cast<double>(values.size());
    from_ybar.ybar = ybar;

    auto d1 = from_file.data();
    auto d2 = from_ybar.data();
    CHECK(d1.n() == d2.n());
    CHECK(d1.z() == d2.z());
    CHECK(posterior_cdf(model_averaged_posterior(from_file.model(), d1), 0.0) ==
          posterior_cdf(model_averaged_posterior(from_ybar.model(), d2), 0.0));

    // wrong --n against the file is refused
    RunConfig wrong = from_file;
    wrong.n = 5.0;
    CHECK_THROWS_AS(wrong.data(), ConfigError);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_data_file("does_not_exist.txt"), ConfigError);
    {
        std::ofstream out(path);
        out << "0.5\nnot_a_number\n";
    }
    CHECK_THROWS_AS(read_data_file(path), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("CSV and JSON encodings carry identical numeric values") {
    FigureOptions options;
    options.n_points = 9;
    Report report = make_figure("gamma_curves", options);
    report.results["example_scalar"] = 0.1234567890123456789;

    std::ostringstream csv;
    write_csv(report, csv);
    std::ostringstream json;
    write_json(report, json);

    std::vector<double> from_csv = csv_numbers(csv.str());
    std::vector<double> from_json;
    auto parsed = nlohmann::json::parse(json.str());
    collect_json_numbers(parsed["results"], from_json);
    for (const auto& table : parsed["tables"]) collect_json_numbers(table["rows"], from_json);

    REQUIRE(from_csv.size() == from_json.size());
    for (std::size_t i = 0; i < from_csv.size(); ++i) {
        if (std::isnan(from_json[i])) {
            CHECK(std::isnan(from_csv[i]));  // undefined gamma: null in JSON, nan in CSV
        } else {
            CHECK(from_csv[i] == from_json[i]);
        }
    }
}

TEST_CASE("report serialization is deterministic byte for byte") {
    auto pair = ModelPair::with_point_null(0.0, 1.0);
    auto data = DataSummary::from_z(10.0, 1.645);
    auto coverage = simulate_stochastic_content(pair, data, 0.05, 50000, 31);
    Report report;
    report.command = "simulate";
    report.results = to_json(coverage);
    std::ostringstream first, second;
    write_json(report, first);
    write_json(report, second);
    CHECK(first.str() == second.str());

    auto coverage_again = simulate_stochastic_content(pair, data, 0.05, 50000, 31);
    Report report_again;
    report_again.command = "simulate";
    report_again.results = to_json(coverage_again);
    std::ostringstream third;
    write_json(report_again, third);
    CHECK(first.str() == third.str());
}

TEST_CASE("figure: posterior_cdf carries the exact jump row") {
    FigureOptions options;
    Report report = make_figure("posterior_cdf", options);
    REQUIRE(report.tables.size() == 1);
    const auto& table = report.tables[0];
    REQUIRE(table.columns == std::vector<std::string>{"theta", "cdf_open", "cdf_closed"});
    bool found_atom_row = false;
    double prev_open = 0.0;
    for (const auto& row : table.rows) {
        CHECK(row[1] >= prev_open);  // monotone series
        prev_open = row[1];
        if (row[0] == 0.0) {
            found_atom_row = true;
            CHECK(std::fabs(row[1] - 0.030) < 5e-4);
            CHECK(std::fabs(row[2] - 0.522) < 5e-4);
        }
    }
    CHECK(found_atom_row);
}

TEST_CASE("figure: alpha_vs_n approaches the frequentist level") {
    FigureOptions options;
    options.n_points = 9;  // 1 .. 1e4 log grid, endpoint exactly 1e4
    Report report = make_figure("alpha_vs_n", options);
    const auto& table = report.tables[0];
    REQUIRE(table.columns[1] == "alpha_A0.05");
    const auto& last = table.rows.back();
    CHECK(last[0] == doctest::Approx(1e4).epsilon(1e-12));
    CHECK(std::fabs(last[1] - 0.050) < 5e-4);
}

TEST_CASE("figure: jump bounds at n = 3 match the paper") {
    FigureOptions options;
    options.n_min = 3.0;
    options.n_max = 3.0;
    options.n_points = 1;
    options.z = 1.645;
    Report report = make_figure("jump_bounds_vs_n", options);
    const auto& row = report.tables[0].rows.at(0);
    CHECK(row[0] == 3.0);
    CHECK(std::fabs(row[1] - 0.045) < 5e-4);
    CHECK(std::fabs(row[2] - 0.465) < 5e-4);
}

TEST_CASE("figure: lower_bound_alpha0005 reports the crossing") {
    FigureOptions options;
    Report report = make_figure("lower_bound_alpha0005", options);
    auto largest = report.results["largest_n_defined"].get<std::int64_t>();
    CHECK(largest >= 18);
    CHECK(largest <= 21);
    // flags in the table agree with the reported crossing
    for (const auto& row : report.tables[0].rows) {
        if (static_cast<std::int64_t>(row[0]) <= largest) {
            if (row[0] == static_cast<double>(largest)) CHECK(row[3] == 1.0);
        } else {
            CHECK(row[3] == 0.0);
        }
    }
}

TEST_CASE("figure: panels emit atom metadata for the point-null model") {
    FigureOptions options;
    options.point_null = true;
    Report report = make_figure("prior_posterior_panels", options);
    CHECK(report.results["prior_atom_mass"].get<double>() == 0.5);
    CHECK(report.results["posterior_atom_mass"].get<double>() > 0.0);
    // continuous density of the point prior is identically zero
    for (const auto& row : report.tables[0].rows) {
        CHECK(row[1] == 0.0);
        CHECK(row[4] == 0.0);
    }
    // the mixture variant fills those columns
    FigureOptions mixture;
    Report mix_report = make_figure("prior_posterior_panels", mixture);
    CHECK(mix_report.tables[0].rows[200][1] > 0.0);
}

TEST_CASE("unknown figure id lists the valid ones") {
    FigureOptions options;
    CHECK_THROWS_WITH_AS(make_figure("nope", options), doctest::Contains("gamma_curves"),
                         ConfigError);
}
