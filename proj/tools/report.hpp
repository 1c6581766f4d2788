// Report assembly and serialization.  Files carry full precision (17
// significant digits in CSV; JSON numbers round-trip exactly); terminal
// summaries use 4 significant digits to match how the results are usually
// quoted.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "macri/intervals.hpp"
#include "macri/posterior.hpp"
#include "macri/simulation.hpp"

namespace macri::cli {

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Report {
    std::string command;
    nlohmann::json config;   // resolved RunConfig echo
    nlohmann::json results;  // scalar findings
    std::vector<Table> tables;
};

std::string format_full(double x);   // %.17g, "nan" for undefined
std::string format_brief(double x);  // %.4g

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);

// Result-to-json converters used by the subcommands.
nlohmann::json to_json(const BayesFactorResult& bf, const PosteriorModelProbs& probs);
nlohmann::json to_json(const IncredibilityInterval& jump);
nlohmann::json to_json(const OneSidedCredible& result);
nlohmann::json to_json(const TwoSidedCredible& result);
nlohmann::json to_json(const StochasticBound& bound);
nlohmann::json to_json(const StochasticTwoSided& two);
nlohmann::json to_json(const CoverageReport& coverage);

// Human-readable one-screen summary of a report.
void print_summary(const Report& report, std::ostream& out);

}  // namespace macri::cli
