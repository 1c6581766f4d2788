// Run configuration shared by the CLI subcommands: model, data, level,
// seed, output target.  Validation happens before any computation and
// failures throw ConfigError (exit code 2).
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "macri/model.hpp"

namespace macri::cli {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Human, Csv, Json };

struct RunConfig {
    // model
    std::optional<double> g0;  // mutually exclusive with point_null
    bool point_null = false;
    double theta0 = 0.0;
    double g1 = 1.0;
    double prior_prob_m0 = 0.5;
    // data: exactly one of z / ybar / data_file
    std::optional<double> n;
    std::optional<double> z;
    std::optional<double> ybar;
    std::optional<std::string> data_file;
    // analysis
    std::optional<double> alpha;
    bool two_sided = false;
    std::uint64_t seed = 0;
    std::uint64_t reps = 1000000;
    unsigned threads = 0;
    // output
    OutputFormat format = OutputFormat::Human;
    std::optional<std::string> out_path;

    ModelPair model() const;
    DataSummary data() const;  // resolves the data file if needed

    // Echo of the fully resolved configuration (n, z and ybar all present).
    nlohmann::json echo() const;

    void validate_model() const;
    void validate_data() const;
};

// One real per line; '#' starts a comment; blank lines ignored.
std::vector<double> read_data_file(const std::string& path);

}  // namespace macri::cli
