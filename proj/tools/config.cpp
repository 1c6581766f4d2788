#include "config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace macri::cli {

void RunConfig::validate_model() const {
    if (g0.has_value() == point_null) {
        throw ConfigError("specify the null model with exactly one of --g0 <variance> or "
                          "--point-null");
    }
    if (g0 && !(*g0 > 0.0)) {
        throw ConfigError("--g0 must be positive, got " + std::to_string(*g0));
    }
    if (!(g1 > 0.0)) {
        throw ConfigError("--g1 must be positive, got " + std::to_string(g1));
    }
    if (!(prior_prob_m0 > 0.0 && prior_prob_m0 < 1.0)) {
        throw ConfigError("--prior-prob-m0 must be in (0,1), got " +
                          std::to_string(prior_prob_m0));
    }
    if (alpha && !(*alpha > 0.0 && *alpha < 1.0)) {
        throw ConfigError("--alpha must be in (0,1), got " + std::to_string(*alpha));
    }
}

void RunConfig::validate_data() const {
    int forms = (z ? 1 : 0) + (ybar ? 1 : 0) + (data_file ? 1 : 0);
    if (forms != 1) {
        throw ConfigError("specify the data with exactly one of --z, --ybar, or --data FILE");
    }
    if (data_file) {
        if (n) {
            // allowed only as a cross-check against the file length
            return;
        }
    } else if (!n) {
        throw ConfigError("--n is required with --z or --ybar");
    }
    if (n && !(*n > 0.0 && std::isfinite(*n))) {
        throw ConfigError("--n must be a positive real, got " + std::to_string(*n));
    }
}

ModelPair RunConfig::model() const {
    validate_model();
    if (point_null) return ModelPair::with_point_null(theta0, g1, prior_prob_m0);
    return ModelPair::mixture(*g0, g1, prior_prob_m0);
}

DataSummary RunConfig::data() const {
    validate_data();
    if (data_file) {
        std::vector<double> values = read_data_file(*data_file);
        if (n && static_cast<std::size_t>(*n) != values.size()) {
            throw ConfigError("--n " + std::to_string(*n) + " does not match the " +
                              std::to_string(values.size()) + " values in " + *data_file);
        }
        return DataSummary::from_samples(values);
    }
    if (z) return DataSummary::from_z(*n, *z);
    return DataSummary::from_ybar(*n, *ybar);
}

nlohmann::json RunConfig::echo() const {
    nlohmann::json j;
    if (point_null) {
        j["model"] = "point-null";
        j["theta0"] = theta0;
    } else {
        j["model"] = "mixture";
        j["g0"] = *g0;
    }
    j["g1"] = g1;
    j["prior_prob_m0"] = prior_prob_m0;
    DataSummary resolved = data();
    j["n"] = resolved.n();
    j["z"] = resolved.z();
    j["ybar"] = resolved.ybar();
    if (data_file) j["data_file"] = *data_file;
    if (alpha) j["alpha"] = *alpha;
    if (two_sided) j["two_sided"] = true;
    j["seed"] = seed;
    return j;
}

std::vector<double> read_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open data file: " + path);
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                double value = std::stod(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                values.push_back(value);
            } catch (const std::exception&) {
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": not a number: '" + token + "'");
            }
        }
    }
    if (values.empty()) throw ConfigError(path + ": no data values found");
    return values;
}

}  // namespace macri::cli
