#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace macri::cli {

std::string format_full(double x) {
    if (std::isnan(x)) return "nan";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

std::string format_brief(double x) {
    if (std::isnan(x)) return "nan";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.4g", x);
    return buffer;
}

namespace {

std::string csv_cell(const nlohmann::json& value) {
    if (value.is_number_float()) return format_full(value.get<double>());
    if (value.is_null()) return "nan";
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

void flatten(const nlohmann::json& node, const std::string& prefix,
             std::vector<std::pair<std::string, nlohmann::json>>& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else {
        out.emplace_back(prefix, node);
    }
}

}  // namespace

void write_csv(const Report& report, std::ostream& out) {
    out << "# macri " << report.command << "\n";
    out << "# config: " << report.config.dump() << "\n";
    if (!report.results.empty()) {
        std::vector<std::pair<std::string, nlohmann::json>> fields;
        flatten(report.results, "", fields);
        out << "field,value\n";
        for (const auto& [key, value] : fields) {
            out << key << "," << csv_cell(value) << "\n";
        }
    }
    for (const Table& table : report.tables) {
        out << "# table: " << table.name << "\n";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << table.columns[c] << (c + 1 < table.columns.size() ? ',' : '\n');
        }
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << format_full(row[c]) << (c + 1 < row.size() ? ',' : '\n');
            }
        }
    }
}

void write_json(const Report& report, std::ostream& out) {
    nlohmann::json j;
    j["command"] = report.command;
    j["config"] = report.config;
    j["results"] = report.results;
    if (!report.tables.empty()) {
        j["tables"] = nlohmann::json::array();
        for (const Table& table : report.tables) {
            nlohmann::json t;
            t["name"] = table.name;
            t["columns"] = table.columns;
            t["rows"] = table.rows;
            j["tables"].push_back(std::move(t));
        }
    }
    out << j.dump(2) << "\n";
}

nlohmann::json to_json(const BayesFactorResult& bf, const PosteriorModelProbs& probs) {
    return nlohmann::json{{"log_bf01", bf.log_bf01},
                          {"bf01", bf.bf01},
                          {"pm0", probs.pm0},
                          {"pm1", probs.pm1}};
}

nlohmann::json to_json(const IncredibilityInterval& jump) {
    return nlohmann::json{{"lower", jump.lower},
                          {"upper", jump.upper},
                          {"atom_location", jump.atom_location},
                          {"width", jump.width()}};
}

nlohmann::json to_json(const OneSidedCredible& result) {
    nlohmann::json j;
    if (const auto* interval = std::get_if<OneSidedInterval>(&result)) {
        j["status"] = "interval";
        j["lower"] = interval->lower;
        j["lower_open"] = interval->lower_open;
        j["level"] = interval->level;
    } else {
        const auto& undefined = std::get<UndefinedOneSided>(result);
        j["status"] = "undefined";
        j["incredibility"] = to_json(undefined.jump);
        j["nearest_level_closed"] = undefined.nearest.level_closed;
        j["nearest_level_open"] = undefined.nearest.level_open;
    }
    return j;
}

namespace {

nlohmann::json tail_to_json(const TailReport& tail) {
    nlohmann::json j;
    j["target"] = tail.target;
    switch (tail.quantile.kind) {
        case QuantileResult::Kind::Exact:
            j["status"] = "exact";
            j["value"] = tail.quantile.value;
            break;
        case QuantileResult::Kind::AtomBoundary:
            j["status"] = "atom_boundary";
            j["value"] = tail.quantile.value;
            j["open"] = tail.quantile.open;
            break;
        case QuantileResult::Kind::InsideJump:
            j["status"] = "inside_jump";
            break;
    }
    if (tail.stochastic) j["stochastic"] = to_json(*tail.stochastic);
    return j;
}

}  // namespace

nlohmann::json to_json(const TwoSidedCredible& result) {
    nlohmann::json j;
    if (const auto* interval = std::get_if<TwoSidedInterval>(&result)) {
        j["status"] = "interval";
        j["lower"] = interval->lower;
        j["upper"] = interval->upper;
        j["lower_open"] = interval->lower_open;
        j["upper_open"] = interval->upper_open;
        j["level"] = interval->level;
    } else {
        const auto& undefined = std::get<UndefinedTwoSided>(result);
        j["status"] = "undefined";
        j["incredibility"] = to_json(undefined.jump);
        j["lower_tail"] = tail_to_json(undefined.lower_tail);
        j["upper_tail"] = tail_to_json(undefined.upper_tail);
        if (undefined.point_or_empty) {
            j["point_or_empty"] = to_json(*undefined.point_or_empty);
        }
    }
    return j;
}

nlohmann::json to_json(const StochasticBound& bound) {
    return nlohmann::json{{"gamma", bound.prob_a},
                          {"alpha", bound.alpha},
                          {"value_a", bound.value_a},
                          {"value_a_open", bound.value_a_open},
                          {"value_b", bound.value_b},
                          {"value_b_open", bound.value_b_open}};
}

nlohmann::json to_json(const StochasticTwoSided& two) {
    return nlohmann::json{
        {"psi", two.prob_point}, {"point", two.point}, {"alpha", two.alpha}};
}

nlohmann::json to_json(const CoverageReport& coverage) {
    return nlohmann::json{{"replications", coverage.replications},
                          {"target", coverage.target},
                          {"empirical", coverage.empirical},
                          {"std_error", coverage.std_error},
                          {"seed", coverage.seed},
                          {"within_3se", coverage.within_3se()}};
}

namespace {

void print_json_brief(const nlohmann::json& node, const std::string& indent, std::ostream& out) {
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            print_json_brief(value, indent + "  ", out);
        } else if (value.is_number_float()) {
            out << indent << key << " = " << format_brief(value.get<double>()) << "\n";
        } else {
            out << indent << key << " = " << value.dump() << "\n";
        }
    }
}

}  // namespace

void print_summary(const Report& report, std::ostream& out) {
    out << "macri " << report.command << "\n";
    out << "  config: " << report.config.dump() << "\n";
    if (!report.results.empty()) print_json_brief(report.results, "  ", out);
    for (const Table& table : report.tables) {
        out << "  table '" << table.name << "': " << table.rows.size() << " rows x "
            << table.columns.size() << " columns\n";
    }
}

}  // namespace macri::cli
