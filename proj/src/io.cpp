#include "pfl/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "pfl/errors.hpp"
#include "pfl/sign_string.hpp"

namespace pfl::io {

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    return out;
}

void flush_or_throw(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw ConfigError("failed while writing '" + path + "'");
    }
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_csv(const std::string& path,
               const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out = open_for_write(path);
    out << kCsvVersionLine << '\n';
    for (const std::string& comment : comments) {
        out << "# " << comment << '\n';
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw ConfigError("CSV row width " + std::to_string(row.size()) +
                              " does not match " +
                              std::to_string(columns.size()) + " columns");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << row[c];
        }
        out << '\n';
    }
    flush_or_throw(out, path);
}

void write_code_json(const std::string& path, const CodeSpec& spec,
                     const InfoSet& info) {
    nlohmann::json doc;
    doc["n"] = spec.n;
    doc["k"] = spec.k;
    doc["p"] = spec.p;
    doc["delta"] = spec.delta;
    doc["protected_levels"] = spec.protected_levels;
    doc["info_set"] = info.indices;
    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << '\n';
    flush_or_throw(out, path);
}

std::pair<CodeSpec, InfoSet> read_code_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open '" + path + "' for reading");
    }
    CodeSpec spec;
    InfoSet info;
    try {
        const nlohmann::json doc = nlohmann::json::parse(in);
        spec.n = doc.at("n").get<int>();
        spec.k = doc.at("k").get<std::uint64_t>();
        spec.p = doc.at("p").get<double>();
        spec.delta = doc.at("delta").get<double>();
        spec.protected_levels = doc.at("protected_levels").get<int>();
        info.indices = doc.at("info_set").get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception& error) {
        throw ConfigError("malformed code definition '" + path +
                          "': " + error.what());
    }
    validate(spec);
    if (!std::is_sorted(info.indices.begin(), info.indices.end())) {
        throw ConfigError("info_set must be sorted ascending in '" + path + "'");
    }
    if (info.indices.size() != spec.k) {
        throw ConfigError("info_set size does not match k in '" + path + "'");
    }
    return {spec, info};
}

std::vector<ZRow> z_rows(const ZTable& table) {
    std::vector<ZRow> rows(table.values.size());
    for (std::uint32_t i = 0; i < rows.size(); ++i) {
        rows[i] = ZRow{i, index_to_sign_string(i, table.level), table.values[i]};
    }
    return rows;
}

std::vector<ZRow> sorted_z_rows(const ZTable& table) {
    std::vector<ZRow> rows = z_rows(table);
    std::stable_sort(rows.begin(), rows.end(), [](const ZRow& a, const ZRow& b) {
        return a.z > b.z;  // descending profile; stability keeps index order on ties
    });
    return rows;
}

void write_z_csv(const std::string& path, const std::vector<ZRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const ZRow& row : rows) {
        cells.push_back({std::to_string(row.index), row.sign,
                         format_double(row.z)});
    }
    write_csv(path, {}, {"index", "sign_string", "z_value"}, cells);
}

void write_info_csv(const std::string& path, const InfoSet& info) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(info.indices.size());
    for (std::uint32_t index : info.indices) {
        cells.push_back({std::to_string(index)});
    }
    write_csv(path, {}, {"index"}, cells);
}

namespace {

std::vector<std::string> bounds_cells(const FerBounds& bounds) {
    return {format_double(bounds.upper), format_double(bounds.lower),
            bounds.upper_trivialized ? "1" : "0",
            bounds.lower_trivialized ? "1" : "0"};
}

}  // namespace

void write_rate_bounds_csv(const std::string& path,
                           const std::vector<RateBoundsRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const RateBoundsRow& row : rows) {
        std::vector<std::string> line{format_double(row.rate)};
        const std::vector<std::string> tail = bounds_cells(row.bounds);
        line.insert(line.end(), tail.begin(), tail.end());
        cells.push_back(std::move(line));
    }
    write_csv(path, {},
              {"rate", "upper", "lower", "upper_trivialized",
               "lower_trivialized"},
              cells);
}

void write_n_bounds_csv(const std::string& path,
                        const std::vector<NBoundsRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const NBoundsRow& row : rows) {
        std::vector<std::string> line{std::to_string(row.n)};
        const std::vector<std::string> tail = bounds_cells(row.bounds);
        line.insert(line.end(), tail.begin(), tail.end());
        cells.push_back(std::move(line));
    }
    write_csv(path, {},
              {"n", "upper", "lower", "upper_trivialized",
               "lower_trivialized"},
              cells);
}

void write_estimate_csv(const std::string& path, const FerEstimate& estimate) {
    write_csv(path, {},
              {"trials", "erasures", "fer", "ci_low", "ci_high",
               "stopped_on_target"},
              {{std::to_string(estimate.trials),
                std::to_string(estimate.erasures),
                format_double(estimate.fer), format_double(estimate.ci_low),
                format_double(estimate.ci_high),
                estimate.stopped_on_target ? "1" : "0"}});
}

void write_estimate_json(const std::string& path, const FerEstimate& estimate) {
    nlohmann::json doc;
    doc["trials"] = estimate.trials;
    doc["erasures"] = estimate.erasures;
    doc["fer"] = estimate.fer;
    doc["ci_low"] = estimate.ci_low;
    doc["ci_high"] = estimate.ci_high;
    doc["stopped_on_target"] = estimate.stopped_on_target;
    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << '\n';
    flush_or_throw(out, path);
}

const char* method_name(DecisionMethod method) {
    switch (method) {
        case DecisionMethod::kAnalyticUnique:
            return "analytic_unique";
        case DecisionMethod::kUncodedShortcut:
            return "uncoded_shortcut";
        case DecisionMethod::kMonteCarloTiebreak:
            return "monte_carlo_tiebreak";
    }
    return "unknown";
}

void write_decision_csv(const std::string& path,
                        const BlocklengthDecision& decision) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(decision.rows.size());
    for (const CandidateRow& row : decision.rows) {
        cells.push_back(
            {std::to_string(row.n),
             std::to_string(std::uint64_t{1} << row.n),
             std::to_string(row.k),
             row.bounds_available ? format_double(row.bounds.upper) : "",
             row.bounds_available ? format_double(row.bounds.lower) : "",
             row.simulated ? format_double(row.mc_fer) : "",
             row.n == decision.n_star ? "1" : "0"});
    }
    write_csv(path,
              {std::string("method=") + method_name(decision.method),
               "n_star=" + std::to_string(decision.n_star)},
              {"n", "N", "K", "upper", "lower", "mc_fer", "chosen"}, cells);
}

void write_decision_json(const std::string& path,
                         const BlocklengthDecision& decision) {
    nlohmann::json doc;
    doc["n_star"] = decision.n_star;
    doc["method"] = method_name(decision.method);
    doc["tiebreak_candidates"] = decision.tiebreak_candidates;
    nlohmann::json rows = nlohmann::json::array();
    for (const CandidateRow& row : decision.rows) {
        nlohmann::json entry;
        entry["n"] = row.n;
        entry["N"] = std::uint64_t{1} << row.n;
        entry["K"] = row.k;
        entry["chosen"] = row.n == decision.n_star;
        if (row.bounds_available) {
            entry["upper"] = row.bounds.upper;
            entry["lower"] = row.bounds.lower;
            entry["upper_trivialized"] = row.bounds.upper_trivialized;
            entry["lower_trivialized"] = row.bounds.lower_trivialized;
        }
        if (row.simulated) {
            entry["mc_fer"] = row.mc_fer;
        }
        rows.push_back(entry);
    }
    doc["rows"] = rows;
    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << '\n';
    flush_or_throw(out, path);
}

}  // namespace pfl::io
