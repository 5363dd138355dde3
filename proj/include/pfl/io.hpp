#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfl/bounds.hpp"
#include "pfl/construction.hpp"
#include "pfl/montecarlo.hpp"
#include "pfl/optimizer.hpp"
#include "pfl/z_table.hpp"

namespace pfl::io {

// Every CSV artifact starts with this schema-version comment line.
inline constexpr const char* kCsvVersionLine = "# polar-fault-lab v1";

// 17 significant digits: enough to reproduce any double bit for bit.
std::string format_double(double value);

// Writes the version line, extra `# `-prefixed comment lines, a header row,
// and preformatted data rows.  Throws ConfigError when the file cannot be
// opened and on ragged rows.
void write_csv(const std::string& path,
               const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

// Code definition document: keys n, k, p, delta, protected_levels plus the
// sorted information set.  read_code_json round-trips write_code_json
// exactly.
void write_code_json(const std::string& path, const CodeSpec& spec,
                     const InfoSet& info);
std::pair<CodeSpec, InfoSet> read_code_json(const std::string& path);

struct ZRow {
    std::uint32_t index = 0;
    std::string sign;
    double z = 0.0;
};

std::vector<ZRow> z_rows(const ZTable& table);         // channel-index order
std::vector<ZRow> sorted_z_rows(const ZTable& table);  // z descending, index ascending
void write_z_csv(const std::string& path, const std::vector<ZRow>& rows);

void write_info_csv(const std::string& path, const InfoSet& info);

// Rate sweep at fixed n: columns rate, upper, lower, and the trivialized flags.
void write_rate_bounds_csv(const std::string& path,
                           const std::vector<RateBoundsRow>& rows);

// Blocklength sweep at fixed rate: same columns keyed by n.
struct NBoundsRow {
    int n = 0;
    FerBounds bounds;
};
void write_n_bounds_csv(const std::string& path,
                        const std::vector<NBoundsRow>& rows);

void write_estimate_csv(const std::string& path, const FerEstimate& estimate);
void write_estimate_json(const std::string& path, const FerEstimate& estimate);

const char* method_name(DecisionMethod method);
void write_decision_csv(const std::string& path,
                        const BlocklengthDecision& decision);
void write_decision_json(const std::string& path,
                         const BlocklengthDecision& decision);

}  // namespace pfl::io
