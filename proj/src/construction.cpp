#include "pfl/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pfl/errors.hpp"

namespace pfl {

void validate(const CodeSpec& spec) {
    if (spec.n < 0 || spec.n > 30) {
        throw ConfigError("n must lie in [0, 30]");
    }
    if (spec.k > spec.block_length()) {
        throw ConfigError("k exceeds the block length");
    }
    require_probability(spec.p, "p");
    require_probability(spec.delta, "delta");
    if (spec.protected_levels < 0 || spec.protected_levels > spec.n + 1) {
        throw ConfigError("protected_levels must lie in [0, n + 1]");
    }
}

bool InfoSet::contains(std::uint32_t index) const {
    return std::binary_search(indices.begin(), indices.end(), index);
}

std::uint64_t k_from_rate(int n, double rate) {
    if (n < 0 || n > 30) {
        throw ConfigError("n must lie in [0, 30]");
    }
    if (!(rate >= 0.0 && rate <= 1.0)) {
        throw ConfigError("rate must lie in [0, 1]");
    }
    const double scaled = rate * static_cast<double>(std::uint64_t{1} << n);
    return static_cast<std::uint64_t>(std::ceil(scaled));
}

InfoSet select_info_set(const ZTable& table, std::uint64_t k) {
    if (k > table.size()) {
        throw ConfigError("k exceeds the number of channels");
    }
    std::vector<std::uint32_t> order(table.size());
    std::iota(order.begin(), order.end(), 0u);
    // stable_sort on the value alone keeps equal-value channels in index
    // order, which is the documented tie rule.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return table.values[a] < table.values[b];
                     });
    order.resize(k);
    std::sort(order.begin(), order.end());
    return InfoSet{std::move(order)};
}

double rate_loss(double delta, double p, int unprotected_levels) {
    require_probability(delta, "delta");
    require_probability(p, "p");
    if (unprotected_levels < 0) {
        throw ConfigError("unprotected_levels must be nonnegative");
    }
    return (1.0 - std::pow(1.0 - delta, unprotected_levels)) * (1.0 - p);
}

ProtectionReport protection_report(int n, int protected_levels, double p,
                                   double delta) {
    if (n < 0 || n > 30) {
        throw ConfigError("n must lie in [0, 30]");
    }
    if (protected_levels < 0 || protected_levels > n + 1) {
        throw ConfigError("protected_levels must lie in [0, n + 1]");
    }
    require_probability(p, "p");
    require_probability(delta, "delta");

    ProtectionReport report;
    report.n = n;
    report.protected_levels = protected_levels;
    report.protected_units = (std::uint64_t{1} << protected_levels) - 1;
    report.total_units = (std::uint64_t{1} << (n + 1)) - 1;
    report.protected_fraction = static_cast<double>(report.protected_units) /
                                static_cast<double>(report.total_units);
    // The memory tree has n + 1 write levels including the root, so with n_p
    // protected the remaining n + 1 - n_p contribute to the capacity loss.
    const int unprotected = std::max(0, (n + 1) - protected_levels);
    report.rate_loss = rate_loss(delta, p, unprotected);
    return report;
}

}  // namespace pfl
