#include "pfl/bounds.hpp"

#include <algorithm>

#include "pfl/errors.hpp"

namespace pfl {

double fer_upper_from_table(const ZTable& z, const InfoSet& info,
                            bool* trivialized) {
    double sum_z = 0.0;
    for (std::uint32_t index : info.indices) {
        if (index >= z.size()) {
            throw ConfigError("info index out of range for the Z table");
        }
        sum_z += z.values[index];
    }
    const bool trivial = sum_z > 1.0;
    if (trivialized != nullptr) {
        *trivialized = trivial;
    }
    return trivial ? 1.0 : sum_z;
}

FerBounds fer_bounds_from_tables(const ZTable& z, const CovarianceMatrix& cov,
                                 const InfoSet& info) {
    FerBounds bounds;
    if (info.indices.empty()) {
        return bounds;
    }
    bounds.upper = fer_upper_from_table(z, info, &bounds.upper_trivialized);

    double sum_z = 0.0;
    double max_z = 0.0;
    for (std::uint32_t index : info.indices) {
        sum_z += z.values[index];
        max_z = std::max(max_z, z.values[index]);
    }

    if (info.indices.size() == 1) {
        bounds.lower = sum_z;
        return bounds;
    }
    if (cov.level != z.level) {
        throw ConfigError("covariance and Z table levels disagree");
    }

    // Each unordered pair appears twice in the symmetric double sum, so
    // iterating i < j once absorbs the 1/2 factor exactly.
    double pair_sum = 0.0;
    for (std::size_t a = 0; a < info.indices.size(); ++a) {
        const std::uint32_t i = info.indices[a];
        const double zi = z.values[i];
        for (std::size_t b = a + 1; b < info.indices.size(); ++b) {
            const std::uint32_t j = info.indices[b];
            pair_sum += zi * z.values[j] + cov.at(i, j);
        }
    }
    bounds.lower = sum_z - pair_sum;
    if (bounds.lower < max_z) {
        bounds.lower = max_z;
        bounds.lower_trivialized = true;
    }
    return bounds;
}

FerBounds fer_bounds(const CodeSpec& spec, const InfoSet& info, int max_level) {
    validate(spec);
    const ZTable z =
        compute_z_table(spec.n, spec.p, spec.delta, spec.protected_levels);
    if (info.indices.size() < 2) {
        return fer_bounds_from_tables(z, CovarianceMatrix{spec.n, {}}, info);
    }
    const CovarianceMatrix cov = compute_covariance(spec, max_level);
    return fer_bounds_from_tables(z, cov, info);
}

std::vector<RateBoundsRow> bounds_sweep_rate(int n, double p, double delta,
                                             int protected_levels,
                                             const std::vector<double>& rates,
                                             int max_level) {
    CodeSpec spec{n, 0, p, delta, protected_levels};
    validate(spec);
    const ZTable z = compute_z_table(n, p, delta, protected_levels);
    const CovarianceMatrix cov = compute_covariance(spec, max_level);

    std::vector<RateBoundsRow> rows;
    rows.reserve(rates.size());
    for (double rate : rates) {
        RateBoundsRow row;
        row.rate = rate;
        row.k = k_from_rate(n, rate);
        row.bounds = fer_bounds_from_tables(z, cov, select_info_set(z, row.k));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pfl
