#pragma once

#include <vector>

#include "pfl/construction.hpp"
#include "pfl/covariance.hpp"
#include "pfl/z_table.hpp"

namespace pfl {

// Analytic frame-erasure-rate bracket for successive cancellation decoding.
// upper is the union bound sum(Z_i), clamped to 1; lower is the pairwise
// (Bonferroni) bound sum(Z_i) - sum_{i<j} (Z_i Z_j + C_ij), replaced by
// max(Z_i) whenever the pair correction drives it below that trivial bound.
// The *_trivialized flags record that a substitution happened.
struct FerBounds {
    double upper = 0.0;
    double lower = 0.0;
    bool upper_trivialized = false;
    bool lower_trivialized = false;
};

// Union upper bound alone: min(1, sum of info-set Z values).  Needs no
// covariance, so it is cheap at any blocklength.
double fer_upper_from_table(const ZTable& z, const InfoSet& info,
                            bool* trivialized = nullptr);

// Bounds from precomputed level-n tables (info indices refer to table rows).
// The covariance matrix is not touched when info has fewer than two indices.
FerBounds fer_bounds_from_tables(const ZTable& z, const CovarianceMatrix& cov,
                                 const InfoSet& info);

// Convenience wrapper: builds the Z table and covariance for spec and selects
// nothing -- the caller provides the info set (usually select_info_set).
FerBounds fer_bounds(const CodeSpec& spec, const InfoSet& info,
                     int max_level = kCovarianceLevelCap);

struct RateBoundsRow {
    double rate = 0.0;
    std::uint64_t k = 0;
    FerBounds bounds;
};

// Shares one Z table / covariance computation across a whole rate sweep.
std::vector<RateBoundsRow> bounds_sweep_rate(int n, double p, double delta,
                                             int protected_levels,
                                             const std::vector<double>& rates,
                                             int max_level = kCovarianceLevelCap);

}  // namespace pfl
