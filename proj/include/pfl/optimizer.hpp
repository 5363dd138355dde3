#pragma once

#include <cstdint>
#include <vector>

#include "pfl/bounds.hpp"
#include "pfl/covariance.hpp"

namespace pfl {

enum class DecisionMethod {
    // One candidate's upper bound sits at or below every rival's lower bound.
    kAnalyticUnique,
    // Every synthesized channel carries at least the write-fault floor, so
    // when the raw channel is already better than that floor the best code is
    // no code at all (n = 0).
    kUncodedShortcut,
    // The bound intervals overlap; candidates were simulated and the lowest
    // estimated erasure rate won (ties to the smaller n).
    kMonteCarloTiebreak,
};

struct CandidateRow {
    int n = 0;
    std::uint64_t k = 0;
    bool bounds_available = false;  // false above the covariance size cap
    FerBounds bounds;
    bool simulated = false;
    double mc_fer = 0.0;
};

struct BlocklengthDecision {
    int n_star = 0;
    DecisionMethod method = DecisionMethod::kAnalyticUnique;
    std::vector<CandidateRow> rows;           // one per n in 0..n_max
    std::vector<int> tiebreak_candidates;     // empty unless a tiebreak ran
};

struct OptimizerOptions {
    int n_max = 12;
    std::uint64_t mc_budget = 20000;  // frames per candidate in a tiebreak
    std::uint64_t seed = 1;
    int covariance_cap = kCovarianceLevelCap;
};

// Picks the block-length exponent in 0..n_max minimizing frame erasure rate
// for a rate-`rate` code at design erasure probability p and write-fault
// probability delta.  Uses the analytic bounds whenever they separate one
// candidate from the rest and falls back to simulation for the overlapping
// cluster otherwise.  Requires 0 < rate < 1.
BlocklengthDecision optimal_blocklength(double rate, double p, double delta,
                                        int protected_levels = 0,
                                        const OptimizerOptions& options = {});

}  // namespace pfl
