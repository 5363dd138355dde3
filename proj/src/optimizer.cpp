#include "pfl/optimizer.hpp"

#include <algorithm>
#include <string>

#include "pfl/errors.hpp"
#include "pfl/montecarlo.hpp"
#include "pfl/rng.hpp"
#include "pfl/z_table.hpp"

namespace pfl {

namespace {

CodeSpec spec_for(int n, std::uint64_t k, double p, double delta,
                  int protected_levels) {
    CodeSpec spec;
    spec.n = n;
    spec.k = k;
    spec.p = p;
    spec.delta = delta;
    spec.protected_levels = protected_levels;
    return spec;
}

// [low, high] intervals touch or overlap.
bool intervals_overlap(const FerBounds& a, const FerBounds& b) {
    return a.lower <= b.upper && b.lower <= a.upper;
}

}  // namespace

BlocklengthDecision optimal_blocklength(double rate, double p, double delta,
                                        int protected_levels,
                                        const OptimizerOptions& options) {
    require_probability(p, "p");
    require_probability(delta, "delta");
    if (!(rate > 0.0 && rate < 1.0)) {
        throw ConfigError("rate must lie in (0, 1), got " + std::to_string(rate));
    }
    if (options.n_max < 0 || options.n_max > 30) {
        throw ConfigError("n_max must lie in [0, 30], got " +
                          std::to_string(options.n_max));
    }
    if (protected_levels < 0) {
        throw ConfigError("protected_levels must be >= 0, got " +
                          std::to_string(protected_levels));
    }

    BlocklengthDecision decision;

    // Every faulty write level puts a floor of delta under every synthesized
    // channel, so a raw channel better than the floor beats every code.
    if (p < delta) {
        decision.n_star = 0;
        decision.method = DecisionMethod::kUncodedShortcut;
        CandidateRow row;
        row.n = 0;
        row.k = 1;
        row.bounds_available = true;
        row.bounds.upper = p;
        row.bounds.lower = p;
        decision.rows.push_back(row);
        return decision;
    }

    for (int n = 0; n <= options.n_max; ++n) {
        CandidateRow row;
        row.n = n;
        row.k = k_from_rate(n, rate);
        const CodeSpec spec = spec_for(n, row.k, p, delta, protected_levels);
        if (n <= options.covariance_cap) {
            const ZTable z = compute_z_table(n, p, delta, protected_levels);
            const InfoSet info = select_info_set(z, row.k);
            row.bounds = fer_bounds(spec, info, options.covariance_cap);
            row.bounds_available = true;
        }
        decision.rows.push_back(row);
    }

    // A candidate wins outright when its upper bound does not exceed any
    // rival's lower bound; that needs every rival's bounds to exist.
    const bool all_available =
        std::all_of(decision.rows.begin(), decision.rows.end(),
                    [](const CandidateRow& r) { return r.bounds_available; });
    if (all_available) {
        int winner = -1;
        for (const CandidateRow& row : decision.rows) {
            const bool dominates = std::all_of(
                decision.rows.begin(), decision.rows.end(),
                [&](const CandidateRow& other) {
                    return other.n == row.n ||
                           row.bounds.upper <= other.bounds.lower;
                });
            if (dominates) {
                if (winner >= 0) {
                    winner = -1;  // two exact ties: fall through to simulation
                    break;
                }
                winner = row.n;
            }
        }
        if (winner >= 0) {
            decision.n_star = winner;
            decision.method = DecisionMethod::kAnalyticUnique;
            return decision;
        }
    }

    // Simulate the cluster of candidates whose intervals touch the one with
    // the smallest upper bound, plus anything whose bounds we could not get.
    const CandidateRow* best = nullptr;
    for (const CandidateRow& row : decision.rows) {
        if (!row.bounds_available) continue;
        if (best == nullptr || row.bounds.upper < best->bounds.upper) {
            best = &row;
        }
    }
    for (CandidateRow& row : decision.rows) {
        const bool contender =
            !row.bounds_available ||
            (best != nullptr && intervals_overlap(row.bounds, best->bounds));
        if (contender) {
            decision.tiebreak_candidates.push_back(row.n);
        }
    }

    double best_fer = 2.0;
    int best_n = 0;
    for (int n : decision.tiebreak_candidates) {
        CandidateRow& row = decision.rows[n];
        const CodeSpec spec = spec_for(n, row.k, p, delta, protected_levels);
        const ZTable z = compute_z_table(n, p, delta, protected_levels);
        const InfoSet info = select_info_set(z, row.k);
        const FerEstimate estimate = estimate_fer(
            spec, info, options.mc_budget, rng::derive(options.seed, n));
        row.simulated = true;
        row.mc_fer = estimate.fer;
        if (estimate.fer < best_fer) {  // ties keep the earlier (smaller) n
            best_fer = estimate.fer;
            best_n = n;
        }
    }
    decision.n_star = best_n;
    decision.method = DecisionMethod::kMonteCarloTiebreak;
    return decision;
}

}  // namespace pfl
