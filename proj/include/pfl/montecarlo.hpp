#pragma once

#include <cstdint>
#include <functional>

#include "pfl/construction.hpp"

namespace pfl {

// 95% Wilson score interval for `successes` out of `trials`.
struct Interval {
    double low = 0.0;
    double high = 1.0;
};

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct McOptions {
    // Stop once this many frame erasures have been seen (0 = disabled, always
    // run the full budget).  Stopping is resolved on the ordered frame
    // sequence, so the outcome does not depend on the worker-thread count.
    std::uint64_t target_erasures = 0;
    // Invoked after each wave with (frames_done, frames_budget, erasures).
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> progress;
};

struct FerEstimate {
    std::uint64_t trials = 0;    // frames actually evaluated
    std::uint64_t erasures = 0;  // frames that failed to decode
    double fer = 0.0;
    double ci_low = 0.0;   // 95% Wilson interval
    double ci_high = 1.0;
    bool stopped_on_target = false;
};

// Simulates `trials` random frames end to end (payload, encode, erasure
// channel, faulty decode) and counts frame erasures.  Every frame is a pure
// function of (seed, frame index), so results are reproducible bit for bit
// regardless of thread count.
FerEstimate estimate_fer(const CodeSpec& spec, const InfoSet& info,
                         std::uint64_t trials, std::uint64_t seed,
                         const McOptions& options = {});

// Empirical cross-check of the analytic bounds: simulates the code and
// reports whether the Wilson interval intersects [lower, upper].
struct BoundsValidation {
    FerEstimate estimate;
    struct {
        double upper = 0.0;
        double lower = 0.0;
    } bounds;
    bool pass = false;
};

BoundsValidation validate_bounds(const CodeSpec& spec, const InfoSet& info,
                                 std::uint64_t trials, std::uint64_t seed);

}  // namespace pfl
