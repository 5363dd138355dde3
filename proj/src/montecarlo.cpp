#include "pfl/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfl/bounds.hpp"
#include "pfl/codec.hpp"
#include "pfl/errors.hpp"
#include "pfl/parallel.hpp"
#include "pfl/rng.hpp"

namespace pfl {

namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::uint64_t kWave = 1024;

// Runs one frame end to end; returns true when the frame is erased.
bool run_frame(const CodeSpec& spec, const InfoSet& info,
               std::uint64_t frame_key) {
    const std::size_t block = std::size_t{1} << spec.n;
    std::vector<std::uint8_t> u(block, 0);
    const std::uint64_t payload_key = rng::derive(frame_key, rng::kStreamPayload);
    for (std::size_t j = 0; j < info.indices.size(); ++j) {
        u[info.indices[j]] = static_cast<std::uint8_t>(rng::bits(payload_key, j) & 1);
    }
    const std::vector<std::uint8_t> x = polar_encode(u, spec.n);
    const std::vector<Message> y = transmit_bec(x, spec.p, frame_key);
    const FaultPattern faults = FaultPattern::sampled(
        spec.n, spec.delta, spec.protected_levels, frame_key);
    const DecodeResult result = sc_decode(y, spec, info, {}, faults);
    if (result.status == DecodeStatus::kDecoded && result.decoded_bits != u) {
        // Erasures are the only channel and fault effect, so a decoded frame
        // can never carry wrong bits; reaching this line is a defect.
        throw std::logic_error("decoder returned wrong bits on an erasure-only "
                               "channel");
    }
    return result.status == DecodeStatus::kFrameErasure;
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return Interval{0.0, 1.0};
    if (successes > trials) {
        throw ConfigError("successes exceed trials");
    }
    const double nd = static_cast<double>(trials);
    const double kd = static_cast<double>(successes);
    const double z2 = kZ95 * kZ95;
    const double denom = nd + z2;
    const double center = (kd + z2 / 2.0) / denom;
    const double spread = (kZ95 / denom) *
        std::sqrt(kd * (nd - kd) / nd + z2 / 4.0);
    // At the extremes center and spread cancel exactly in theory but not in
    // floating point, so pin the limits instead of leaving ~1e-19 residue.
    return Interval{successes == 0 ? 0.0 : std::max(0.0, center - spread),
                    successes == trials ? 1.0
                                        : std::min(1.0, center + spread)};
}

FerEstimate estimate_fer(const CodeSpec& spec, const InfoSet& info,
                         std::uint64_t trials, std::uint64_t seed,
                         const McOptions& options) {
    validate(spec);
    if (trials == 0) {
        throw ConfigError("trials must be >= 1");
    }
    const std::size_t block = std::size_t{1} << spec.n;
    for (std::uint32_t index : info.indices) {
        if (index >= block) {
            throw ConfigError("information index " + std::to_string(index) +
                              " out of range for block length " +
                              std::to_string(block));
        }
    }

    FerEstimate estimate;
    std::vector<std::uint8_t> erased(kWave);
    for (std::uint64_t base = 0; base < trials && !estimate.stopped_on_target;
         base += kWave) {
        const std::uint64_t wave = std::min(kWave, trials - base);
        parallel_for(0, wave, [&](std::size_t offset) {
            const std::uint64_t frame_key = rng::derive(seed, base + offset);
            erased[offset] = run_frame(spec, info, frame_key) ? 1 : 0;
        });
        // Fold the wave in frame order so an erasure target always stops at
        // the same frame no matter how the wave was scheduled.
        for (std::uint64_t offset = 0; offset < wave; ++offset) {
            estimate.trials += 1;
            estimate.erasures += erased[offset];
            if (options.target_erasures > 0 &&
                estimate.erasures >= options.target_erasures) {
                estimate.stopped_on_target = true;
                break;
            }
        }
        if (options.progress) {
            options.progress(estimate.trials, trials, estimate.erasures);
        }
    }
    estimate.fer = static_cast<double>(estimate.erasures) /
                   static_cast<double>(estimate.trials);
    const Interval ci = wilson_interval(estimate.erasures, estimate.trials);
    estimate.ci_low = ci.low;
    estimate.ci_high = ci.high;
    return estimate;
}

BoundsValidation validate_bounds(const CodeSpec& spec, const InfoSet& info,
                                 std::uint64_t trials, std::uint64_t seed) {
    BoundsValidation report;
    const FerBounds bounds = fer_bounds(spec, info);
    report.bounds.upper = bounds.upper;
    report.bounds.lower = bounds.lower;
    report.estimate = estimate_fer(spec, info, trials, seed);
    report.pass = report.estimate.ci_low <= bounds.upper &&
                  bounds.lower <= report.estimate.ci_high;
    return report;
}

}  // namespace pfl
