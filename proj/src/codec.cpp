#include "pfl/codec.hpp"

#include <cassert>
#include <string>
#include <utility>

#include "pfl/errors.hpp"
#include "pfl/rng.hpp"

namespace pfl {

namespace {

void require_block(std::size_t size, int n, const char* what) {
    if (n < 0 || n > 30) {
        throw ConfigError("n must lie in [0, 30], got " + std::to_string(n));
    }
    if (size != (std::size_t{1} << n)) {
        throw ConfigError(std::string(what) + " must have length 2^n = " +
                          std::to_string(std::size_t{1} << n) + ", got " +
                          std::to_string(size));
    }
}

std::uint32_t reverse_bits(std::uint32_t value, int width) {
    std::uint32_t out = 0;
    for (int b = 0; b < width; ++b) {
        out = (out << 1) | ((value >> b) & 1u);
    }
    return out;
}

}  // namespace

std::vector<std::uint8_t> polar_encode(const std::vector<std::uint8_t>& u, int n) {
    require_block(u.size(), n, "u");
    const std::size_t block = std::size_t{1} << n;
    std::vector<std::uint8_t> x(u);
    for (std::uint32_t i = 0; i < block; ++i) {
        const std::uint32_t j = reverse_bits(i, n);
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t half = 1; half < block; half <<= 1) {
        for (std::size_t base = 0; base < block; base += 2 * half) {
            for (std::size_t j = 0; j < half; ++j) {
                x[base + j] ^= x[base + half + j];
            }
        }
    }
    return x;
}

std::vector<Message> transmit_bec(const std::vector<std::uint8_t>& x, double p,
                                  std::uint64_t seed) {
    require_probability(p, "p");
    const std::uint64_t key = rng::derive(seed, rng::kStreamChannel);
    std::vector<Message> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = rng::bernoulli(p, key, i) ? kErased : message_from_bit(x[i]);
    }
    return y;
}

Message f_minus(Message m1, Message m2) {
    return static_cast<Message>(m1 * m2);
}

Message f_plus(Message m1, Message m2, std::uint8_t u) {
    // Integer division truncates toward zero, which is exactly the
    // round-half-to-zero rule: |combined| == 1 (one erased input) gives 0.
    const int combined = (u ? -m1 : m1) + m2;
    return static_cast<Message>(combined / 2);
}

namespace {

// Plus combine as the decoder applies it: with the partial sum u known, a
// lone surviving input still pins the bit (from the second branch directly,
// from the first after removing u), so the output is erased only when both
// inputs are.  This is the AND rule the erasure analysis is built on.
Message plus_combine(Message m1, Message m2, std::uint8_t u) {
    if (m2 != 0) return m2;
    return u ? static_cast<Message>(-m1) : m1;
}

}  // namespace

FaultPattern FaultPattern::none(int n) {
    if (n < 0 || n > 30) {
        throw ConfigError("n must lie in [0, 30], got " + std::to_string(n));
    }
    return FaultPattern(n, Mode::kNone);
}

FaultPattern FaultPattern::all_faults(int n) {
    FaultPattern pattern = none(n);
    pattern.mode_ = Mode::kAll;
    return pattern;
}

FaultPattern FaultPattern::from_flags(int n,
                                      std::vector<std::vector<std::uint8_t>> flags) {
    FaultPattern pattern = none(n);
    if (flags.size() != static_cast<std::size_t>(n)) {
        throw ConfigError("expected one flag row per level, want " +
                          std::to_string(n) + ", got " +
                          std::to_string(flags.size()));
    }
    for (const auto& row : flags) {
        require_block(row.size(), n, "flag row");
    }
    pattern.mode_ = Mode::kDense;
    pattern.dense_ = std::move(flags);
    return pattern;
}

FaultPattern FaultPattern::sampled(int n, double delta, int protected_levels,
                                   std::uint64_t seed) {
    require_probability(delta, "delta");
    if (protected_levels < 0) {
        throw ConfigError("protected_levels must be >= 0, got " +
                          std::to_string(protected_levels));
    }
    FaultPattern pattern = none(n);
    pattern.mode_ = Mode::kLazy;
    pattern.delta_ = delta;
    pattern.faulty_levels_ = protected_levels >= n ? 0 : n - protected_levels;
    pattern.seed_ = rng::derive(seed, rng::kStreamFault);
    return pattern;
}

bool FaultPattern::flag(int level, std::uint32_t type, std::uint32_t copy) const {
    assert(level >= 1 && level <= n_);
    assert(type < (std::uint32_t{1} << level));
    assert(copy < (std::uint32_t{1} << (n_ - level)));
    switch (mode_) {
        case Mode::kNone:
            return false;
        case Mode::kAll:
            return true;
        case Mode::kDense: {
            const std::uint32_t flat = (type << (n_ - level)) | copy;
            return dense_[static_cast<std::size_t>(level) - 1][flat] != 0;
        }
        case Mode::kLazy: {
            if (level > faulty_levels_ || delta_ <= 0.0) return false;
            const std::uint32_t flat = (type << (n_ - level)) | copy;
            const std::uint64_t counter =
                (static_cast<std::uint64_t>(level) - 1) * (std::uint64_t{1} << n_) +
                flat;
            return rng::bernoulli(delta_, seed_, counter);
        }
    }
    return false;
}

namespace {

// Shared scratch for one decode: message memo and partial-sum planes, one
// 2^n-entry row per level, node-major layout row[node << level | output].
struct DecodeScratch {
    int n;
    std::size_t block;
    std::vector<std::vector<Message>> memo;   // kUnset until computed
    std::vector<std::vector<std::uint8_t>> partial;
    const FaultPattern* faults;
    std::vector<TraceEntry>* trace;

    static constexpr Message kUnset = -2;

    DecodeScratch(int n_in, const std::vector<Message>& y,
                  const FaultPattern& faults_in, std::vector<TraceEntry>* trace_in)
        : n(n_in),
          block(std::size_t{1} << n_in),
          memo(static_cast<std::size_t>(n_in) + 1,
               std::vector<Message>(std::size_t{1} << n_in, kUnset)),
          partial(static_cast<std::size_t>(n_in) + 1,
                  std::vector<std::uint8_t>(std::size_t{1} << n_in, 0)),
          faults(&faults_in),
          trace(trace_in) {
        memo[0] = y;
    }

    Message message(int level, std::uint32_t node, std::uint32_t output) {
        Message& slot = memo[level][(node << level) | output];
        if (slot != kUnset) return slot;
        const Message a = message(level - 1, 2 * node, output >> 1);
        const Message b = message(level - 1, 2 * node + 1, output >> 1);
        Message m;
        if ((output & 1u) == 0) {
            m = f_minus(a, b);
        } else {
            const std::uint8_t u = partial[level][(node << level) | (output - 1)];
            m = plus_combine(a, b, u);
        }
        // Each message is written to memory once; a faulty write erases it
        // before anything downstream reads it.
        const bool faulted = faults->flag(level, output, node);
        if (faulted) m = kErased;
        slot = m;
        if (trace != nullptr) {
            trace->push_back(TraceEntry{
                level, (output << (n - level)) | node, m, faulted});
        }
        return m;
    }

    // Once decisions e and e+1 of a node are fixed, their XOR/identity images
    // become decisions of the children; complete child pairs keep cascading.
    void push_pair(int level, std::uint32_t node, std::uint32_t even) {
        const std::uint8_t s = partial[level][(node << level) | even];
        const std::uint8_t t = partial[level][(node << level) | (even + 1)];
        const std::uint32_t child_output = even >> 1;
        partial[level - 1][((2 * node) << (level - 1)) | child_output] =
            static_cast<std::uint8_t>(s ^ t);
        partial[level - 1][((2 * node + 1) << (level - 1)) | child_output] = t;
        if (level > 1 && (child_output & 1u) == 1) {
            push_pair(level - 1, 2 * node, child_output - 1);
            push_pair(level - 1, 2 * node + 1, child_output - 1);
        }
    }
};

}  // namespace

DecodeResult sc_decode(const std::vector<Message>& y, const CodeSpec& spec,
                       const InfoSet& info,
                       const std::vector<std::uint8_t>& frozen_values,
                       const FaultPattern& faults,
                       std::vector<TraceEntry>* trace) {
    validate(spec);
    require_block(y.size(), spec.n, "y");
    if (faults.levels() != spec.n) {
        throw ConfigError("fault pattern covers " +
                          std::to_string(faults.levels()) +
                          " levels, decoder needs " + std::to_string(spec.n));
    }
    const std::size_t block = std::size_t{1} << spec.n;
    for (Message m : y) {
        if (m < -1 || m > 1) {
            throw ConfigError("channel messages must be -1, 0, or +1");
        }
    }
    if (!frozen_values.empty() && frozen_values.size() != block) {
        throw ConfigError("frozen_values must be empty (all zero) or one entry "
                          "per channel");
    }
    for (std::uint32_t index : info.indices) {
        if (index >= block) {
            throw ConfigError("information index " + std::to_string(index) +
                              " out of range for block length " +
                              std::to_string(block));
        }
    }

    DecodeScratch scratch(spec.n, y, faults, trace);
    DecodeResult result;
    for (std::uint32_t i = 0; i < block; ++i) {
        const Message m = scratch.message(spec.n, 0, i);
        std::uint8_t decision;
        if (info.contains(i)) {
            if (m == kErased) {
                result.status = DecodeStatus::kFrameErasure;
                result.first_erased_index = i;
                result.decoded_bits.clear();
                return result;
            }
            decision = bit_from_message(m);
        } else {
            decision = frozen_values.empty() ? 0 : frozen_values[i];
        }
        scratch.partial[spec.n][i] = decision;
        if (spec.n > 0 && (i & 1u) == 1) {
            scratch.push_pair(spec.n, 0, i - 1);
        }
    }
    result.status = DecodeStatus::kDecoded;
    result.decoded_bits.assign(scratch.partial[spec.n].begin(),
                               scratch.partial[spec.n].end());
    return result;
}

std::vector<std::uint8_t> indicator_tree(
    const std::vector<std::uint8_t>& channel_erasures,
    const FaultPattern& faults) {
    const int n = faults.levels();
    require_block(channel_erasures.size(), n, "channel_erasures");
    std::vector<std::uint8_t> current(channel_erasures);
    for (auto& e : current) e = e ? 1 : 0;
    std::vector<std::uint8_t> next(current.size());
    for (int level = 1; level <= n; ++level) {
        const std::uint32_t nodes = std::uint32_t{1} << (n - level);
        const std::uint32_t outputs = std::uint32_t{1} << level;
        for (std::uint32_t node = 0; node < nodes; ++node) {
            for (std::uint32_t output = 0; output < outputs; ++output) {
                const std::uint32_t half = output >> 1;
                const std::uint8_t a =
                    current[((2 * node) << (level - 1)) | half];
                const std::uint8_t b =
                    current[((2 * node + 1) << (level - 1)) | half];
                std::uint8_t ind = (output & 1u) ? (a & b) : (a | b);
                if (faults.flag(level, output, node)) ind = 1;
                next[(node << level) | output] = ind;
            }
        }
        current.swap(next);
    }
    return current;
}

}  // namespace pfl
