#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfl/construction.hpp"

namespace pfl {

// Decoder message over the erasure channel: +1 carries bit 0, -1 carries
// bit 1, 0 is an erasure.  Erasures are the only corruption in this model;
// a nonzero message is always correct.
using Message = std::int8_t;
inline constexpr Message kErased = 0;

inline Message message_from_bit(std::uint8_t bit) { return bit ? -1 : +1; }
inline std::uint8_t bit_from_message(Message m) { return m < 0 ? 1 : 0; }

// x = u * B_n * F^{xn}: bit-reversal permutation followed by the butterfly
// Kronecker transform, O(N log N) in place.  Self-inverse over GF(2).
std::vector<std::uint8_t> polar_encode(const std::vector<std::uint8_t>& u, int n);

// Independent erasure of each codeword symbol with probability p; survivors
// become +1/-1 messages.  Deterministic in (x, p, seed).
std::vector<Message> transmit_bec(const std::vector<std::uint8_t>& x, double p,
                                  std::uint64_t seed);

// Decoder message kernels.  f_minus is the product combine (erased when
// either input is).  f_plus is round(((-1)^u m1 + m2) / 2) with both
// half-integer ties mapped to 0, i.e. a lone surviving input is treated as a
// tie and erased.  Note the successive cancellation decoder below does NOT
// use this tie rule internally: its plus combine keeps a lone survivor, which
// is what the erasure-indicator semantics (and the Z recursion) describe.
Message f_minus(Message m1, Message m2);
Message f_plus(Message m1, Message m2, std::uint8_t u);

// Erasure flags for every intermediate message write, one per (level, type,
// copy) with level in 1..n.  Levels count from the raw channels (level 0,
// never faulted) to the root decisions (level n).  Position within a level is
// type * 2^{n - level} + copy.  `sampled` draws flags lazily from a
// counter-based generator, so a decoder that halts early leaves later flags
// untouched without desynchronizing anything; protected levels draw no
// faults.
class FaultPattern {
  public:
    static FaultPattern none(int n);
    static FaultPattern all_faults(int n);
    // flags[level - 1] holds the 2^n bits of that level, type-major.
    static FaultPattern from_flags(int n,
                                   std::vector<std::vector<std::uint8_t>> flags);
    static FaultPattern sampled(int n, double delta, int protected_levels,
                                std::uint64_t seed);

    bool flag(int level, std::uint32_t type, std::uint32_t copy) const;
    int levels() const { return n_; }

  private:
    enum class Mode { kNone, kAll, kDense, kLazy };
    FaultPattern(int n, Mode mode) : n_(n), mode_(mode) {}

    int n_ = 0;
    Mode mode_ = Mode::kNone;
    std::vector<std::vector<std::uint8_t>> dense_;
    double delta_ = 0.0;
    int faulty_levels_ = 0;
    std::uint64_t seed_ = 0;
};

enum class DecodeStatus { kDecoded, kFrameErasure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::kDecoded;
    std::vector<std::uint8_t> decoded_bits;          // valid iff kDecoded
    std::optional<std::uint32_t> first_erased_index;  // set iff kFrameErasure
};

// One decoded or faulted intermediate message, for debugging dumps.
struct TraceEntry {
    int level = 0;
    std::uint32_t position = 0;  // type * 2^{n-level} + copy
    Message message = 0;
    bool fault_flag = false;
};

// Successive cancellation decoding of y (level-0 messages in codeword order).
// Channels are decoded in ascending index order; frozen channels take
// frozen_values[index]; decoding halts with kFrameErasure at the first
// information channel whose decision message is erased.  Every computed
// message at levels 1..n is replaced by 0 when its fault flag is set, once at
// write time.  Internal hard partial sums are fault free.
DecodeResult sc_decode(const std::vector<Message>& y, const CodeSpec& spec,
                       const InfoSet& info,
                       const std::vector<std::uint8_t>& frozen_values,
                       const FaultPattern& faults,
                       std::vector<TraceEntry>* trace = nullptr);

// Erasure-propagation oracle: given which codeword symbols were erased and a
// fault pattern, returns the root erasure indicator of every channel.  The
// minus combine ORs its inputs, the plus combine ANDs them, and each write
// ORs in its fault flag -- the indicator mirror of the decoder, with no early
// halt.  A frame decodes iff no information channel indicator is set.
std::vector<std::uint8_t> indicator_tree(
    const std::vector<std::uint8_t>& channel_erasures,
    const FaultPattern& faults);

}  // namespace pfl
