#pragma once

#include <cstdint>
#include <vector>

#include "pfl/z_table.hpp"

namespace pfl {

// Full description of one code instance: block length 2^n, k information
// channels, design erasure probability p, per-write fault probability delta,
// and how many decoder levels nearest the root are implemented fault free.
struct CodeSpec {
    int n = 0;
    std::uint64_t k = 0;
    double p = 0.5;
    double delta = 0.0;
    int protected_levels = 0;

    std::uint64_t block_length() const { return std::uint64_t{1} << n; }
};

void validate(const CodeSpec& spec);

// Sorted (ascending) indices of the channels that carry information.
struct InfoSet {
    std::vector<std::uint32_t> indices;

    std::uint64_t size() const { return indices.size(); }
    bool contains(std::uint32_t index) const;
};

// k = ceil(rate * 2^n); requires 0 <= rate <= 1.
std::uint64_t k_from_rate(int n, double rate);

// The k channels with the smallest erasure probability; ties resolved toward
// the smaller channel index so the selection is deterministic.
InfoSet select_info_set(const ZTable& table, std::uint64_t k);

// Hardware cost and rate cost of protecting the n_p levels nearest the root.
// A successive cancellation decoder for length 2^n keeps 2^{n-s} memory
// elements at level s, so the whole tree has 2^{n+1} - 1 and the protected
// top slice has 2^{n_p} - 1 of them.
struct ProtectionReport {
    int n = 0;
    int protected_levels = 0;
    std::uint64_t protected_units = 0;  // 2^{n_p} - 1
    std::uint64_t total_units = 0;      // 2^{n+1} - 1
    double protected_fraction = 0.0;
    double rate_loss = 0.0;  // capacity given up by the unprotected levels
};

// Capacity loss of a decoder with `unprotected_levels` faulty write levels:
// (1 - (1 - delta)^unprotected_levels) * (1 - p).
double rate_loss(double delta, double p, int unprotected_levels);

ProtectionReport protection_report(int n, int protected_levels, double p,
                                   double delta);

}  // namespace pfl
