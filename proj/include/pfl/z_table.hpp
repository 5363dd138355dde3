#pragma once

#include <cstdint>
#include <vector>

#include "pfl/errors.hpp"

namespace pfl {

// Erasure probabilities of all synthetic channels at one level.  Entry i of a
// level-s table is the channel named by the length-s sign string of i.
struct ZTable {
    int level = 0;
    std::vector<double> values;  // size 2^level, each in [0, 1]

    std::size_t size() const { return values.size(); }
};

// One level expansion: out[2i] = t_minus_faulty(in[i], delta),
// out[2i+1] = t_plus_faulty(in[i], delta).
std::vector<double> z_step(const std::vector<double>& values, double delta);

// Builds the level-n table starting from a single raw-channel entry p.
// Faults hit the first n - protected_levels steps (counted from the raw
// channels); the protected_levels steps nearest the root are fault free.
// protected_levels may be n + 1, which also covers the conceptual root write
// and is equivalent to a fully fault-free decoder.
ZTable compute_z_table(int n, double p, double delta, int protected_levels = 0);

// Closed form for the mean of a level-s table with all steps faulty:
// 1 - (1 - p) * (1 - delta)^s.
double expected_epsilon(double p, double delta, int steps);

// One random walk down the transform tree: element 0 is p, element j applies
// a fair random choice of t_minus_faulty / t_plus_faulty to element j-1.
// Deterministic in (p, delta, steps, seed).
std::vector<double> sample_epsilon_path(double p, double delta, int steps,
                                        std::uint64_t seed);

}  // namespace pfl
