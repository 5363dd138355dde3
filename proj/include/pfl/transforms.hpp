#pragma once

#include "pfl/errors.hpp"

namespace pfl {

// One polarization step of a BEC erasure probability.  The minus output is the
// degraded channel, the plus output the upgraded one:
//   t_minus(e) = 2e - e^2        t_plus(e) = e^2
// The faulty variants model a decoder whose freshly written message is itself
// erased with probability delta, independently of everything else:
//   t_*_faulty(e, delta) = t_*(e) * (1 - delta) + delta
// They are implemented by scaling the exact fault-free value so that
// delta == 0 reduces to the fault-free transform bit for bit.
//
// Useful identities (all covered by tests):
//   t_*_faulty(e, delta) >= delta                        (erasure floor)
//   (t_minus_faulty + t_plus_faulty) / 2 = e + (1-e)*delta  (mean step)
//   fixed points of t_plus_faulty: delta/(1-delta) and 1 (delta <= 1/2)
//   both transforms are nondecreasing in e and in delta.

inline double t_minus(double epsilon) {
    require_probability(epsilon, "epsilon");
    return 2.0 * epsilon - epsilon * epsilon;
}

inline double t_plus(double epsilon) {
    require_probability(epsilon, "epsilon");
    return epsilon * epsilon;
}

inline double t_minus_faulty(double epsilon, double delta) {
    require_probability(delta, "delta");
    return t_minus(epsilon) * (1.0 - delta) + delta;
}

inline double t_plus_faulty(double epsilon, double delta) {
    require_probability(delta, "delta");
    return t_plus(epsilon) * (1.0 - delta) + delta;
}

}  // namespace pfl
