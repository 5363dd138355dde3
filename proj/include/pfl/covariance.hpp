#pragma once

#include <cstdint>
#include <vector>

#include "pfl/construction.hpp"
#include "pfl/z_table.hpp"

namespace pfl {

// Dense symmetric covariance matrix of the per-channel erasure indicators at
// one level.  Entry (i, j) is Cov[E_i, E_j]; the diagonal holds the Bernoulli
// variance Z_i (1 - Z_i).
struct CovarianceMatrix {
    int level = 0;
    std::vector<double> data;  // row-major, size 4^level

    std::size_t dim() const { return std::size_t{1} << level; }
    double at(std::size_t i, std::size_t j) const { return data[i * dim() + j]; }
    double& at(std::size_t i, std::size_t j) { return data[i * dim() + j]; }
};

// Dense matrices cost O(4^n) memory; refuse levels above this by default.
inline constexpr int kCovarianceLevelCap = 13;

// One level expansion.  For parents a, b with level-s erasure probabilities
// Za, Zb and covariance C (the diagonal passes the parent variance, which is
// exactly what sibling pairs require), the four children are
//   (a-, b-): (1-d)^2 (2 (1 - Za Zb) C + C^2)
//   (a-, b+): (1-d)^2 (2 (1 - Za) Zb C - C^2)
//   (a+, b-): (1-d)^2 (2 Za (1 - Zb) C - C^2)
//   (a+, b+): (1-d)^2 (2 Za Zb C + C^2)
// where d is the fault probability of this write level.  The child diagonal
// is then overwritten with the Bernoulli variance computed from the child
// Z table: the pair recursion applied to (i, i) would describe two
// independent copies of channel i, not the channel against itself.
CovarianceMatrix covariance_step(const CovarianceMatrix& prev,
                                 const ZTable& z_prev, double delta_level);

// Runs the recursion from level 0 (variance p (1 - p)) to level spec.n with
// the same per-level fault schedule as compute_z_table.  Throws ResourceError
// when spec.n exceeds max_level.
CovarianceMatrix compute_covariance(const CodeSpec& spec,
                                    int max_level = kCovarianceLevelCap);

}  // namespace pfl
