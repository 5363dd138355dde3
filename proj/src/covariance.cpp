#include "pfl/covariance.hpp"

#include <string>

#include "pfl/errors.hpp"
#include "pfl/parallel.hpp"

namespace pfl {

CovarianceMatrix covariance_step(const CovarianceMatrix& prev,
                                 const ZTable& z_prev, double delta_level) {
    if (prev.level != z_prev.level) {
        throw ConfigError("covariance and Z table levels disagree");
    }
    require_probability(delta_level, "delta");

    const std::size_t m = prev.dim();
    const std::vector<double> z_next = z_step(z_prev.values, delta_level);
    const double scale = (1.0 - delta_level) * (1.0 - delta_level);

    CovarianceMatrix next;
    next.level = prev.level + 1;
    next.data.resize(4 * m * m);
    const std::size_t dim = 2 * m;

    // Entries are independent of one another, so rows can be filled in
    // parallel; only the upper triangle is computed and then mirrored.
    parallel_for(0, m, [&](std::size_t pa) {
        const double za = z_prev.values[pa];
        for (std::size_t pb = pa; pb < m; ++pb) {
            const double zb = z_prev.values[pb];
            const double c = prev.at(pa, pb);
            const double c2 = c * c;
            const double mm = scale * (2.0 * (1.0 - za) * (1.0 - zb) * c + c2);
            const double mp = scale * (2.0 * (1.0 - za) * zb * c - c2);
            const double pm = scale * (2.0 * za * (1.0 - zb) * c - c2);
            const double pp = scale * (2.0 * za * zb * c + c2);
            next.data[(2 * pa) * dim + (2 * pb)] = mm;
            next.data[(2 * pa) * dim + (2 * pb + 1)] = mp;
            next.data[(2 * pa + 1) * dim + (2 * pb)] = pm;
            next.data[(2 * pa + 1) * dim + (2 * pb + 1)] = pp;
        }
    });
    parallel_for(0, dim, [&](std::size_t i) {
        for (std::size_t j = 0; j < i; ++j) {
            next.data[i * dim + j] = next.data[j * dim + i];
        }
    });
    for (std::size_t i = 0; i < dim; ++i) {
        next.data[i * dim + i] = z_next[i] * (1.0 - z_next[i]);
    }
    return next;
}

CovarianceMatrix compute_covariance(const CodeSpec& spec, int max_level) {
    validate(spec);
    if (spec.n > max_level) {
        throw ResourceError(
            "dense covariance matrices cost O(4^n) memory; n = " +
            std::to_string(spec.n) + " exceeds the cap of " +
            std::to_string(max_level));
    }

    const int faulty_steps = std::max(0, spec.n - spec.protected_levels);
    CovarianceMatrix cov;
    cov.level = 0;
    cov.data = {spec.p * (1.0 - spec.p)};
    ZTable z;
    z.level = 0;
    z.values = {spec.p};
    for (int step = 1; step <= spec.n; ++step) {
        const double delta_level = step <= faulty_steps ? spec.delta : 0.0;
        cov = covariance_step(cov, z, delta_level);
        z.values = z_step(z.values, delta_level);
        z.level = step;
    }
    return cov;
}

}  // namespace pfl
