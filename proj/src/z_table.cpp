#include "pfl/z_table.hpp"

#include <cmath>

#include "pfl/rng.hpp"
#include "pfl/transforms.hpp"

namespace pfl {

namespace {

void require_level_count(int n) {
    if (n < 0 || n > 30) {
        throw ConfigError("n must lie in [0, 30], got " + std::to_string(n));
    }
}

}  // namespace

std::vector<double> z_step(const std::vector<double>& values, double delta) {
    std::vector<double> next(values.size() * 2);
    for (std::size_t i = 0; i < values.size(); ++i) {
        next[2 * i] = t_minus_faulty(values[i], delta);
        next[2 * i + 1] = t_plus_faulty(values[i], delta);
    }
    return next;
}

ZTable compute_z_table(int n, double p, double delta, int protected_levels) {
    require_level_count(n);
    require_probability(p, "p");
    require_probability(delta, "delta");
    if (protected_levels < 0 || protected_levels > n + 1) {
        throw ConfigError("protected_levels must lie in [0, n + 1]");
    }

    const int faulty_steps = std::max(0, n - protected_levels);
    ZTable table;
    table.level = n;
    table.values = {p};
    for (int step = 1; step <= n; ++step) {
        table.values = z_step(table.values, step <= faulty_steps ? delta : 0.0);
    }
    return table;
}

double expected_epsilon(double p, double delta, int steps) {
    require_probability(p, "p");
    require_probability(delta, "delta");
    if (steps < 0) {
        throw ConfigError("steps must be nonnegative");
    }
    return 1.0 - (1.0 - p) * std::pow(1.0 - delta, steps);
}

std::vector<double> sample_epsilon_path(double p, double delta, int steps,
                                        std::uint64_t seed) {
    require_probability(p, "p");
    require_probability(delta, "delta");
    if (steps < 0) {
        throw ConfigError("steps must be nonnegative");
    }

    std::vector<double> path(static_cast<std::size_t>(steps) + 1);
    path[0] = p;
    for (int j = 1; j <= steps; ++j) {
        const bool plus = rng::bits(seed, static_cast<std::uint64_t>(j)) & 1u;
        path[static_cast<std::size_t>(j)] =
            plus ? t_plus_faulty(path[static_cast<std::size_t>(j) - 1], delta)
                 : t_minus_faulty(path[static_cast<std::size_t>(j) - 1], delta);
    }
    return path;
}

}  // namespace pfl
