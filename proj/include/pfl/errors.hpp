#pragma once

#include <stdexcept>
#include <string>

namespace pfl {

// Invalid argument values (probabilities outside [0,1], malformed sizes,
// inconsistent structures).  The CLI maps this family to exit code 2.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A request whose cost exceeds a configured cap (e.g. dense covariance
// matrices).  The CLI maps this to exit code 3.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_probability(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ConfigError(std::string(name) + " must lie in [0, 1], got " +
                          std::to_string(value));
    }
}

}  // namespace pfl
