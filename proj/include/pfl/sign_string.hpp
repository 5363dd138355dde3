#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pfl/errors.hpp"

namespace pfl {

// A synthetic channel at level s is named by a string over {'-', '+'} of
// length s: character j is the transform applied at step j (leftmost first).
// Mapping '-' -> 0 and '+' -> 1 and reading the string as a binary number
// (leftmost character most significant) gives the channel index, e.g.
// "+-+" -> 101b -> 5.  The empty string names the raw channel (index 0).

inline std::uint32_t sign_string_to_index(std::string_view signs) {
    if (signs.size() > 31) {
        throw ConfigError("sign string longer than 31 characters");
    }
    std::uint32_t index = 0;
    for (char c : signs) {
        if (c != '-' && c != '+') {
            throw ConfigError(std::string("invalid sign character '") + c + "'");
        }
        index = (index << 1) | (c == '+' ? 1u : 0u);
    }
    return index;
}

inline std::string index_to_sign_string(std::uint32_t index, int level) {
    if (level < 0 || level > 31) {
        throw ConfigError("level must lie in [0, 31]");
    }
    if (level < 31 && index >= (1u << level)) {
        throw ConfigError("channel index out of range for level");
    }
    std::string signs(static_cast<std::size_t>(level), '-');
    for (int j = 0; j < level; ++j) {
        if ((index >> (level - 1 - j)) & 1u) {
            signs[static_cast<std::size_t>(j)] = '+';
        }
    }
    return signs;
}

}  // namespace pfl
