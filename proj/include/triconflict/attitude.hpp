#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "triconflict/errors.hpp"

namespace triconflict {

//! One cell of a situation table: the stance an agent takes on an issue.
enum class Attitude : std::int8_t {
    opposed = -1,
    neutral = 0,
    favorable = 1,
};

//! Canonical spelling: "+1", "0", "-1".
inline std::string_view to_string(Attitude a) {
    switch (a) {
    case Attitude::favorable: return "+1";
    case Attitude::neutral: return "0";
    case Attitude::opposed: return "-1";
    }
    return "?";
}

//! Accepts "+1" or "1" for favorable, "0", and "-1".
inline Attitude parse_attitude(std::string_view text) {
    if (text == "+1" || text == "1")
        return Attitude::favorable;
    if (text == "0")
        return Attitude::neutral;
    if (text == "-1")
        return Attitude::opposed;
    throw TableError("invalid attitude '" + std::string(text) +
                     "' (expected +1, 1, 0 or -1)");
}

} // namespace triconflict
