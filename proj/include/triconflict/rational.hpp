#pragma once

#include <cctype>
#include <limits>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "triconflict/errors.hpp"

namespace triconflict {

//! All degrees and thresholds are exact rationals; no floating point is used
//! anywhere in the decision path, so threshold comparisons are never subject
//! to rounding.
using Rational = boost::rational<long long>;

//! Parse a non-negative decimal string ("0.5", ".5", "1", "0.125") into an
//! exact rational. At most 18 fractional digits, no exponents.
inline Rational parse_decimal(std::string_view text) {
    const auto fail = [&] {
        throw DomainError("invalid decimal '" + std::string(text) + "'");
    };
    if (text.empty())
        fail();
    std::size_t dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty())
        fail();
    if (frac.size() > 18)
        throw DomainError("too many fractional digits in '" + std::string(text) + "'");
    long long num = 0;
    const auto append = [&](char c) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail();
        if (num > (std::numeric_limits<long long>::max() - 9) / 10)
            throw DomainError("decimal out of range: '" + std::string(text) + "'");
        num = num * 10 + (c - '0');
    };
    for (char c : whole)
        append(c);
    long long den = 1;
    for (char c : frac) {
        append(c);
        den *= 10;
    }
    return Rational(num, den);
}

//! "3/4" for proper fractions, "0"/"1" for integers.
inline std::string to_string(const Rational &r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace triconflict
