#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "core/error.hpp"

namespace ramcalc {

// All slopes, conductors and divisor coefficients are exact rationals.
using rational = boost::rational<long long>;

inline bool is_integer(const rational& r) { return r.denominator() == 1; }

inline std::string to_string(const rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "a" or "a/b"; used by profile and scenario JSON.
inline rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) fail(errc::parse_error, "rational with zero denominator: " + s);
        return rational(num, den);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::parse_error, "malformed rational: " + s);
    }
}

} // namespace ramcalc
