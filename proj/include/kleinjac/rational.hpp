#pragma once

// Exact integer and rational scalars shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kleinjac {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) return Rational(Integer(-Integer(num)), Integer(-Integer(den)));
    return Rational(Integer(num), Integer(den));
}

/// Floor of an exact rational.
inline Integer floor_of(const Rational& r) {
    Integer n = boost::multiprecision::numerator(r);
    Integer d = boost::multiprecision::denominator(r);
    Integer q = n / d;  // truncates toward zero
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// Representative of r mod 1 in [0, 1).
inline Rational frac_part(const Rational& r) { return r - Rational(floor_of(r)); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

/// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        Integer num(std::string(text.substr(0, slash)));
        Integer den(std::string(text.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) return Rational(Integer(-num), Integer(-den));
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
    }
}

}  // namespace kleinjac
