#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace uqgh {

// Exact arbitrary-precision rational. GMP keeps the canonical form
// gcd(num, den) = 1, den > 0 for all arithmetic results.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text) {
    try {
        Rational r(text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

}  // namespace uqgh
