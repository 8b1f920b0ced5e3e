#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "uqgh/poly.hpp"

namespace uqgh {

// Laurent polynomial in q: exponent -> nonzero coefficient; empty map is 0.
using LaurentPoly = std::map<int, Rational>;

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Element of Q(q), the coefficient field of everything downstream.
// Canonical form: gcd(num, den) = 1, den monic; zero is 0/1. Two values are
// equal iff their representations are structurally identical.
class RatFunc {
public:
    RatFunc() : den_(Poly(1L)) {}
    RatFunc(long c) : num_(Poly(c)), den_(Poly(1L)) {}  // NOLINT: implicit by design
    RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly(1L)) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly(1L)) {}
    RatFunc(Poly num, Poly den);  // reduces
    static RatFunc q_power(int e);  // q^e for any integer e
    static RatFunc from_laurent(const LaurentPoly& lp);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc inv() const;
    RatFunc pow(long e) const;
    bool operator==(const RatFunc&) const = default;

    // exact evaluation at q = q0; q0 must be nonzero and off the pole set
    Rational eval(const Rational& q0) const;

    // Laurent view, available exactly when the denominator is a power of q
    std::optional<LaurentPoly> as_laurent() const;
    // c * q^e when the value is a single Laurent term
    std::optional<std::pair<Rational, int>> laurent_monomial() const;

    // sign of the numerator's leading coefficient (false for 0)
    bool lead_negative() const { return num_.leading() < 0; }

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;
    void reduce();
};

// quantum integer [m] = (q^m - q^-m)/(q - q^-1); [0] = 0
RatFunc qint(long m);
// [m]! = [1][2]...[m]; [0]! = 1
RatFunc qfact(long m);

}  // namespace uqgh
