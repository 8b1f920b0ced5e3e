#pragma once

#include <string>
#include <vector>

#include "uqgh/rational.hpp"

namespace uqgh {

// Dense polynomial in q over the rationals. Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);
    static Poly q_power(int e);  // q^e, e >= 0
    static Poly from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // lowest exponent with nonzero coefficient (0 for the zero polynomial)
    int low_degree() const;
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly shifted(int e) const;  // multiply by q^e, e >= 0

    // a = quo * b + rem with deg rem < deg b; b must be nonzero
    static void divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    static Poly gcd(Poly a, Poly b);  // monic; gcd(0,0) = 0
    Poly monic() const;

    Rational eval(const Rational& q0) const;
    bool operator==(const Poly&) const = default;

    std::string to_string() const;  // plain "q^k" form, diagnostics only

private:
    std::vector<Rational> coeffs_;
    void trim();
};

}  // namespace uqgh
