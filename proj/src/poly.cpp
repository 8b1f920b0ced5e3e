#include "uqgh/poly.hpp"

#include <stdexcept>

namespace uqgh {

namespace {
// function-local so that clients with their own static initializers can use
// Poly before this translation unit's dynamic initialization has run
const Rational& zero_rational() {
    static const Rational z(0);
    return z;
}
}

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::q_power(int e) {
    if (e < 0) throw std::domain_error("Poly::q_power: negative exponent");
    Poly p;
    p.coeffs_.assign(static_cast<size_t>(e) + 1, zero_rational());
    p.coeffs_.back() = 1;
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

int Poly::low_degree() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return 0;
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) return zero_rational();
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_rational());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_rational());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, zero_rational());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly::from_coeffs(std::move(c));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::shifted(int e) const {
    if (e < 0) throw std::domain_error("Poly::shifted: negative exponent");
    if (is_zero() || e == 0) return *this;
    Poly r;
    r.coeffs_.assign(static_cast<size_t>(e), zero_rational());
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    quo = Poly();
    rem = a;
    const int db = b.degree();
    const Rational& lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const Rational c = rem.leading() / lb;
        if (quo.coeffs_.size() < static_cast<size_t>(shift) + 1)
            quo.coeffs_.resize(static_cast<size_t>(shift) + 1, zero_rational());
        quo.coeffs_[static_cast<size_t>(shift)] += c;
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            rem.coeffs_[i + static_cast<size_t>(shift)] -= c * b.coeffs_[i];
        rem.trim();
    }
    quo.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
    // Euclid with monic remainders to tame coefficient growth.
    while (!b.is_zero()) {
        Poly quo, rem;
        divrem(a, b, quo, rem);
        a = std::move(b);
        b = rem.monic();
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(Rational(1) / leading());
}

Rational Poly::eval(const Rational& q0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Rational a = abs(c);
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += i == 1 ? "q" : "q^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace uqgh
