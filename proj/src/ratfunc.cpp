#include "uqgh/ratfunc.hpp"

namespace uqgh {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
        Poly quo, rem;
        Poly::divrem(num_, g, quo, rem);
        num_ = quo;
        Poly::divrem(den_, g, quo, rem);
        den_ = quo;
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        den_ = den_.monic();
        num_ = num_.scaled(Rational(1) / lead);
    }
}

RatFunc RatFunc::q_power(int e) {
    if (e >= 0) return RatFunc(Poly::q_power(e));
    return RatFunc(Poly(1L), Poly::q_power(-e));
}

RatFunc RatFunc::from_laurent(const LaurentPoly& lp) {
    RatFunc acc;
    for (const auto& [e, c] : lp) acc += RatFunc(c) * q_power(e);
    return acc;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(q)");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(q)");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc acc(1);
    RatFunc base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational RatFunc::eval(const Rational& q0) const {
    if (q0 == 0) throw PoleError("evaluation at q = 0 is undefined (q is invertible)");
    const Rational d = den_.eval(q0);
    if (d == 0)
        throw PoleError("pole at q = " + uqgh::to_string(q0) + ": denominator " +
                        den_.to_string() + " vanishes");
    return num_.eval(q0) / d;
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
    if (is_zero()) return LaurentPoly{};
    // the denominator is a power of q exactly when its only nonzero
    // coefficient is the leading one (monic by canonical form)
    if (den_.low_degree() != den_.degree()) return std::nullopt;
    const int shift = den_.degree();
    LaurentPoly lp;
    for (int i = 0; i <= num_.degree(); ++i)
        if (num_.coeff(i) != 0) lp[i - shift] = num_.coeff(i);
    return lp;
}

std::optional<std::pair<Rational, int>> RatFunc::laurent_monomial() const {
    auto lp = as_laurent();
    if (!lp || lp->size() != 1) return std::nullopt;
    const auto& [e, c] = *lp->begin();
    return std::make_pair(c, e);
}

namespace {

std::string laurent_term(const Rational& abs_coeff, int e) {
    std::string out;
    if (e == 0) return abs_coeff.get_str();
    if (abs_coeff != 1) out += abs_coeff.get_str() + "*";
    out += e == 1 ? "q" : "q^" + std::to_string(e);
    return out;
}

std::string laurent_string(const LaurentPoly& lp) {
    if (lp.empty()) return "0";
    std::string out;
    for (auto it = lp.rbegin(); it != lp.rend(); ++it) {
        const bool neg = it->second < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += laurent_term(abs(it->second), it->first);
    }
    return out;
}

LaurentPoly shifted_laurent(const Poly& p, int shift) {
    LaurentPoly lp;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) lp[i - shift] = p.coeff(i);
    return lp;
}

}  // namespace

std::string RatFunc::to_string() const {
    if (auto lp = as_laurent()) return laurent_string(*lp);
    // balance the denominator's exponents around 0 so that e.g. (q^2-1)/q
    // prints as q - q^-1; numerator and denominator get the same shift
    const int shift = (den_.degree() + den_.low_degree()) / 2;
    const LaurentPoly nl = shifted_laurent(num_, shift);
    const LaurentPoly dl = shifted_laurent(den_, shift);
    std::string ns = laurent_string(nl);
    if (nl.size() > 1) ns = "(" + ns + ")";
    return ns + "/(" + laurent_string(dl) + ")";
}

RatFunc qint(long m) {
    if (m < 0) throw std::domain_error("undefined quantum integer index");
    if (m == 0) return RatFunc(0);
    return (RatFunc::q_power(static_cast<int>(m)) - RatFunc::q_power(static_cast<int>(-m))) /
           (RatFunc::q_power(1) - RatFunc::q_power(-1));
}

RatFunc qfact(long m) {
    if (m < 0) throw std::domain_error("undefined quantum factorial index");
    RatFunc acc(1);
    for (long i = 1; i <= m; ++i) acc *= qint(i);
    return acc;
}

}  // namespace uqgh
