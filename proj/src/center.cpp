#include "uqgh/center.hpp"

#include <stdexcept>

namespace uqgh {

namespace {

const RatFunc& qdiff_sq_inv() {
    static const RatFunc v = (RatFunc::q_power(1) - RatFunc::q_power(-1)).pow(2).inv();
    return v;
}

}  // namespace

AlgebraElement casimir() {
    AlgebraElement c;
    c.add_term({.l = 1, .t = 1}, RatFunc(1));
    c.add_term({.m = 1}, RatFunc::q_power(1) * qdiff_sq_inv());
    c.add_term({.m = -1, .n = 2}, RatFunc::q_power(-1) * qdiff_sq_inv());
    return c;
}

bool is_central(const AlgebraElement& a) {
    for (Gen g : kCoreGens) {
        const AlgebraElement x = AlgebraElement::generator(g);
        if (!(multiply(a, x) == multiply(x, a))) return false;
    }
    return true;
}

AlgebraElement hc_projection(const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms())
        if (mono.is_torus()) out.add_term(mono, c);
    return out;
}

CentralCharacterPoint::CentralCharacterPoint(RatFunc a_, RatFunc b_, RatFunc c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::domain_error("central character point needs nonzero K, g, h values");
}

RatFunc central_character(const CentralCharacterPoint& p, const AlgebraElement& z) {
    if (!is_central(z)) throw std::domain_error("central_character of a non-central element");
    RatFunc out(0);
    const AlgebraElement torus_part = hc_projection(z);
    for (const auto& [mono, c] : torus_part.terms())
        out += c * p.a.pow(mono.m) * p.b.pow(mono.n) * p.c.pow(mono.s);
    return out;
}

bool characters_equal(const CentralCharacterPoint& p1, const CentralCharacterPoint& p2) {
    if (!(p1.b == p2.b) || !(p1.c == p2.c)) return false;
    const RatFunc lhs = (p1.a - p2.a) * (p1.a * p2.a - RatFunc::q_power(-2) * p1.b * p1.b);
    return lhs.is_zero();
}

namespace {

// (h - val')/(val - val') for a torus generator
AlgebraElement torus_projector(Gen g, const RatFunc& val, const RatFunc& valp) {
    const RatFunc d = (val - valp).inv();
    AlgebraElement out = AlgebraElement::generator(g) * d;
    out += AlgebraElement::scalar(-valp * d);
    return out;
}

}  // namespace

AlgebraElement splitting_element_simples(int eps, long m, const RatFunc& alpha,
                                         const RatFunc& beta, int epsp, long n,
                                         const RatFunc& alphap, const RatFunc& betap) {
    if (!(beta == betap)) return torus_projector(Gen::H, beta, betap);
    if (!(alpha == alphap)) return torus_projector(Gen::G, alpha, alphap);
    // alpha = alpha', beta = beta': need (eps, m) != (eps', n) so that the
    // d_{m,n} denominators q^{m-n} - eps eps' and q^{m+n+2} - eps eps' are nonzero
    const RatFunc ee(eps * epsp);
    const RatFunc d1 = RatFunc::q_power(static_cast<int>(m - n)) - ee;
    const RatFunc d2 = RatFunc::q_power(static_cast<int>(m + n + 2)) - ee;
    if (d1.is_zero() || d2.is_zero())
        throw std::domain_error("no splitting element exists for these parameters");
    const RatFunc dscale = RatFunc::q_power(static_cast<int>(m + 1)) / (d1 * d2);
    AlgebraElement d = casimir();
    d += AlgebraElement::scalar(-RatFunc(epsp) * alphap *
                                (RatFunc::q_power(static_cast<int>(n + 1)) +
                                 RatFunc::q_power(static_cast<int>(-n - 1))) *
                                qdiff_sq_inv());
    d *= dscale;
    // a = eps (q - q^-1)^2 / alpha * d_{m,n}
    d *= RatFunc(eps) * qdiff_sq_inv().inv() / alpha;
    return d;
}

AlgebraElement splitting_element_vermas(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                                        const RatFunc& ap, const RatFunc& bp, const RatFunc& cp) {
    if (!(b == bp)) return torus_projector(Gen::G, b, bp);
    if (!(c == cp)) return torus_projector(Gen::H, c, cp);
    const RatFunc qa = RatFunc::q_power(1);
    const RatFunc denom = (a - ap) * (qa * a * ap - RatFunc::q_power(-1) * b * b);
    if (denom.is_zero())
        throw std::domain_error("no splitting element exists for these parameters");
    AlgebraElement u = casimir();
    u += AlgebraElement::scalar(-(qa * ap + RatFunc::q_power(-1) * ap.inv() * b * b) *
                                qdiff_sq_inv());
    u *= a * ap * qdiff_sq_inv().inv() / denom;
    return u;
}

}  // namespace uqgh
