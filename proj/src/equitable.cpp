#include "uqgh/equitable.hpp"

namespace uqgh {

const char* eqgen_name(EqGen g) {
    switch (g) {
        case EqGen::X: return "x";
        case EqGen::Xinv: return "x^-1";
        case EqGen::Y: return "y";
        case EqGen::Z: return "z";
        case EqGen::U: return "u";
        case EqGen::Uinv: return "u^-1";
        case EqGen::V: return "v";
        case EqGen::Vinv: return "v^-1";
    }
    return "?";
}

EquitableExpr EquitableExpr::scalar(const RatFunc& c) {
    EquitableExpr e;
    e.kind = Kind::Scalar;
    e.value = c;
    return e;
}

EquitableExpr EquitableExpr::generator(EqGen g) {
    EquitableExpr e;
    e.kind = Kind::Generator;
    e.gen = g;
    return e;
}

EquitableExpr operator+(const EquitableExpr& a, const EquitableExpr& b) {
    EquitableExpr e;
    e.kind = EquitableExpr::Kind::Sum;
    e.kids = {a, b};
    return e;
}

EquitableExpr operator-(const EquitableExpr& a, const EquitableExpr& b) {
    return a + EquitableExpr::scalar(RatFunc(-1)) * b;
}

EquitableExpr operator*(const EquitableExpr& a, const EquitableExpr& b) {
    EquitableExpr e;
    e.kind = EquitableExpr::Kind::Product;
    e.kids = {a, b};
    return e;
}

namespace {

const RatFunc& qdiff() {
    static const RatFunc v = RatFunc::q_power(1) - RatFunc::q_power(-1);
    return v;
}

AlgebraElement phi_gen(EqGen g) {
    switch (g) {
        case EqGen::X: return AlgebraElement::torus(1, -1, 0);
        case EqGen::Xinv: return AlgebraElement::torus(-1, 1, 0);
        case EqGen::Y: {
            AlgebraElement e = AlgebraElement::torus(-1, 1, 0);
            e += AlgebraElement::generator(Gen::F) * qdiff();
            return e;
        }
        case EqGen::Z: {
            AlgebraElement e = AlgebraElement::torus(-1, 1, 0);
            e.add_term({.m = -1, .t = 1}, -RatFunc::q_power(1) * qdiff());
            return e;
        }
        case EqGen::U: return AlgebraElement::torus(0, -1, 0);
        case EqGen::Uinv: return AlgebraElement::torus(0, 1, 0);
        case EqGen::V: return AlgebraElement::torus(0, 0, 1);
        case EqGen::Vinv: return AlgebraElement::torus(0, 0, -1);
    }
    return {};
}

}  // namespace

AlgebraElement phi(const EquitableExpr& e) {
    switch (e.kind) {
        case EquitableExpr::Kind::Scalar: return AlgebraElement::scalar(e.value);
        case EquitableExpr::Kind::Generator: return phi_gen(e.gen);
        case EquitableExpr::Kind::Sum: {
            AlgebraElement out;
            for (const auto& k : e.kids) out += phi(k);
            return out;
        }
        case EquitableExpr::Kind::Product: {
            AlgebraElement out = AlgebraElement::one();
            for (const auto& k : e.kids) out = multiply(out, phi(k));
            return out;
        }
    }
    return {};
}

EquitableExpr psi(Gen g) {
    using E = EquitableExpr;
    const auto gen = [](EqGen eg) { return E::generator(eg); };
    switch (g) {
        case Gen::K: return gen(EqGen::Uinv) * gen(EqGen::X);
        case Gen::Kinv: return gen(EqGen::U) * gen(EqGen::Xinv);
        case Gen::F:
            return E::scalar(qdiff().inv()) * (gen(EqGen::Y) - gen(EqGen::Xinv));
        case Gen::E:
            return E::scalar((RatFunc::q_power(1) * qdiff()).inv()) *
                   (E::scalar(RatFunc(1)) - gen(EqGen::X) * gen(EqGen::Z)) * gen(EqGen::Uinv);
        case Gen::G: return gen(EqGen::Uinv);
        case Gen::Ginv: return gen(EqGen::U);
        case Gen::H: return gen(EqGen::V);
        case Gen::Hinv: return gen(EqGen::Vinv);
    }
    return E::scalar(RatFunc(0));
}

bool EqReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

void expect_zero(EqReport& report, const std::string& name, const EquitableExpr& e) {
    const AlgebraElement img = phi(e);
    report.checks.push_back({name, img.is_zero(), img.is_zero() ? "" : img.to_string()});
}

}  // namespace

EqReport verify_equitable_relations() {
    using E = EquitableExpr;
    const auto gen = [](EqGen eg) { return E::generator(eg); };
    const E one = E::scalar(RatFunc(1));
    const E x = gen(EqGen::X), xi = gen(EqGen::Xinv), y = gen(EqGen::Y), z = gen(EqGen::Z);
    const E u = gen(EqGen::U), ui = gen(EqGen::Uinv), v = gen(EqGen::V), vi = gen(EqGen::Vinv);
    const E q = E::scalar(RatFunc::q_power(1));
    const E qi = E::scalar(RatFunc::q_power(-1));
    const E qd = E::scalar(qdiff());

    EqReport report;
    expect_zero(report, "x^-1 x = 1", xi * x - one);
    expect_zero(report, "x x^-1 = 1", x * xi - one);
    expect_zero(report, "u^-1 u = 1", ui * u - one);
    expect_zero(report, "u u^-1 = 1", u * ui - one);
    expect_zero(report, "v^-1 v = 1", vi * v - one);
    expect_zero(report, "v v^-1 = 1", v * vi - one);
    expect_zero(report, "ux = xu", u * x - x * u);
    expect_zero(report, "uy = yu", u * y - y * u);
    expect_zero(report, "uz = zu", u * z - z * u);
    expect_zero(report, "uv = vu", u * v - v * u);
    expect_zero(report, "vx = xv", v * x - x * v);
    expect_zero(report, "yv = vy", y * v - v * y);
    expect_zero(report, "zv = vz", z * v - v * z);
    expect_zero(report, "(qxy - q^-1 yx)/(q - q^-1) = 1", q * x * y - qi * y * x - qd);
    expect_zero(report, "(qzx - q^-1 xz)/(q - q^-1) = 1", q * z * x - qi * x * z - qd);
    expect_zero(report, "(qyz - q^-1 zy)/(q - q^-1) = 1", q * y * z - qi * z * y - qd);

    for (Gen g : kAllGens) {
        const AlgebraElement round = phi(psi(g));
        const bool pass = round == AlgebraElement::generator(g);
        report.checks.push_back({std::string("phi(psi(") + gen_name(g) + ")) = " + gen_name(g),
                                 pass, pass ? "" : round.to_string()});
    }
    return report;
}

namespace {

struct EqHopfData {
    std::vector<std::pair<EquitableExpr, EquitableExpr>> coproduct;
    EquitableExpr antipode;
    RatFunc counit;
};

EqHopfData eq_hopf(EqGen g) {
    using E = EquitableExpr;
    const auto gen = [](EqGen eg) { return E::generator(eg); };
    const E x = gen(EqGen::X), xi = gen(EqGen::Xinv), y = gen(EqGen::Y), z = gen(EqGen::Z);
    const E u = gen(EqGen::U), ui = gen(EqGen::Uinv), v = gen(EqGen::V), vi = gen(EqGen::Vinv);
    switch (g) {
        case EqGen::X: return {{{x, x}}, xi, RatFunc(1)};
        case EqGen::Xinv: return {{{xi, xi}}, x, RatFunc(1)};
        case EqGen::U: return {{{u, u}}, ui, RatFunc(1)};
        case EqGen::Uinv: return {{{ui, ui}}, u, RatFunc(1)};
        case EqGen::V: return {{{v, v}}, vi, RatFunc(1)};
        case EqGen::Vinv: return {{{vi, vi}}, v, RatFunc(1)};
        case EqGen::Y:
            // D(y) = x^-1 (x) (x^-1 - v^-1) + u^-1 v x^-1 (x) (y - x^-1) + y (x) v^-1;
            // S(y) = x - uxy + u (the unique choice compatible with the
            // antipode axiom and the transport through phi)
            return {{{xi, xi - vi}, {ui * v * xi, y - xi}, {y, vi}},
                    x - u * x * y + u,
                    RatFunc(1)};
        case EqGen::Z:
            // D(z) = x^-1 (x) x^-1 + u v^-1 x^-1 (x) (z - x^-1) + (z - x^-1) (x) v;
            // S(z) = x + u^-1 - u^-1 x z
            return {{{xi, xi}, {u * vi * xi, z - xi}, {z - xi, v}},
                    x + ui - ui * x * z,
                    RatFunc(1)};
    }
    return {{}, E::scalar(RatFunc(0)), RatFunc(0)};
}

}  // namespace

EqReport verify_equitable_hopf() {
    EqReport report;
    for (EqGen g : {EqGen::X, EqGen::Xinv, EqGen::Y, EqGen::Z, EqGen::U, EqGen::Uinv,
                    EqGen::V, EqGen::Vinv}) {
        const EqHopfData data = eq_hopf(g);
        const AlgebraElement img = phi(EquitableExpr::generator(g));
        {
            TensorElement lhs;
            for (const auto& [a, b] : data.coproduct) lhs += TensorElement::pure(phi(a), phi(b));
            const TensorElement rhs = coproduct(img);
            const bool pass = lhs == rhs;
            report.checks.push_back({std::string("coproduct transport for ") + eqgen_name(g),
                                     pass, pass ? "" : (lhs - rhs).to_string()});
        }
        {
            const AlgebraElement lhs = phi(data.antipode);
            const AlgebraElement rhs = antipode(img);
            const bool pass = lhs == rhs;
            report.checks.push_back({std::string("antipode transport for ") + eqgen_name(g),
                                     pass, pass ? "" : (lhs - rhs).to_string()});
        }
        {
            const RatFunc lhs = data.counit;
            const RatFunc rhs = counit(img);
            const bool pass = lhs == rhs;
            report.checks.push_back({std::string("counit transport for ") + eqgen_name(g),
                                     pass, pass ? "" : (lhs - rhs).to_string()});
        }
    }
    return report;
}

}  // namespace uqgh
