#pragma once

#include <string>
#include <vector>

#include "uqgh/hopf.hpp"
#include "uqgh/pbw.hpp"

namespace uqgh {

enum class EqGen { X, Xinv, Y, Z, U, Uinv, V, Vinv };
const char* eqgen_name(EqGen g);

// Formal expression over the equitable generators with Q(q) scalars. No
// normal form on this side; everything is verified after applying phi.
struct EquitableExpr {
    enum class Kind { Scalar, Generator, Sum, Product };
    Kind kind = Kind::Scalar;
    RatFunc value{0};
    EqGen gen = EqGen::X;
    std::vector<EquitableExpr> kids;

    static EquitableExpr scalar(const RatFunc& c);
    static EquitableExpr generator(EqGen g);
    friend EquitableExpr operator+(const EquitableExpr& a, const EquitableExpr& b);
    friend EquitableExpr operator-(const EquitableExpr& a, const EquitableExpr& b);
    friend EquitableExpr operator*(const EquitableExpr& a, const EquitableExpr& b);
};

// algebra homomorphism into the PBW engine:
// x^{+-1} -> g^{-+1} K^{+-1}, y -> K^-1 g + (q - q^-1) F,
// z -> K^-1 g - q(q - q^-1) K^-1 E, u^{+-1} -> g^{-+1}, v^{+-1} -> h^{+-1}
AlgebraElement phi(const EquitableExpr& e);

// the inverse presentation: K^{+-1} -> u^{-+1} x^{+-1},
// F -> (y - x^-1)/(q - q^-1), E -> (1 - xz) u^-1 / (q(q - q^-1)),
// g -> u^-1, h -> v
EquitableExpr psi(Gen g);

struct EqCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EqReport {
    std::vector<EqCheck> checks;
    bool all_pass() const;
};

// the six defining relation families vanish under phi, and phi(psi(G)) = G
// for all eight generators of the PBW side
EqReport verify_equitable_relations();

// coproduct, counit and antipode transport: for each equitable generator G,
// (phi (x) phi)(D_eq(G)) = D(phi(G)), phi(S_eq(G)) = S(phi(G)),
// eps_eq(G) = eps(phi(G))
EqReport verify_equitable_hopf();

}  // namespace uqgh
