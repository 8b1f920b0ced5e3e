#pragma once

#include "uqgh/pbw.hpp"

namespace uqgh {

// Casimir element C = FE + (qK + q^-1 K^-1 g^2)/(q - q^-1)^2
AlgebraElement casimir();

// exact commutation with each of E, F, K, g, h
bool is_central(const AlgebraElement& a);

// kills every PBW term with an E or F factor, keeps the torus part
AlgebraElement hc_projection(const AlgebraElement& a);

// evaluation point (K, g, h) = (a, b, c) for central characters
struct CentralCharacterPoint {
    RatFunc a, b, c;
    CentralCharacterPoint(RatFunc a_, RatFunc b_, RatFunc c_);
};

// value of the central element z at the point: the scalar by which z acts on
// the highest weight vector of the Verma module V(a, b, c)
RatFunc central_character(const CentralCharacterPoint& p, const AlgebraElement& z);

// (a - a')(aa' - q^-2 b^2) = 0, b = b', c = c'
bool characters_equal(const CentralCharacterPoint& p1, const CentralCharacterPoint& p2);

// Central element acting as 1 on the simple V_{eps,m,alpha,beta} and as 0 on
// the non-isomorphic simple V_{eps',n,alpha',beta'}. Case order: beta, alpha,
// then the Casimir-based d_{m,n}. Throws when the modules are isomorphic.
AlgebraElement splitting_element_simples(int eps, long m, const RatFunc& alpha,
                                         const RatFunc& beta, int epsp, long n,
                                         const RatFunc& alphap, const RatFunc& betap);

// Central element acting as 1 on the Verma V(a,b,c) and as 0 on V(a',b',c').
// Case order: b, c, then the Casimir-based expression; throws when all case
// conditions degenerate (in particular when a != a' but aa' = q^-2 b^2).
AlgebraElement splitting_element_vermas(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                                        const RatFunc& ap, const RatFunc& bp, const RatFunc& cp);

}  // namespace uqgh
