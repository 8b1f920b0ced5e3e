#pragma once

#include <map>
#include <string>
#include <vector>

#include "uqgh/pbw.hpp"

namespace uqgh {

struct TensorMono {
    PBWMonomial left;
    PBWMonomial right;
    auto operator<=>(const TensorMono&) const = default;
    std::string to_string() const;
};

// Element of the tensor-square algebra: linear combination of pairs of PBW
// monomials, each factor independently in normal form.
class TensorElement {
public:
    TensorElement() = default;
    static TensorElement zero() { return {}; }
    static TensorElement one();
    // a (x) b for already-normalized elements
    static TensorElement pure(const AlgebraElement& a, const AlgebraElement& b);

    bool is_zero() const { return terms_.empty(); }
    const std::map<TensorMono, RatFunc>& terms() const { return terms_; }
    void add_term(const TensorMono& mono, const RatFunc& coeff);

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    // componentwise algebra product (a (x) b)(c (x) d) = ac (x) bd
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    bool operator==(const TensorElement&) const = default;

    std::string to_string() const;

private:
    std::map<TensorMono, RatFunc> terms_;
};

// coproduct, extended to arbitrary elements as an algebra homomorphism:
// D(E) = h^-1 (x) E + E (x) hK,  D(F) = K^-1 h g^2 (x) F + F (x) h^-1,
// K, g, h group-like
TensorElement coproduct(const AlgebraElement& a);

// eps(F^l K^m g^n h^s E^t) = [l = t = 0], extended linearly
RatFunc counit(const AlgebraElement& a);

// antipode, extended as an algebra anti-homomorphism:
// S(E) = -EK^-1, S(F) = -KFg^-2, S(K) = K^-1, S(a) = a^-1 for torus a
AlgebraElement antipode(const AlgebraElement& a);

// triple tensors, only needed for the coassociativity check
struct TensorMono3 {
    PBWMonomial a, b, c;
    auto operator<=>(const TensorMono3&) const = default;
};
using TensorElement3 = std::map<TensorMono3, RatFunc>;
TensorElement3 coproduct_left(const TensorElement& t);   // (D (x) id)
TensorElement3 coproduct_right(const TensorElement& t);  // (id (x) D)

AlgebraElement counit_left(const TensorElement& t);   // (eps (x) id)
AlgebraElement counit_right(const TensorElement& t);  // (id (x) eps)
AlgebraElement antipode_mul_left(const TensorElement& t);   // m(S (x) id)
AlgebraElement antipode_mul_right(const TensorElement& t);  // m(id (x) S)

struct AxiomCheck {
    std::string axiom;
    std::string input;
    bool pass = false;
    std::string witness;  // first differing term on failure
};

struct HopfReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
};

// Verifies, for each sample a: coassociativity, the counit identities,
// the antipode identities, and on consecutive pairs (a, b) the
// multiplicativity of the coproduct and of the counit.
HopfReport check_hopf_axioms(const std::vector<AlgebraElement>& samples);

}  // namespace uqgh
