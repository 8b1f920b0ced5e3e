#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "uqgh/ratfunc.hpp"

namespace uqgh {

// The eight algebra generators. E and F are not invertible; K, g, h are.
enum class Gen { E, F, K, Kinv, G, Ginv, H, Hinv };

inline constexpr std::array<Gen, 8> kAllGens = {Gen::E, Gen::F,    Gen::K, Gen::Kinv,
                                                Gen::G, Gen::Ginv, Gen::H, Gen::Hinv};
inline constexpr std::array<Gen, 5> kCoreGens = {Gen::E, Gen::F, Gen::K, Gen::G, Gen::H};

const char* gen_name(Gen g);  // "E", "F", "K", "K^-1", "g", "g^-1", "h", "h^-1"
Gen gen_inverse(Gen g);       // throws for E, F

// Exponent tuple of the PBW basis monomial F^l K^m g^n h^s E^t.
// l, t >= 0; m, n, s may be any integers.
struct PBWMonomial {
    long l = 0;
    long m = 0;
    long n = 0;
    long s = 0;
    long t = 0;

    bool is_unit() const { return l == 0 && m == 0 && n == 0 && s == 0 && t == 0; }
    bool is_torus() const { return l == 0 && t == 0; }
    auto operator<=>(const PBWMonomial&) const = default;  // lex on (l, m, n, s, t)

    std::string to_string() const;  // "F^2 K^-1 g E" style; "1" for the unit
};

// Unreduced word in the generators with a scalar prefactor; the empty word
// is the unit. Formal sums of these are the input to normalize().
struct GenWord {
    RatFunc scalar = RatFunc(1);
    std::vector<Gen> letters;
};

enum class Side { Left, Right };

// Element of the algebra in PBW normal form: a finite linear combination of
// PBW monomials. No zero coefficients are stored; the empty map is 0.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return monomial({}, RatFunc(1)); }
    static AlgebraElement scalar(const RatFunc& c) { return monomial({}, c); }
    static AlgebraElement generator(Gen g);
    static AlgebraElement monomial(const PBWMonomial& mono, const RatFunc& coeff = RatFunc(1));
    static AlgebraElement torus(long m, long n, long s, const RatFunc& coeff = RatFunc(1));

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<PBWMonomial, RatFunc>& terms() const { return terms_; }
    // coefficient of the unit monomial if the element is a scalar
    bool is_scalar() const;
    RatFunc scalar_part() const;  // coefficient of the unit monomial (0 if absent)

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const RatFunc& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const RatFunc& c) { return a *= c; }
    friend AlgebraElement operator*(const RatFunc& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    bool operator==(const AlgebraElement&) const = default;

    // nonnegative powers for any element; negative powers require an
    // invertible single term (torus monomial times a scalar)
    AlgebraElement pow(long e) const;

    void add_term(const PBWMonomial& mono, const RatFunc& coeff);  // merges, drops zeros

    // render back to one word per term (used by idempotence checks)
    std::vector<GenWord> to_words() const;

    std::string to_string() const;

private:
    std::map<PBWMonomial, RatFunc> terms_;
};

// Product a * x (or x * a) in PBW normal form, by the defining relations:
// g, h commute with everything; E K^m = q^{-2m} K^m E; K^m F = q^{-2m} F K^m;
// E F = F E + (K - K^-1 g^2)/(q - q^-1); inverses fold into exponents.
AlgebraElement mul_by_generator(const AlgebraElement& a, Gen x, Side side = Side::Right);

// bilinear extension of mul_by_generator; associative with unit 1
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// left-to-right fold of the words through mul_by_generator
AlgebraElement normalize(const GenWord& word);
AlgebraElement normalize(const std::vector<GenWord>& words);

// closed form of [E, F^m] = [m] F^{m-1} (q^{-(m-1)} K - q^{m-1} K^-1 g^2)/(q - q^-1)
AlgebraElement e_fpow_commutator(long m);

// the product-reversing involution fixing K, g, h with i(E) = -KF, i(F) = -EK^-1
AlgebraElement anti_involution(const AlgebraElement& a);

}  // namespace uqgh
