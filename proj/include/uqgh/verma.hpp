#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqgh/linalg.hpp"
#include "uqgh/pbw.hpp"
#include "uqgh/rep.hpp"

namespace uqgh {

// Degree-truncated Verma module V(a, b, c) on the basis F^p v, p = 0..cutoff.
// F maps the top index out of the truncation; operations whose result would
// depend on that lost content report "inconclusive" instead of guessing.
class TruncatedVerma {
public:
    TruncatedVerma(RatFunc a, RatFunc b, RatFunc c, long cutoff);

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    const RatFunc& c() const { return c_; }
    long cutoff() const { return cutoff_; }
    size_t dim() const { return static_cast<size_t>(cutoff_) + 1; }

    // E F^p v = [p] (q^{-p+1} a - q^{p-1} a^-1 b^2)/(q - q^-1) F^{p-1} v
    RatFunc e_coeff(long p) const;
    // K F^p v = q^{-2p} a F^p v
    RatFunc k_eigen(long p) const;

    // action matrix on the truncation; F's image of the top vector is dropped
    Matrix action(Gen g) const;

    // applies a PBW element, tracking overflow: nullopt when the result
    // depends on content beyond the cutoff
    std::optional<Vector> act(const AlgebraElement& z, const Vector& v) const;

private:
    RatFunc a_, b_, c_;
    long cutoff_;
};

TruncatedVerma verma(const RatFunc& a, const RatFunc& b, const RatFunc& c, long cutoff = 12);

struct MaximalVector {
    long depth;          // index n with E F^n v = 0; 0 is the generator
    int eps;             // a = eps b q^{depth-1}; 0 for the generator entry
    WeightTriple weight; // (q^{-2 depth} a, b, c)
};
// all maximal weight vectors up to the cutoff, the generator included
std::vector<MaximalVector> maximal_vectors(const TruncatedVerma& v);

enum class HomStatus { Found, None, Inconclusive };
struct VermaHomResult {
    HomStatus status = HomStatus::None;
    long n = -1;     // F^p v |-> F^{p+n} v' when found
    Matrix map;      // (cutoff+1) x (cutoff+1-n), verified intertwiner
};
// solves a = eps q^{-n-1} b, a' = eps q^{n-1} b, (b,c) = (b',c') exactly;
// Inconclusive when the criterion holds but n exceeds the cutoff
VermaHomResult verma_hom(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                         const RatFunc& ap, const RatFunc& bp, const RatFunc& cp,
                         long cutoff = 12);

struct VermaSimplicity {
    enum class Kind { Simple, NotSimple, Unknown } kind;
    long depth = -1;  // maximal-vector depth of the submodule when NotSimple
    std::string to_string() const;
};
// decided through the structural test: a/b is a Laurent monomial +-q^e with
// e >= 0 exactly when a submodule exists (at depth e+1); Unknown only for
// monomials whose depth exceeds the bound
VermaSimplicity is_simple_verma(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                                long bound);

// (eps, n-1, b, c) when a = eps b q^{n-1}; the finite-dimensional simple
// quotient is then simple_module of the result
std::optional<HighestWeightData> simple_quotient_data(const RatFunc& a, const RatFunc& b,
                                                      const RatFunc& c);

// U-action matrices on the truncated V(lambda) (x) K_{b,c} through the
// Chevalley generators: E acts as b E', K as b K', F as F', g = b, h = c
Matrix chevalley_tensor_action(Gen g, const RatFunc& lambda, const RatFunc& b,
                               const RatFunc& c, long cutoff);

// defining relations as matrix identities on the truncation; the EF relation
// skips the top column, whose value depends on the dropped F image
RelationReport verma_relations_report(const TruncatedVerma& v);

}  // namespace uqgh
