#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqgh/linalg.hpp"
#include "uqgh/pbw.hpp"

namespace uqgh {

// (eps, n, alpha, beta) with highest weight (eps * alpha * q^n, alpha, beta)
struct HighestWeightData {
    int eps = 1;  // +1 or -1
    long n = 0;
    RatFunc alpha{1};
    RatFunc beta{1};
    bool operator==(const HighestWeightData&) const = default;
    std::string to_string() const;
};

// off-diagonal entries of the self-extension: x for g, y for h
struct ExtensionParams {
    RatFunc x{0};
    RatFunc y{0};
};

struct WeightTriple {
    RatFunc lambda, alpha, beta;
    bool operator==(const WeightTriple&) const = default;
};

// Finite-dimensional module given by exact action matrices for the eight
// generators, with optional per-basis-vector weight metadata.
class WeightModule {
public:
    WeightModule(std::vector<std::string> labels, std::array<Matrix, 8> action,
                 std::optional<std::vector<WeightTriple>> weights = std::nullopt);

    size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Matrix& action(Gen g) const { return action_[static_cast<size_t>(g)]; }
    const std::optional<std::vector<WeightTriple>>& weights() const { return weights_; }

    // PBW-monomial-wise product of generator matrices, extended linearly
    Matrix matrix_of(const AlgebraElement& a) const;
    Vector act(const AlgebraElement& a, const Vector& v) const;

private:
    std::vector<std::string> labels_;
    std::array<Matrix, 8> action_;
    std::optional<std::vector<WeightTriple>> weights_;
};

// the (n+1)-dimensional simple module V_{eps,n,alpha,beta}
WeightModule simple_module(const HighestWeightData& d);
// the one-dimensional module K_{alpha,beta} (= V_{+1,0,alpha,beta})
WeightModule trivial_module(const RatFunc& alpha, const RatFunc& beta);

struct RelationReport {
    bool pass = true;
    std::string first_violation;
};
// verifies the defining relations as exact matrix identities
RelationReport check_module(const WeightModule& m);

struct HighestWeightVectors {
    bool diagonalizable = true;
    Gen failed_gen = Gen::K;  // set when !diagonalizable
    std::vector<std::pair<Vector, WeightTriple>> vectors;
};
// basis of ker(E) intersected with the common eigenspaces of g, h, K;
// a non-diagonalizable torus action is reported through the flag
HighestWeightVectors highest_weight_vectors(const WeightModule& m);

// tensor product along the coproduct; dimension dim(m) * dim(n)
WeightModule tensor(const WeightModule& m, const WeightModule& n);

WeightModule direct_sum(const WeightModule& m, const WeightModule& n);

struct DecomposeError : std::runtime_error {
    DecomposeError(const std::string& what, size_t defect_)
        : std::runtime_error(what), defect(defect_) {}
    size_t defect;
};
// multiset of simple constituents; throws DecomposeError when the module is
// not a direct sum of the submodules generated by highest weight vectors
std::vector<HighestWeightData> decompose(const WeightModule& m);

// dual action X |-> transpose of S(X)
WeightModule dual_module(const WeightModule& m);
// duality-functor image through the anti-involution: X |-> transpose of i(X)
WeightModule twisted_dual(const WeightModule& m);

// the 2(n+1)-dimensional self-extension V_{eps,n} (x) M_{x,y}
WeightModule extension_module(const HighestWeightData& d, const ExtensionParams& p);

// sub: columns spanning a submodule; true iff a complementary submodule
// exists (exact solve for an equivariant projection onto sub)
bool is_split_selfextension(const WeightModule& m, const Matrix& sub);

// explicit invertible intertwiner when the modules are isomorphic; the
// generic-combination search is seeded and retries a few samples
std::optional<Matrix> isomorphic(const WeightModule& m, const WeightModule& n,
                                 unsigned long seed = 0);

// dimensions of Ext^0, Ext^1, Ext^2 between the torus modules K_{alpha,beta}
// and K_{alphap,betap}, from the explicit three-term complex
std::array<long, 3> ext_dims_torus(const RatFunc& alpha, const RatFunc& beta,
                                   const RatFunc& alphap, const RatFunc& betap);

}  // namespace uqgh
