#include "uqgh/rep.hpp"

#include <algorithm>
#include <random>

#include "uqgh/hopf.hpp"

namespace uqgh {

std::string HighestWeightData::to_string() const {
    return "V(eps=" + std::string(eps >= 0 ? "+1" : "-1") + ", n=" + std::to_string(n) +
           ", alpha=" + alpha.to_string() + ", beta=" + beta.to_string() + ")";
}

WeightModule::WeightModule(std::vector<std::string> labels, std::array<Matrix, 8> action,
                           std::optional<std::vector<WeightTriple>> weights)
    : labels_(std::move(labels)), action_(std::move(action)), weights_(std::move(weights)) {
    for (const auto& m : action_)
        if (m.rows() != labels_.size() || m.cols() != labels_.size())
            throw std::invalid_argument("action matrix shape does not match dimension");
    if (weights_ && weights_->size() != labels_.size())
        throw std::invalid_argument("weight list does not match dimension");
}

Matrix WeightModule::matrix_of(const AlgebraElement& a) const {
    Matrix out(dim(), dim());
    for (const auto& [mono, c] : a.terms()) {
        Matrix acc = action(Gen::F).pow(mono.l);
        acc = acc * action(mono.m >= 0 ? Gen::K : Gen::Kinv).pow(std::abs(mono.m));
        acc = acc * action(mono.n >= 0 ? Gen::G : Gen::Ginv).pow(std::abs(mono.n));
        acc = acc * action(mono.s >= 0 ? Gen::H : Gen::Hinv).pow(std::abs(mono.s));
        acc = acc * action(Gen::E).pow(mono.t);
        out += acc.scaled(c);
    }
    return out;
}

Vector WeightModule::act(const AlgebraElement& a, const Vector& v) const {
    if (v.size() != dim()) throw std::invalid_argument("vector length does not match dimension");
    Vector out(dim());
    for (const auto& [mono, c] : a.terms()) {
        Vector w = v;
        for (long i = 0; i < mono.t; ++i) w = action(Gen::E).apply(w);
        for (long i = 0; i < std::abs(mono.s); ++i)
            w = action(mono.s >= 0 ? Gen::H : Gen::Hinv).apply(w);
        for (long i = 0; i < std::abs(mono.n); ++i)
            w = action(mono.n >= 0 ? Gen::G : Gen::Ginv).apply(w);
        for (long i = 0; i < std::abs(mono.m); ++i)
            w = action(mono.m >= 0 ? Gen::K : Gen::Kinv).apply(w);
        for (long i = 0; i < mono.l; ++i) w = action(Gen::F).apply(w);
        for (size_t i = 0; i < out.size(); ++i) out[i] += c * w[i];
    }
    return out;
}

namespace {

std::array<Matrix, 8> make_actions(size_t dim) {
    std::array<Matrix, 8> a;
    a.fill(Matrix(dim, dim));
    return a;
}

Matrix diag(const std::vector<RatFunc>& entries) {
    Matrix m(entries.size(), entries.size());
    for (size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

void set_action(std::array<Matrix, 8>& a, Gen g, Matrix m) {
    a[static_cast<size_t>(g)] = std::move(m);
}

Matrix must_inverse(const Matrix& m, const char* what) {
    auto inv = m.inverse();
    if (!inv) throw std::invalid_argument(std::string(what) + " is not invertible");
    return *inv;
}

}  // namespace

WeightModule simple_module(const HighestWeightData& d) {
    if (d.eps != 1 && d.eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    if (d.n < 0) throw std::invalid_argument("n must be >= 0");
    if (d.alpha.is_zero() || d.beta.is_zero())
        throw std::invalid_argument("alpha, beta must be nonzero");
    const size_t dim = static_cast<size_t>(d.n) + 1;
    std::vector<std::string> labels(dim);
    std::vector<RatFunc> kdiag(dim), kinv(dim);
    std::vector<WeightTriple> weights(dim);
    const RatFunc eps(d.eps);
    for (size_t p = 0; p < dim; ++p) {
        labels[p] = "v" + std::to_string(p);
        kdiag[p] = eps * d.alpha * RatFunc::q_power(static_cast<int>(d.n - 2 * p));
        kinv[p] = kdiag[p].inv();
        weights[p] = {kdiag[p], d.alpha, d.beta};
    }
    auto a = make_actions(dim);
    set_action(a, Gen::K, diag(kdiag));
    set_action(a, Gen::Kinv, diag(kinv));
    set_action(a, Gen::G, Matrix::identity(dim).scaled(d.alpha));
    set_action(a, Gen::Ginv, Matrix::identity(dim).scaled(d.alpha.inv()));
    set_action(a, Gen::H, Matrix::identity(dim).scaled(d.beta));
    set_action(a, Gen::Hinv, Matrix::identity(dim).scaled(d.beta.inv()));
    Matrix f(dim, dim), e(dim, dim);
    for (size_t p = 0; p + 1 < dim; ++p) {
        f.at(p + 1, p) = qint(static_cast<long>(p) + 1);              // F v_p = [p+1] v_{p+1}
        e.at(p, p + 1) = eps * d.alpha * qint(d.n - static_cast<long>(p));  // E v_{p+1}
    }
    set_action(a, Gen::F, f);
    set_action(a, Gen::E, e);
    return WeightModule(std::move(labels), std::move(a), std::move(weights));
}

WeightModule trivial_module(const RatFunc& alpha, const RatFunc& beta) {
    return simple_module({.eps = 1, .n = 0, .alpha = alpha, .beta = beta});
}

RelationReport check_module(const WeightModule& m) {
    const Matrix& e = m.action(Gen::E);
    const Matrix& f = m.action(Gen::F);
    const Matrix& k = m.action(Gen::K);
    const Matrix& g = m.action(Gen::G);
    const Matrix& h = m.action(Gen::H);
    const Matrix id = Matrix::identity(m.dim());
    const RatFunc q2 = RatFunc::q_power(2);
    const RatFunc qm2 = RatFunc::q_power(-2);
    const RatFunc sinv = (RatFunc::q_power(1) - RatFunc::q_power(-1)).inv();

    auto fail = [](const char* what) { return RelationReport{false, what}; };
    if (!(k * m.action(Gen::Kinv) == id)) return fail("K K^-1 = 1");
    if (!(g * m.action(Gen::Ginv) == id)) return fail("g g^-1 = 1");
    if (!(h * m.action(Gen::Hinv) == id)) return fail("h h^-1 = 1");
    if (!(k * e == (e * k).scaled(q2))) return fail("K E K^-1 = q^2 E");
    if (!(g * h == h * g)) return fail("g h = h g");
    if (!(g * k == k * g)) return fail("g K = K g");
    if (!(g * e == e * g)) return fail("g E = E g");
    if (!(h * e == e * h)) return fail("h E = E h");
    if (!(k * f == (f * k).scaled(qm2))) return fail("K F K^-1 = q^-2 F");
    if (!(h * k == k * h)) return fail("h K = K h");
    if (!(h * f == f * h)) return fail("h F = F h");
    if (!(g * f == f * g)) return fail("g F = F g");
    const Matrix rhs = (k - m.action(Gen::Kinv) * g * g).scaled(sinv);
    if (!(e * f - f * e == rhs)) return fail("E F - F E = (K - K^-1 g^2)/(q - q^-1)");
    return {};
}

namespace {

// distinct diagonal entries; valid eigenvalue candidates for the triangular
// matrices every module in this artifact is built from
std::vector<RatFunc> diag_candidates(const Matrix& m) {
    std::vector<RatFunc> out;
    for (size_t i = 0; i < m.rows(); ++i) {
        const RatFunc& v = m.at(i, i);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

}  // namespace

HighestWeightVectors highest_weight_vectors(const WeightModule& m) {
    HighestWeightVectors out;
    const Matrix ker_e = m.action(Gen::E).kernel();
    if (ker_e.cols() == 0) return out;

    struct Piece {
        Matrix basis;  // dim x k, full column rank
        std::vector<RatFunc> eigen;  // collected eigenvalues (g, h, K order)
    };
    std::vector<Piece> pieces{{ker_e, {}}};
    // ker(E) is invariant under g, h, K; split it into common eigenspaces
    for (Gen gen : {Gen::G, Gen::H, Gen::K}) {
        const Matrix& rho = m.action(gen);
        const std::vector<RatFunc> candidates = diag_candidates(rho);
        std::vector<Piece> next;
        for (const auto& piece : pieces) {
            const auto restricted = piece.basis.solve(rho * piece.basis);
            if (!restricted) {
                out.diagonalizable = false;  // subspace not invariant: cannot happen
                out.failed_gen = gen;        // for modules satisfying the relations
                return out;
            }
            size_t found = 0;
            for (const RatFunc& lambda : candidates) {
                Matrix shifted = *restricted;
                for (size_t i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= lambda;
                const Matrix ker = shifted.kernel();
                if (ker.cols() == 0) continue;
                found += ker.cols();
                Piece p{piece.basis * ker, piece.eigen};
                p.eigen.push_back(lambda);
                next.push_back(std::move(p));
            }
            if (found != piece.basis.cols()) {
                out.diagonalizable = false;
                out.failed_gen = gen;
                return out;
            }
        }
        pieces = std::move(next);
    }
    for (const auto& piece : pieces) {
        const WeightTriple w{piece.eigen[2], piece.eigen[0], piece.eigen[1]};
        for (size_t j = 0; j < piece.basis.cols(); ++j)
            out.vectors.emplace_back(piece.basis.column(j), w);
    }
    return out;
}

WeightModule tensor(const WeightModule& m, const WeightModule& n) {
    std::vector<std::string> labels;
    labels.reserve(m.dim() * n.dim());
    for (const auto& a : m.basis_labels())
        for (const auto& b : n.basis_labels()) labels.push_back(a + "(x)" + b);
    auto actions = make_actions(m.dim() * n.dim());
    for (Gen g : kAllGens) {
        Matrix rho(m.dim() * n.dim(), m.dim() * n.dim());
        const TensorElement delta = coproduct(AlgebraElement::generator(g));
        for (const auto& [mono, c] : delta.terms()) {
            const Matrix left = m.matrix_of(AlgebraElement::monomial(mono.left));
            const Matrix right = n.matrix_of(AlgebraElement::monomial(mono.right));
            rho += Matrix::kron(left, right).scaled(c);
        }
        set_action(actions, g, std::move(rho));
    }
    std::optional<std::vector<WeightTriple>> weights;
    if (m.weights() && n.weights()) {
        weights.emplace();
        for (const auto& wa : *m.weights())
            for (const auto& wb : *n.weights())
                weights->push_back(
                    {wa.lambda * wb.lambda, wa.alpha * wb.alpha, wa.beta * wb.beta});
    }
    return WeightModule(std::move(labels), std::move(actions), std::move(weights));
}

WeightModule direct_sum(const WeightModule& m, const WeightModule& n) {
    std::vector<std::string> labels;
    for (const auto& a : m.basis_labels()) labels.push_back("a." + a);
    for (const auto& b : n.basis_labels()) labels.push_back("b." + b);
    auto actions = make_actions(m.dim() + n.dim());
    for (Gen g : kAllGens) set_action(actions, g, Matrix::block_diag(m.action(g), n.action(g)));
    std::optional<std::vector<WeightTriple>> weights;
    if (m.weights() && n.weights()) {
        weights.emplace(*m.weights());
        weights->insert(weights->end(), n.weights()->begin(), n.weights()->end());
    }
    return WeightModule(std::move(labels), std::move(actions), std::move(weights));
}

std::vector<HighestWeightData> decompose(const WeightModule& m) {
    const HighestWeightVectors hw = highest_weight_vectors(m);
    if (!hw.diagonalizable)
        throw DecomposeError(std::string("not completely reducible: action of ") +
                                 gen_name(hw.failed_gen) + " is not diagonalizable",
                             m.dim());
    std::vector<HighestWeightData> result;
    std::vector<Vector> strings;
    for (const auto& [v, w] : hw.vectors) {
        // the F-string length determines n; eps is then lambda/(alpha q^n)
        Vector cur = v;
        long n = -1;
        while (std::any_of(cur.begin(), cur.end(), [](const RatFunc& x) { return !x.is_zero(); })) {
            strings.push_back(cur);
            cur = m.action(Gen::F).apply(cur);
            if (++n > static_cast<long>(m.dim())) throw DecomposeError("F is not nilpotent", m.dim());
        }
        const RatFunc ratio = w.lambda / (w.alpha * RatFunc::q_power(static_cast<int>(n)));
        int eps = 0;
        if (ratio == RatFunc(1)) eps = 1;
        else if (ratio == RatFunc(-1)) eps = -1;
        else
            throw DecomposeError("highest weight is not of the form eps*alpha*q^n", m.dim());
        result.push_back({eps, n, w.alpha, w.beta});
    }
    const size_t span = strings.empty() ? 0 : Matrix::from_columns(strings).rank();
    if (span != m.dim() || strings.size() != m.dim())
        throw DecomposeError("highest weight submodules do not sum to the module",
                             m.dim() - span);
    std::sort(result.begin(), result.end(), [](const HighestWeightData& a, const HighestWeightData& b) {
        if (a.n != b.n) return a.n > b.n;
        return a.eps > b.eps;
    });
    return result;
}

namespace {

WeightModule dual_with(const WeightModule& m, AlgebraElement (*image)(const AlgebraElement&),
                       bool invert_weights) {
    std::vector<std::string> labels;
    for (const auto& l : m.basis_labels()) labels.push_back(l + "*");
    auto actions = make_actions(m.dim());
    for (Gen g : kAllGens)
        set_action(actions, g, m.matrix_of(image(AlgebraElement::generator(g))).transpose());
    std::optional<std::vector<WeightTriple>> weights;
    if (m.weights()) {
        weights.emplace();
        for (const auto& w : *m.weights())
            weights->push_back(invert_weights
                                   ? WeightTriple{w.lambda.inv(), w.alpha.inv(), w.beta.inv()}
                                   : w);
    }
    return WeightModule(std::move(labels), std::move(actions), std::move(weights));
}

}  // namespace

WeightModule dual_module(const WeightModule& m) { return dual_with(m, &antipode, true); }

WeightModule twisted_dual(const WeightModule& m) { return dual_with(m, &anti_involution, false); }

WeightModule extension_module(const HighestWeightData& d, const ExtensionParams& p) {
    const WeightModule base = simple_module(d);
    const size_t nd = base.dim();
    const size_t dim = 2 * nd;
    std::vector<std::string> labels;
    std::vector<WeightTriple> weights;
    for (size_t i = 0; i < 2; ++i)
        for (size_t pp = 0; pp < nd; ++pp) {
            labels.push_back("v" + std::to_string(pp) + "(x)w" + std::to_string(i + 1));
            weights.push_back((*base.weights())[pp]);
        }
    auto actions = make_actions(dim);

    auto block = [&](const Matrix& diag_block, const Matrix& coupling) {
        // [ D  C ]
        // [ 0  D ]  on the basis (w1 block, w2 block)
        Matrix m(dim, dim);
        for (size_t i = 0; i < nd; ++i)
            for (size_t j = 0; j < nd; ++j) {
                m.at(i, j) = diag_block.at(i, j);
                m.at(nd + i, nd + j) = diag_block.at(i, j);
                m.at(i, nd + j) = coupling.at(i, j);
            }
        return m;
    };
    const Matrix zero(nd, nd);
    const RatFunc eps(d.eps);

    // E(v_p (x) w2) picks up eps [n-p+1] x v_{p-1} (x) w1
    Matrix e_coupling(nd, nd);
    for (size_t pp = 0; pp + 1 < nd; ++pp)
        e_coupling.at(pp, pp + 1) = eps * qint(d.n - static_cast<long>(pp)) * p.x;
    // K(v_p (x) w2) picks up eps q^{n-2p} x v_p (x) w1
    Matrix k_coupling(nd, nd);
    for (size_t pp = 0; pp < nd; ++pp)
        k_coupling.at(pp, pp) = eps * RatFunc::q_power(static_cast<int>(d.n - 2 * pp)) * p.x;

    set_action(actions, Gen::E, block(base.action(Gen::E), e_coupling));
    set_action(actions, Gen::F, block(base.action(Gen::F), zero));
    set_action(actions, Gen::K, block(base.action(Gen::K), k_coupling));
    set_action(actions, Gen::G,
               block(base.action(Gen::G), Matrix::identity(nd).scaled(p.x)));
    set_action(actions, Gen::H,
               block(base.action(Gen::H), Matrix::identity(nd).scaled(p.y)));
    set_action(actions, Gen::Kinv, must_inverse(actions[static_cast<size_t>(Gen::K)], "K"));
    set_action(actions, Gen::Ginv, must_inverse(actions[static_cast<size_t>(Gen::G)], "g"));
    set_action(actions, Gen::Hinv, must_inverse(actions[static_cast<size_t>(Gen::H)], "h"));
    return WeightModule(std::move(labels), std::move(actions), std::move(weights));
}

bool is_split_selfextension(const WeightModule& m, const Matrix& sub) {
    const size_t dim = m.dim();
    const size_t k = sub.cols();
    if (sub.rows() != dim) throw std::invalid_argument("subspace basis shape mismatch");
    for (Gen g : kAllGens)
        if (!(m.action(g) * sub).is_zero() && !sub.solve(m.action(g) * sub))
            throw std::invalid_argument("sub is not a submodule");

    // look for P = sub * Y with Y sub = id and P X = X P for all generators;
    // unknowns are the k*dim entries of Y, row-major
    const size_t unknowns = k * dim;
    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> rhs;
    auto idx = [&](size_t a, size_t j) { return a * dim + j; };

    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            std::vector<RatFunc> row(unknowns);
            for (size_t j = 0; j < dim; ++j) row[idx(a, j)] = sub.at(j, b);
            rows.push_back(std::move(row));
            rhs.push_back(a == b ? RatFunc(1) : RatFunc(0));
        }
    for (Gen g : kCoreGens) {
        const Matrix& x = m.action(g);
        const Matrix xs = x * sub;
        for (size_t i = 0; i < dim; ++i)
            for (size_t c = 0; c < dim; ++c) {
                std::vector<RatFunc> row(unknowns);
                // (sub Y x)_{ic} - (x sub Y)_{ic} = 0
                for (size_t a = 0; a < k; ++a) {
                    const RatFunc& sia = sub.at(i, a);
                    if (sia.is_zero()) continue;
                    for (size_t j = 0; j < dim; ++j)
                        if (!x.at(j, c).is_zero()) row[idx(a, j)] += sia * x.at(j, c);
                }
                for (size_t a = 0; a < k; ++a) row[idx(a, c)] -= xs.at(i, a);
                rows.push_back(std::move(row));
                rhs.push_back(RatFunc(0));
            }
    }
    Matrix a(rows.size(), unknowns), b(rows.size(), 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < unknowns; ++j) a.at(i, j) = rows[i][j];
        b.at(i, 0) = rhs[i];
    }
    return a.solve(b).has_value();
}

std::optional<Matrix> isomorphic(const WeightModule& m, const WeightModule& n,
                                 unsigned long seed) {
    if (m.dim() != n.dim()) return std::nullopt;
    const size_t dim = m.dim();
    const size_t unknowns = dim * dim;  // X with X rho_m(g) = rho_n(g) X
    Matrix sys(kCoreGens.size() * unknowns, unknowns);
    size_t r = 0;
    for (Gen g : kCoreGens) {
        const Matrix& a = m.action(g);
        const Matrix& b = n.action(g);
        for (size_t i = 0; i < dim; ++i)
            for (size_t c = 0; c < dim; ++c) {
                for (size_t j = 0; j < dim; ++j) {
                    if (!a.at(j, c).is_zero()) sys.at(r, i * dim + j) += a.at(j, c);
                    if (!b.at(i, j).is_zero()) sys.at(r, j * dim + c) -= b.at(i, j);
                }
                ++r;
            }
    }
    const Matrix basis = sys.kernel();
    if (basis.cols() == 0) return std::nullopt;

    auto candidate = [&](const std::vector<long>& coeffs) {
        Matrix x(dim, dim);
        for (size_t j = 0; j < basis.cols(); ++j)
            for (size_t i = 0; i < unknowns; ++i)
                x.at(i / dim, i % dim) += basis.at(i, j) * RatFunc(coeffs[j]);
        return x;
    };
    // basis vectors themselves first, then a few generic small combinations
    for (size_t j = 0; j < basis.cols(); ++j) {
        std::vector<long> coeffs(basis.cols(), 0);
        coeffs[j] = 1;
        const Matrix x = candidate(coeffs);
        if (x.inverse()) return x;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<long> coeffs(basis.cols());
        for (auto& c : coeffs) c = static_cast<long>(rng() % 7) - 3;
        const Matrix x = candidate(coeffs);
        if (x.inverse()) return x;
    }
    return std::nullopt;
}

std::array<long, 3> ext_dims_torus(const RatFunc& alpha, const RatFunc& beta,
                                   const RatFunc& alphap, const RatFunc& betap) {
    if (alpha.is_zero() || beta.is_zero() || alphap.is_zero() || betap.is_zero())
        throw std::domain_error("torus module parameters must be nonzero");
    // dual of the Koszul-style resolution: K -> K^2 -> K with
    // phi1* = (alpha'-alpha, beta'-beta), phi2* = (beta'-beta, -(alpha'-alpha))
    Matrix d1(2, 1), d2(1, 2);
    d1.at(0, 0) = alphap - alpha;
    d1.at(1, 0) = betap - beta;
    d2.at(0, 0) = betap - beta;
    d2.at(0, 1) = -(alphap - alpha);
    const long r1 = static_cast<long>(d1.rank());
    const long r2 = static_cast<long>(d2.rank());
    return {1 - r1, (2 - r2) - r1, 1 - r2};
}

}  // namespace uqgh
