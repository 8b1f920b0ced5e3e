#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgh/center.hpp"
#include "uqgh/verma.hpp"

using namespace uqgh;

namespace {

const RatFunc qdiff = RatFunc::q_power(1) - RatFunc::q_power(-1);

Vector unit_vec(size_t dim, size_t i) {
    Vector v(dim);
    v[i] = RatFunc(1);
    return v;
}

}  // namespace

TEST_CASE("truncated verma structure") {
    const RatFunc a = RatFunc::q_power(1) + RatFunc(2), b(3), c(5);
    const TruncatedVerma v = verma(a, b, c, 8);
    CHECK(v.e_coeff(0).is_zero());
    CHECK(v.e_coeff(1) == (a - a.inv() * b * b) / qdiff);
    for (long p = 0; p <= 8; ++p)
        CHECK(v.k_eigen(p) == RatFunc::q_power(static_cast<int>(-2 * p)) * a);
    CHECK(v.action(Gen::F).at(3, 2) == RatFunc(1));
    CHECK_THROWS_AS(verma(RatFunc(0), b, c, 5), std::domain_error);
    CHECK_THROWS_AS(verma(a, b, c, 0), std::domain_error);
}

TEST_CASE("relations hold on the truncation") {
    const RelationReport r1 =
        verma_relations_report(verma(RatFunc::q_power(3), RatFunc(2), RatFunc(3), 6));
    INFO(r1.first_violation);
    CHECK(r1.pass);
    const RelationReport r2 = verma_relations_report(
        verma(RatFunc::q_power(1) + RatFunc(1), RatFunc(1), RatFunc(1), 6));
    CHECK(r2.pass);
}

TEST_CASE("maximal vectors") {
    const RatFunc b(2), c(3);
    {
        const auto mv = maximal_vectors(verma(b * RatFunc::q_power(2), b, c, 10));
        REQUIRE(mv.size() == 2);
        CHECK(mv[0].depth == 0);
        CHECK(mv[1].depth == 3);
        CHECK(mv[1].eps == 1);
    }
    {
        const auto mv = maximal_vectors(verma(-b * RatFunc::q_power(4), b, c, 10));
        REQUIRE(mv.size() == 2);
        CHECK(mv[1].depth == 5);
        CHECK(mv[1].eps == -1);
    }
    {
        const auto mv = maximal_vectors(verma(b * (RatFunc::q_power(1) + RatFunc(1)), b, c, 10));
        CHECK(mv.size() == 1);  // only the generator
    }
}

TEST_CASE("maximal vector depth characterization, both directions") {
    const RatFunc c(1);
    const std::vector<RatFunc> bs = {RatFunc(1), RatFunc::q_power(1),
                                     RatFunc::q_power(2) + RatFunc(3)};
    for (int eps : {1, -1})
        for (long n = 1; n <= 6; ++n)
            for (const auto& b : bs) {
                const RatFunc a = RatFunc(eps) * b * RatFunc::q_power(static_cast<int>(n - 1));
                const auto mv = maximal_vectors(verma(a, b, c, 12));
                REQUIRE(mv.size() == 2);
                CHECK(mv[1].depth == n);
                CHECK(mv[1].eps == eps);
            }
}

TEST_CASE("verma homomorphisms") {
    const RatFunc b(2), c(3);
    {
        const auto res = verma_hom(RatFunc::q_power(-3) * b, b, c, RatFunc::q_power(1) * b, b, c);
        REQUIRE(res.status == HomStatus::Found);
        CHECK(res.n == 2);
        // injective: full column rank on the truncation
        CHECK(res.map.rank() == res.map.cols());
        // hom implies equal central characters
        CHECK(characters_equal({RatFunc::q_power(-3) * b, b, c},
                               {RatFunc::q_power(1) * b, b, c}));
    }
    CHECK(verma_hom(RatFunc::q_power(-3) * b, b, c, RatFunc::q_power(1) * b, RatFunc(7), c).status ==
          HomStatus::None);
    // generic equal parameters: the exponent equations have no solution
    const RatFunc generic = RatFunc::q_power(1) + RatFunc(1);
    CHECK(verma_hom(generic * b, b, c, generic * b, b, c).status == HomStatus::None);
    // a = eps q^-1 b, a' = eps q^-1 b solves them with n = 0 (identity-type map)
    const auto idres = verma_hom(RatFunc::q_power(-1) * b, b, c, RatFunc::q_power(-1) * b, b, c);
    CHECK(idres.status == HomStatus::Found);
    CHECK(idres.n == 0);
    // criterion holds but the depth exceeds the cutoff
    CHECK(verma_hom(RatFunc::q_power(-9) * b, b, c, RatFunc::q_power(7) * b, b, c, 5).status ==
          HomStatus::Inconclusive);
}

TEST_CASE("simplicity trichotomy") {
    const RatFunc b(2), c(3);
    auto res = is_simple_verma(b * RatFunc::q_power(3), b, c, 12);
    CHECK(res.kind == VermaSimplicity::Kind::NotSimple);
    CHECK(res.depth == 4);
    res = is_simple_verma(b * (RatFunc::q_power(2) + RatFunc(1)), b, c, 100);
    CHECK(res.kind == VermaSimplicity::Kind::Simple);
    res = is_simple_verma(b * RatFunc::q_power(13), b, c, 12);
    CHECK(res.kind == VermaSimplicity::Kind::Unknown);
    // depth-1 submodule at a = -b
    res = is_simple_verma(-b, b, c, 12);
    CHECK(res.kind == VermaSimplicity::Kind::NotSimple);
    CHECK(res.depth == 1);
    // negative q-power never reaches a maximal vector
    res = is_simple_verma(b * RatFunc::q_power(-2), b, c, 12);
    CHECK(res.kind == VermaSimplicity::Kind::Simple);
}

TEST_CASE("simple quotients") {
    const RatFunc b(2), c(3);
    auto d = simple_quotient_data(b * RatFunc::q_power(2), b, c);
    REQUIRE(d);
    CHECK(*d == HighestWeightData{1, 2, b, c});
    CHECK(simple_module(*d).dim() == 3);
    d = simple_quotient_data(-b, b, c);
    REQUIRE(d);
    CHECK(*d == HighestWeightData{-1, 0, b, c});
    CHECK(!simple_quotient_data(b * (RatFunc::q_power(1) + RatFunc(2)), b, c));
}

TEST_CASE("maximal vector depth matches simplicity verdict") {
    const RatFunc b(2), c(1);
    for (int e = 0; e <= 5; ++e) {
        const RatFunc a = b * RatFunc::q_power(e);
        const auto verdict = is_simple_verma(a, b, c, 12);
        const auto mv = maximal_vectors(verma(a, b, c, 12));
        REQUIRE(verdict.kind == VermaSimplicity::Kind::NotSimple);
        REQUIRE(mv.size() == 2);
        CHECK(mv[1].depth == verdict.depth);
    }
}

TEST_CASE("overflow-aware action") {
    const TruncatedVerma v = verma(RatFunc::q_power(2), RatFunc(1), RatFunc(1), 6);
    // Casimir action on the generator reproduces the central character
    const auto cv = v.act(casimir(), unit_vec(v.dim(), 0));
    REQUIRE(cv);
    const RatFunc expect = central_character({v.a(), v.b(), v.c()}, casimir());
    CHECK((*cv)[0] == expect);
    for (size_t i = 1; i < cv->size(); ++i) CHECK((*cv)[i].is_zero());
    // acting by F on the top vector is inconclusive
    CHECK(!v.act(AlgebraElement::generator(Gen::F), unit_vec(v.dim(), 6)));
    // the normal form of EF acts E-first, so the top vector stays in range
    const auto ef_top = v.act(normalize(GenWord{RatFunc(1), {Gen::E, Gen::F}}), unit_vec(v.dim(), 6));
    REQUIRE(ef_top);
    CHECK(!(*ef_top)[6].is_zero());
}

TEST_CASE("verma splitting element acts through the truncation") {
    const RatFunc b(2), c(3);
    const RatFunc a = RatFunc::q_power(2) + RatFunc(1);  // non-monomial: both Vermas simple
    const RatFunc ap = RatFunc::q_power(5);
    const AlgebraElement u = splitting_element_vermas(a, b, c, ap, b, c);
    const TruncatedVerma first = verma(a, b, c, 6);
    const TruncatedVerma second = verma(ap, b, c, 6);
    for (size_t p = 0; p < first.dim(); ++p) {
        Vector e(first.dim());
        e[p] = RatFunc(1);
        const auto on_first = first.act(u, e);
        REQUIRE(on_first);
        CHECK(*on_first == e);
        const auto on_second = second.act(u, e);
        REQUIRE(on_second);
        CHECK(*on_second == Vector(second.dim()));
    }
}

TEST_CASE("simple quotient matches the truncated verma action") {
    // L(eps b q^{n-1}, b, c) realized on indices 0..n-1 of the truncation,
    // with F landing in the submodule at index n killed in the quotient
    const RatFunc b(2), c(5);
    for (int eps : {1, -1})
        for (long n = 1; n <= 4; ++n) {
            const RatFunc a = RatFunc(eps) * b * RatFunc::q_power(static_cast<int>(n - 1));
            const auto data = simple_quotient_data(a, b, c);
            REQUIRE(data);
            CHECK(*data == HighestWeightData{eps, n - 1, b, c});
            const WeightModule l = simple_module(*data);
            const TruncatedVerma v = verma(a, b, c, std::max(n, 2L));
            Matrix f(l.dim(), l.dim());
            for (size_t p = 0; p < l.dim(); ++p) f.at(p, p) = qfact(static_cast<long>(p)).inv();
            for (Gen g : kAllGens) {
                // quotient action: restrict the truncation to indices < n
                Matrix quot(l.dim(), l.dim());
                const Matrix full = v.action(g);
                for (size_t i = 0; i < l.dim(); ++i)
                    for (size_t j = 0; j < l.dim(); ++j) quot.at(i, j) = full.at(i, j);
                CHECK(quot * f == f * l.action(g));
            }
        }
}

TEST_CASE("tensor route agrees with the direct construction") {
    // V(lambda) (x) K_{b,c} matches verma(b lambda, b, c) under
    // f(v_p (x) 1) = F^p v / [p]!
    const std::vector<std::array<RatFunc, 3>> samples = {
        {RatFunc::q_power(2), RatFunc(2), RatFunc(3)},
        {RatFunc::q_power(1) + RatFunc(1), RatFunc(5), RatFunc(1)},
        {RatFunc(7), RatFunc::q_power(-1), RatFunc(2)},
    };
    for (const auto& [lambda, b, c] : samples) {
        const long cutoff = 6;
        const TruncatedVerma direct = verma(b * lambda, b, c, cutoff);
        Matrix basis_map(direct.dim(), direct.dim());
        for (size_t p = 0; p < direct.dim(); ++p)
            basis_map.at(p, p) = qfact(static_cast<long>(p)).inv();
        for (Gen g : kAllGens) {
            const Matrix lhs = direct.action(g) * basis_map;
            const Matrix rhs = basis_map * chevalley_tensor_action(g, lambda, b, c, cutoff);
            if (g == Gen::F) {
                for (size_t i = 0; i < direct.dim(); ++i)
                    for (size_t j = 0; j + 1 < direct.dim(); ++j)
                        CHECK(lhs.at(i, j) == rhs.at(i, j));
            } else {
                CHECK(lhs == rhs);
            }
        }
    }
}
