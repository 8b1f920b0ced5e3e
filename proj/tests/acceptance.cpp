// Acceptance suite: runs every criterion exactly (zero tolerance in Q(q))
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
// --cli <path> points at the command-line binary for the exit-code checks.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support/baer.hpp"
#include "support/oracles.hpp"
#include "uqgh/center.hpp"
#include "uqgh/equitable.hpp"
#include "uqgh/hopf.hpp"
#include "uqgh/parse.hpp"
#include "uqgh/rep.hpp"
#include "uqgh/sampling.hpp"
#include "uqgh/serialize.hpp"
#include "uqgh/verma.hpp"

using namespace uqgh;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const RatFunc qdiff = RatFunc::q_power(1) - RatFunc::q_power(-1);

RatFunc casimir_scalar(const HighestWeightData& d) {
    return RatFunc(d.eps) * d.alpha *
           (RatFunc::q_power(static_cast<int>(d.n + 1)) +
            RatFunc::q_power(static_cast<int>(-d.n - 1))) /
           qdiff.pow(2);
}

// ---- criterion bodies ------------------------------------------------------

void c1_pbw_engine(Check& c) {
    AlgebraElement expect = AlgebraElement::monomial({.l = 1, .t = 1});
    expect.add_term({.m = 1}, qdiff.inv());
    expect.add_term({.m = -1, .n = 2}, -qdiff.inv());
    c.expect(normalize(GenWord{RatFunc(1), {Gen::E, Gen::F}}) == expect, "normalize(EF)");

    Sampler s(1);
    for (int i = 0; i < 200; ++i) {
        const GenWord w{RatFunc(1), s.word(0, 6)};
        oracles::NaiveRewriter oracle(500 + static_cast<unsigned long>(i));
        c.expect(normalize(w) == oracle.run({w}), "order-independence oracle, word " + std::to_string(i));
        if (!c.ok) return;
    }
    Sampler s2(2);
    for (int i = 0; i < 100; ++i) {
        const AlgebraElement a = s2.element(3, 4), b = s2.element(3, 4), d = s2.element(3, 4);
        c.expect(multiply(multiply(a, b), d) == multiply(a, multiply(b, d)),
                 "associativity, triple " + std::to_string(i));
        if (!c.ok) return;
    }
}

void c2_commutator(Check& c) {
    for (long m = 1; m <= 8; ++m) {
        std::vector<Gen> ef(static_cast<size_t>(m), Gen::F);
        ef.insert(ef.begin(), Gen::E);
        std::vector<Gen> fe(static_cast<size_t>(m), Gen::F);
        fe.push_back(Gen::E);
        const AlgebraElement lhs = normalize({GenWord{RatFunc(1), ef}, GenWord{RatFunc(-1), fe}});
        c.expect(lhs == e_fpow_commutator(m), "[E, F^m] for m = " + std::to_string(m));
    }
}

void c3_hopf_axioms(Check& c) {
    std::vector<AlgebraElement> samples;
    for (Gen g : kAllGens) samples.push_back(AlgebraElement::generator(g));
    for (Gen g1 : kAllGens)
        for (Gen g2 : kAllGens) samples.push_back(normalize(GenWord{RatFunc(1), {g1, g2}}));
    Sampler s(0);
    for (int i = 0; i < 50; ++i) samples.push_back(s.element(3, 3));
    const HopfReport r = check_hopf_axioms(samples);
    for (const auto& item : r.checks)
        c.expect(item.pass, item.axiom + " on " + item.input);
}

void c4_center(Check& c) {
    const AlgebraElement cas = casimir();
    for (Gen g : kCoreGens) {
        const AlgebraElement x = AlgebraElement::generator(g);
        c.expect(multiply(cas, x) == multiply(x, cas), std::string("[C, ") + gen_name(g) + "]");
    }
    Sampler s(4);
    for (int i = 0; i < 20; ++i) {
        const RatFunc a = s.laurent(2, 2), b = s.laurent(2, 2), cc = s.laurent(2, 2);
        const RatFunc expect =
            (RatFunc::q_power(1) * a + RatFunc::q_power(-1) * a.inv() * b * b) / qdiff.pow(2);
        c.expect(central_character({a, b, cc}, cas) == expect,
                 "central character of C, sample " + std::to_string(i));
    }
    const AlgebraElement g = AlgebraElement::generator(Gen::G);
    const AlgebraElement h = AlgebraElement::generator(Gen::H);
    for (int i = 0; i < 20; ++i) {
        const RatFunc a = s.laurent(2, 2), b = s.laurent(2, 2), cc = s.laurent(2, 2);
        const CentralCharacterPoint p1(a, b, cc);
        const RatFunc a2 = (i % 2 == 0) ? RatFunc::q_power(-2) * b * b / a : s.laurent(2, 2);
        const CentralCharacterPoint p2(a2, b, cc);
        const bool agree = central_character(p1, cas) == central_character(p2, cas) &&
                           central_character(p1, g) == central_character(p2, g) &&
                           central_character(p1, h) == central_character(p2, h);
        c.expect(characters_equal(p1, p2) == agree, "characters_equal vs direct, pair " + std::to_string(i));
        if (i % 2 == 0) c.expect(characters_equal(p1, p2), "antipodal branch, pair " + std::to_string(i));
    }
}

void c5_simple_modules(Check& c) {
    Sampler s(5);
    for (int trial = 0; trial < 3; ++trial) {
        const RatFunc alpha = s.laurent(2, 2), beta = s.laurent(2, 2);
        for (int eps : {1, -1})
            for (long n = 0; n <= 6; ++n) {
                const HighestWeightData d{eps, n, alpha, beta};
                const WeightModule v = simple_module(d);
                const RelationReport r = check_module(v);
                c.expect(r.pass, "check_module " + d.to_string() + ": " + r.first_violation);
                c.expect(v.matrix_of(casimir()) ==
                             Matrix::identity(v.dim()).scaled(casimir_scalar(d)),
                         "casimir scalar on " + d.to_string());
                if (!c.ok) return;
            }
    }
}

void c6_clebsch_gordan(Check& c) {
    Sampler s(6);
    for (int trial = 0; trial < 3; ++trial) {
        const RatFunc a1 = s.laurent(1, 1), b1 = s.laurent(1, 1);
        const RatFunc a2 = s.laurent(1, 1), b2 = s.laurent(1, 1);
        for (long n = 0; n <= 4; ++n)
            for (long m = 0; m <= n; ++m)
                for (int e1 : {1, -1})
                    for (int e2 : {1, -1}) {
                        const auto t = tensor(simple_module({e1, n, a1, b1}),
                                              simple_module({e2, m, a2, b2}));
                        std::vector<HighestWeightData> expect;
                        long dim_sum = 0;
                        for (long k = n - m; k <= n + m; k += 2) {
                            expect.push_back({e1 * e2, k, a1 * a2, b1 * b2});
                            dim_sum += k + 1;
                        }
                        c.expect(dim_sum == static_cast<long>(t.dim()),
                                 "dimension bookkeeping (n+1)(m+1)");
                        auto parts = decompose(t);
                        bool same = parts.size() == expect.size();
                        if (same) {
                            auto rest = expect;
                            for (const auto& d : parts) {
                                auto it = std::find(rest.begin(), rest.end(), d);
                                if (it == rest.end()) {
                                    same = false;
                                    break;
                                }
                                rest.erase(it);
                            }
                        }
                        c.expect(same, "multiset for n=" + std::to_string(n) +
                                           ", m=" + std::to_string(m));
                        if (!c.ok) return;
                    }
    }
}

void c7_duals(Check& c) {
    Sampler s(7);
    for (int eps : {1, -1})
        for (long n = 0; n <= 4; ++n) {
            const RatFunc alpha = s.laurent(1, 2), beta = s.laurent(1, 2);
            const WeightModule v = simple_module({eps, n, alpha, beta});
            const auto inter =
                isomorphic(dual_module(v), simple_module({eps, n, alpha.inv(), beta.inv()}));
            c.expect(inter.has_value(), "dual intertwiner, n = " + std::to_string(n));
            if (inter) c.expect(inter->inverse().has_value(), "dual intertwiner invertible");
            c.expect(isomorphic(twisted_dual(v), v).has_value(),
                     "twisted dual fixes the simple, n = " + std::to_string(n));
            if (!c.ok) return;
        }
}

void c8_extensions(Check& c) {
    Sampler s(8);
    for (int i = 0; i < 10; ++i) {
        const HighestWeightData d{i % 2 ? 1 : -1, i % 4 > 1 ? 3 : i % 3,
                                  s.laurent(1, 2), s.laurent(1, 2)};
        const ExtensionParams p{i % 3 == 0 ? RatFunc(0) : s.laurent(1, 2),
                                i % 3 == 1 ? RatFunc(0) : s.laurent(1, 2)};
        const WeightModule m = extension_module(d, p);
        const RelationReport r = check_module(m);
        c.expect(r.pass, "extension check_module: " + r.first_violation);
        Matrix sub(m.dim(), m.dim() / 2);
        for (size_t j = 0; j < m.dim() / 2; ++j) sub.at(j, j) = RatFunc(1);
        const bool trivial = p.x.is_zero() && p.y.is_zero();
        c.expect(is_split_selfextension(m, sub) == trivial,
                 "split detection, sample " + std::to_string(i));
        if (!p.x.is_zero()) {
            const auto hw = highest_weight_vectors(m);
            c.expect(!hw.diagonalizable && hw.failed_gen == Gen::G,
                     "non-diagonalizable flag on g, sample " + std::to_string(i));
        }
        if (!c.ok) return;
    }
    // parameter addition realizes class addition (Baer sum oracle)
    const HighestWeightData d{1, 1, RatFunc(2), RatFunc(3)};
    for (int i = 0; i < 3; ++i) {
        const RatFunc x1 = s.laurent(1, 2), y1 = s.laurent(1, 2);
        const RatFunc x2 = s.laurent(1, 2), y2 = s.laurent(1, 2);
        const auto sum = oracles::baer_sum(
            oracles::standard_presentation(extension_module(d, {x1, y1})),
            oracles::standard_presentation(extension_module(d, {x2, y2})));
        c.expect(oracles::extension_params(sum, d.alpha, d.beta) ==
                     std::make_pair(x1 + x2, y1 + y2),
                 "baer sum = parameter sum, sample " + std::to_string(i));
    }
}

void c9_torus_ext(Check& c) {
    Sampler s(9);
    for (int i = 0; i < 20; ++i) {
        const RatFunc a = s.laurent(2, 2), b = s.laurent(2, 2);
        RatFunc a2 = a, b2 = b;
        if (i % 3 == 1) a2 = a + RatFunc(1);
        if (i % 3 == 2) b2 = b * RatFunc::q_power(1);
        const auto dims = ext_dims_torus(a, b, a2, b2);
        const bool iso = a == a2 && b == b2;
        c.expect(dims == (iso ? std::array<long, 3>{1, 2, 1} : std::array<long, 3>{0, 0, 0}),
                 "ext dims, pair " + std::to_string(i));
    }
}

void c10_splitting_idempotent(Check& c) {
    struct Case {
        const char* name;
        HighestWeightData first, second;
    };
    const std::vector<Case> cases = {
        {"beta branch", {1, 2, RatFunc(2), RatFunc(3)}, {1, 1, RatFunc(2), RatFunc(5)}},
        {"alpha branch", {-1, 2, RatFunc(2), RatFunc(3)}, {1, 1, RatFunc(7), RatFunc(3)}},
        {"casimir branch", {1, 2, RatFunc(2), RatFunc(3)}, {-1, 4, RatFunc(2), RatFunc(3)}},
    };
    for (const auto& cs : cases) {
        const WeightModule m = direct_sum(simple_module(cs.first), simple_module(cs.second));
        const AlgebraElement a = splitting_element_simples(
            cs.first.eps, cs.first.n, cs.first.alpha, cs.first.beta, cs.second.eps, cs.second.n,
            cs.second.alpha, cs.second.beta);
        const Matrix p = m.matrix_of(a);
        c.expect(p * p == p, std::string(cs.name) + ": idempotent");
        const size_t m1 = simple_module(cs.first).dim();
        bool proj = true;
        for (size_t i = 0; i < m.dim() && proj; ++i)
            for (size_t j = 0; j < m.dim() && proj; ++j)
                proj = p.at(i, j) == ((i == j && j < m1) ? RatFunc(1) : RatFunc(0));
        c.expect(proj, std::string(cs.name) + ": image is the first summand");
    }
}

void c11_verma(Check& c) {
    const RatFunc cpar(1);
    const std::vector<RatFunc> bs = {RatFunc(1), RatFunc::q_power(1),
                                     RatFunc::q_power(2) + RatFunc(3)};
    for (int eps : {1, -1})
        for (long n = 1; n <= 6; ++n)
            for (const auto& b : bs) {
                const RatFunc a = RatFunc(eps) * b * RatFunc::q_power(static_cast<int>(n - 1));
                const auto mv = maximal_vectors(verma(a, b, cpar, 12));
                c.expect(mv.size() == 2 && mv[1].depth == n && mv[1].eps == eps,
                         "maximal vector at depth " + std::to_string(n));
                if (!c.ok) return;
            }
    for (const auto& b : bs) {
        const auto mv = maximal_vectors(verma(b * (RatFunc::q_power(1) + RatFunc(1)), b, cpar, 12));
        c.expect(mv.size() == 1, "no maximal vectors for non-monomial a/b");
    }
    // hom exists exactly when the exponent equations hold
    const RatFunc b(2);
    const auto found = verma_hom(RatFunc::q_power(-4) * b, b, cpar, RatFunc::q_power(2) * b, b, cpar);
    c.expect(found.status == HomStatus::Found && found.n == 3, "verma hom found at n = 3");
    if (found.status == HomStatus::Found) {
        c.expect(found.map.rank() == found.map.cols(), "verma hom injective on the truncation");
        c.expect(characters_equal({RatFunc::q_power(-4) * b, b, cpar},
                                  {RatFunc::q_power(2) * b, b, cpar}),
                 "verma hom implies equal central characters");
    }
    c.expect(verma_hom(RatFunc::q_power(-4) * b, b, cpar, RatFunc::q_power(2) * b, b,
                       RatFunc(5))
                     .status == HomStatus::None,
             "no hom when (b, c) differ");
    c.expect(verma_hom(RatFunc::q_power(3) * b, b, cpar, RatFunc::q_power(1) * b, b, cpar)
                     .status == HomStatus::None,
             "no hom when the exponent equations fail");
}

void c12_chevalley_tensor(Check& c) {
    Sampler s(12);
    for (int trial = 0; trial < 3; ++trial) {
        const RatFunc lambda = s.laurent(2, 2), b = s.laurent(1, 2), cc = s.laurent(1, 2);
        const long cutoff = 8;
        const TruncatedVerma direct = verma(b * lambda, b, cc, cutoff);
        Matrix f(direct.dim(), direct.dim());
        for (size_t p = 0; p < direct.dim(); ++p) f.at(p, p) = qfact(static_cast<long>(p)).inv();
        for (Gen g : kAllGens) {
            const Matrix lhs = direct.action(g) * f;
            const Matrix rhs = f * chevalley_tensor_action(g, lambda, b, cc, cutoff);
            bool same = true;
            for (size_t i = 0; i < direct.dim() && same; ++i)
                for (size_t j = 0; j < direct.dim() && same; ++j) {
                    if (g == Gen::F && j + 1 == direct.dim()) continue;  // truncated image
                    same = lhs.at(i, j) == rhs.at(i, j);
                }
            c.expect(same, std::string("intertwines ") + gen_name(g) + ", sample " +
                               std::to_string(trial));
        }
    }
}

void c13_equitable(Check& c) {
    for (const auto& item : verify_equitable_relations().checks)
        c.expect(item.pass, item.name + " " + item.detail);
    for (const auto& item : verify_equitable_hopf().checks)
        c.expect(item.pass, item.name + " " + item.detail);
}

// ---- criterion 14: frontend + CLI contract ---------------------------------

std::string g_cli_path;

int run_cli(const std::string& args, std::string* output = nullptr) {
    const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    if (output) *output = out;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void c14_frontend(Check& c) {
    Sampler s(14);
    for (int i = 0; i < 200; ++i) {
        const AlgebraElement a = s.element(4, 4);
        const std::string text = render(a);
        c.expect(parse_element(text) == a && render(parse_element(text)) == text,
                 "round trip, element " + std::to_string(i));
        if (!c.ok) return;
    }
    const WeightModule v = simple_module({1, 2, RatFunc::q_power(1) + RatFunc(2), RatFunc(3)});
    c.expect(module_to_json(module_from_json(module_to_json(v))) == module_to_json(v),
             "module JSON round trip");

    if (g_cli_path.empty()) {
        c.expect(false, "CLI path not provided (--cli)");
        return;
    }
    std::string out;
    c.expect(run_cli("normalize \"E F\"", &out) == 0, "normalize exit code");
    c.expect(out == "F E + (1/(q - q^-1)) K - (1/(q - q^-1)) K^-1 g^2\n",
             "normalize output, got: " + out);
    c.expect(run_cli("central \"g h^-3\"", &out) == 0 && out == "true\n", "central true");
    c.expect(run_cli("central \"E\"", &out) == 1 && out == "false\n", "central false exits 1");
    c.expect(run_cli("normalize \"E^-1\"") == 2, "parse error exits 2");
    c.expect(run_cli("no-such-command") == 2, "usage error exits 2");
    c.expect(run_cli("verma --a \"q^2\" --b 1 --c 1", &out) == 0, "verma exit code");
    c.expect(out.find("depth 3") != std::string::npos, "verma reports depth 3, got: " + out);
    c.expect(run_cli("hopf-check --samples 5 --seed 1") == 0, "hopf-check exit code");
    std::string out2;
    run_cli("hopf-check --samples 5 --seed 1", &out2);
    std::string out3;
    run_cli("hopf-check --samples 5 --seed 1", &out3);
    c.expect(out2 == out3, "seeded CLI output is byte-identical");
    c.expect(run_cli("equitable-check") == 0, "equitable-check exit code");
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"1. PBW engine: normalize(EF), order-independence, associativity", c1_pbw_engine},
        {"2. commutator formula [E, F^m] for m = 1..8", c2_commutator},
        {"3. Hopf axioms on generators, pairs, 50 random elements", c3_hopf_axioms},
        {"4. center: [C,X] = 0, central characters, character equality", c4_center},
        {"5. simple modules satisfy the relations; Casimir scalar", c5_simple_modules},
        {"6. Clebsch-Gordan decomposition, 0 <= m <= n <= 4", c6_clebsch_gordan},
        {"7. duals and twisted duals of simples", c7_duals},
        {"8. self-extensions: relations, splitness, flag, class addition", c8_extensions},
        {"9. torus Ext dimensions (1,2,1) / (0,0,0)", c9_torus_ext},
        {"10. splitting element is the projection, all three branches", c10_splitting_idempotent},
        {"11. Verma maximal vectors and homomorphisms", c11_verma},
        {"12. Chevalley tensor route matches the Verma construction", c12_chevalley_tensor},
        {"13. equitable presentation: relations and Hopf transport", c13_equitable},
        {"14. frontend round trips and CLI exit-code contract", c14_frontend},
    };

    int failures = 0;
    for (const auto& [name, body] : criteria) {
        Check c;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        if (c.ok) {
            std::cout << "PASS " << name << "\n";
        } else {
            std::cout << "FAIL " << name << " -- " << c.detail << "\n";
            ++failures;
        }
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures ? 1 : 0;
}
