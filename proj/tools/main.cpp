// Command-line front end: exit code 0 on success, 1 when a verification
// fails, 2 on usage or parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "uqgh/center.hpp"
#include "uqgh/equitable.hpp"
#include "uqgh/hopf.hpp"
#include "uqgh/parse.hpp"
#include "uqgh/rep.hpp"
#include "uqgh/sampling.hpp"
#include "uqgh/serialize.hpp"
#include "uqgh/verma.hpp"

using namespace uqgh;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

std::vector<RatFunc> parse_csv_scalars(const std::string& text, size_t expected) {
    std::vector<RatFunc> out;
    size_t start = 0;
    while (true) {
        const size_t comma = text.find(',', start);
        out.push_back(parse_scalar(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected)
        throw std::domain_error("expected " + std::to_string(expected) + " comma-separated values");
    return out;
}

WeightModule load_module(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open " + path);
    json j;
    in >> j;
    return module_from_json(j);
}

void print_module(const WeightModule& m, bool as_json) {
    if (as_json) {
        std::cout << module_to_json(m).dump(2) << "\n";
        return;
    }
    std::cout << "dimension " << m.dim() << "\n";
    if (m.weights()) {
        std::cout << "weights (lambda, alpha, beta):\n";
        for (size_t i = 0; i < m.dim(); ++i) {
            const auto& w = (*m.weights())[i];
            std::cout << "  " << m.basis_labels()[i] << ": (" << w.lambda.to_string() << ", "
                      << w.alpha.to_string() << ", " << w.beta.to_string() << ")\n";
        }
    }
    for (Gen g : kAllGens) {
        std::cout << gen_name(g) << ":\n";
        const Matrix& a = m.action(g);
        for (size_t i = 0; i < a.rows(); ++i) {
            std::cout << "  [";
            for (size_t j = 0; j < a.cols(); ++j)
                std::cout << (j ? ", " : "") << a.at(i, j).to_string();
            std::cout << "]\n";
        }
    }
}

int print_report(const HopfReport& r, bool as_json, const std::string& summary) {
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else {
        size_t failed = 0;
        for (const auto& c : r.checks)
            if (!c.pass) {
                ++failed;
                std::cout << "FAIL " << c.axiom << " on " << c.input
                          << " (first differing term: " << c.witness << ")\n";
            }
        std::cout << summary << ": " << r.checks.size() - failed << "/" << r.checks.size()
                  << " checks passed\n";
    }
    return r.all_pass() ? kOk : kVerifyFail;
}

int print_report(const EqReport& r, bool as_json, const std::string& summary) {
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else {
        size_t failed = 0;
        for (const auto& c : r.checks)
            if (!c.pass) {
                ++failed;
                std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
            }
        std::cout << summary << ": " << r.checks.size() - failed << "/" << r.checks.size()
                  << " checks passed\n";
    }
    return r.all_pass() ? kOk : kVerifyFail;
}

int run(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the two-parameter quantum enveloping algebra "
                 "U_{g,h} (generators E, F, K, g, h over Q(q))"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string expr, ma, mb, pa, pb, point;
    std::string va = "1", vb = "1", vc = "1", wa, wb, wc, wap, wbp, wcp;
    std::string alpha = "1", beta = "1", xpar = "0", ypar = "0";
    int eps = 1;
    long nn = 0, samples = 50, cutoff = 12;
    unsigned long seed = 0;
    bool twisted = false;

    auto* c_norm = app.add_subcommand("normalize", "PBW normal form of an expression");
    c_norm->add_option("expr", expr, "expression")->required();

    auto* c_central = app.add_subcommand("central", "test centrality of an expression");
    c_central->add_option("expr", expr, "expression")->required();

    auto* c_hopf = app.add_subcommand("hopf-check", "verify the Hopf axioms on samples");
    c_hopf->add_option("--samples", samples, "number of random elements");
    c_hopf->add_option("--seed", seed, "random seed");

    auto* c_simple = app.add_subcommand("simple", "finite-dimensional simple module");
    c_simple->add_option("--eps", eps, "+1 or -1")->required();
    c_simple->add_option("--n", nn, "highest F-string length")->required();
    c_simple->add_option("--alpha", alpha, "g eigenvalue")->required();
    c_simple->add_option("--beta", beta, "h eigenvalue")->required();

    auto* c_tensor = app.add_subcommand("tensor-decompose", "decompose a tensor product");
    c_tensor->add_option("left", ma, "module JSON file")->required();
    c_tensor->add_option("right", mb, "module JSON file")->required();

    auto* c_dual = app.add_subcommand("dual", "dual module");
    c_dual->add_option("module", ma, "module JSON file")->required();
    c_dual->add_flag("--twisted", twisted, "use the anti-involution duality");

    auto* c_ext = app.add_subcommand("ext-dims", "Ext dimensions between torus modules");
    c_ext->add_option("--p", pa, "alpha,beta")->required();
    c_ext->add_option("--pprime", pb, "alpha',beta'")->required();

    auto* c_verma = app.add_subcommand("verma", "truncated Verma module report");
    c_verma->add_option("--a", va, "K value")->required();
    c_verma->add_option("--b", vb, "g value")->required();
    c_verma->add_option("--c", vc, "h value")->required();
    c_verma->add_option("--cutoff", cutoff, "truncation degree");

    auto* c_vhom = app.add_subcommand("verma-hom", "homomorphism between Verma modules");
    c_vhom->add_option("a", wa)->required();
    c_vhom->add_option("b", wb)->required();
    c_vhom->add_option("c", wc)->required();
    c_vhom->add_option("ap", wap)->required();
    c_vhom->add_option("bp", wbp)->required();
    c_vhom->add_option("cp", wcp)->required();
    c_vhom->add_option("--cutoff", cutoff, "truncation degree");

    auto* c_char = app.add_subcommand("char", "central character value");
    c_char->add_option("--point", point, "a,b,c")->required();
    c_char->add_option("expr", expr, "central expression")->required();

    app.add_subcommand("equitable-check", "verify the equitable presentation");

    auto* c_extmod = app.add_subcommand("extension", "self-extension module");
    c_extmod->add_option("--eps", eps, "+1 or -1")->required();
    c_extmod->add_option("--n", nn, "highest F-string length")->required();
    c_extmod->add_option("--alpha", alpha, "g eigenvalue")->required();
    c_extmod->add_option("--beta", beta, "h eigenvalue")->required();
    c_extmod->add_option("--x", xpar, "g off-diagonal entry")->required();
    c_extmod->add_option("--y", ypar, "h off-diagonal entry")->required();

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->add_flag("--json", as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    if (c_norm->parsed()) {
        const AlgebraElement a = parse_element(expr);
        if (as_json)
            std::cout << json{{"schema", 1}, {"input", expr}, {"normal_form", render(a)}}.dump(2)
                      << "\n";
        else
            std::cout << render(a) << "\n";
        return kOk;
    }
    if (c_central->parsed()) {
        const bool central = is_central(parse_element(expr));
        if (as_json)
            std::cout << json{{"schema", 1}, {"central", central}}.dump(2) << "\n";
        else
            std::cout << (central ? "true" : "false") << "\n";
        return central ? kOk : kVerifyFail;
    }
    if (c_hopf->parsed()) {
        std::vector<AlgebraElement> elems;
        for (Gen g : kAllGens) elems.push_back(AlgebraElement::generator(g));
        for (Gen g1 : kAllGens)
            for (Gen g2 : kAllGens)
                elems.push_back(normalize(GenWord{RatFunc(1), {g1, g2}}));
        Sampler s(seed);
        for (long i = 0; i < samples; ++i) elems.push_back(s.element(3, 3));
        return print_report(check_hopf_axioms(elems), as_json, "hopf axioms");
    }
    if (c_simple->parsed()) {
        print_module(simple_module({eps, nn, parse_scalar(alpha), parse_scalar(beta)}), as_json);
        return kOk;
    }
    if (c_tensor->parsed()) {
        const WeightModule t = tensor(load_module(ma), load_module(mb));
        try {
            const auto parts = decompose(t);
            if (as_json) {
                json arr = json::array();
                for (const auto& d : parts)
                    arr.push_back({{"eps", d.eps},
                                   {"n", d.n},
                                   {"alpha", d.alpha.to_string()},
                                   {"beta", d.beta.to_string()}});
                std::cout << json{{"schema", 1}, {"summands", arr}}.dump(2) << "\n";
            } else {
                for (const auto& d : parts) std::cout << d.to_string() << "\n";
            }
            return kOk;
        } catch (const DecomposeError& e) {
            std::cerr << "error: " << e.what() << " (defect " << e.defect << ")\n";
            return kVerifyFail;
        }
    }
    if (c_dual->parsed()) {
        const WeightModule m = load_module(ma);
        print_module(twisted ? twisted_dual(m) : dual_module(m), as_json);
        return kOk;
    }
    if (c_ext->parsed()) {
        const auto p = parse_csv_scalars(pa, 2);
        const auto pp = parse_csv_scalars(pb, 2);
        const auto dims = ext_dims_torus(p[0], p[1], pp[0], pp[1]);
        if (as_json)
            std::cout << json{{"schema", 1}, {"ext", {dims[0], dims[1], dims[2]}}}.dump(2) << "\n";
        else
            std::cout << "Ext^0 = " << dims[0] << ", Ext^1 = " << dims[1]
                      << ", Ext^2 = " << dims[2] << "\n";
        return kOk;
    }
    if (c_verma->parsed()) {
        const TruncatedVerma v = verma(parse_scalar(va), parse_scalar(vb), parse_scalar(vc), cutoff);
        const auto maxv = maximal_vectors(v);
        const auto simplicity = is_simple_verma(v.a(), v.b(), v.c(), cutoff);
        if (as_json) {
            json table = json::array();
            for (const auto& mv : maxv)
                table.push_back({{"depth", mv.depth},
                                 {"eps", mv.eps},
                                 {"weight",
                                  {mv.weight.lambda.to_string(), mv.weight.alpha.to_string(),
                                   mv.weight.beta.to_string()}}});
            std::cout << json{{"schema", 1},
                              {"a", v.a().to_string()},
                              {"b", v.b().to_string()},
                              {"c", v.c().to_string()},
                              {"cutoff", v.cutoff()},
                              {"maximal_vectors", table},
                              {"simplicity", simplicity.to_string()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "V(a, b, c) with a = " << v.a().to_string() << ", b = " << v.b().to_string()
                      << ", c = " << v.c().to_string() << ", cutoff " << v.cutoff() << "\n";
            std::cout << "maximal weight vectors:\n";
            for (const auto& mv : maxv) {
                std::cout << "  depth " << mv.depth;
                if (mv.depth == 0)
                    std::cout << " (generator)";
                else
                    std::cout << " (eps = " << (mv.eps > 0 ? "+1" : "-1") << ")";
                std::cout << ", weight (" << mv.weight.lambda.to_string() << ", "
                          << mv.weight.alpha.to_string() << ", " << mv.weight.beta.to_string()
                          << ")\n";
            }
            std::cout << "simplicity: " << simplicity.to_string() << "\n";
        }
        return kOk;
    }
    if (c_vhom->parsed()) {
        const auto res = verma_hom(parse_scalar(wa), parse_scalar(wb), parse_scalar(wc),
                                   parse_scalar(wap), parse_scalar(wbp), parse_scalar(wcp), cutoff);
        const char* status = res.status == HomStatus::Found        ? "found"
                             : res.status == HomStatus::Inconclusive ? "inconclusive at this cutoff"
                                                                     : "none";
        if (as_json) {
            json j{{"schema", 1}, {"status", status}};
            if (res.status == HomStatus::Found) j["n"] = res.n;
            std::cout << j.dump(2) << "\n";
        } else if (res.status == HomStatus::Found) {
            std::cout << "found: F^p v |-> F^(p+" << res.n << ") v'\n";
        } else {
            std::cout << status << "\n";
        }
        return res.status == HomStatus::Found ? kOk : kVerifyFail;
    }
    if (c_char->parsed()) {
        const auto abc = parse_csv_scalars(point, 3);
        const CentralCharacterPoint p(abc[0], abc[1], abc[2]);
        const RatFunc value = central_character(p, parse_element(expr));
        if (as_json)
            std::cout << json{{"schema", 1}, {"value", value.to_string()}}.dump(2) << "\n";
        else
            std::cout << value.to_string() << "\n";
        return kOk;
    }
    if (app.get_subcommand("equitable-check")->parsed()) {
        const EqReport relations = verify_equitable_relations();
        const EqReport hopf = verify_equitable_hopf();
        if (as_json) {
            std::cout << json{{"schema", 1},
                              {"relations", report_to_json(relations)},
                              {"hopf", report_to_json(hopf)}}
                             .dump(2)
                      << "\n";
            return relations.all_pass() && hopf.all_pass() ? kOk : kVerifyFail;
        }
        const int r1 = print_report(relations, false, "equitable relations");
        const int r2 = print_report(hopf, false, "equitable hopf transport");
        return r1 == kOk && r2 == kOk ? kOk : kVerifyFail;
    }
    if (c_extmod->parsed()) {
        print_module(extension_module({eps, nn, parse_scalar(alpha), parse_scalar(beta)},
                                      {parse_scalar(xpar), parse_scalar(ypar)}),
                     as_json);
        return kOk;
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DecomposeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
