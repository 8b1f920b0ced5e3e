// Python module exposing the main operations through the string grammar and
// the JSON module format, so no custom type casters are needed.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uqgh/center.hpp"
#include "uqgh/equitable.hpp"
#include "uqgh/hopf.hpp"
#include "uqgh/parse.hpp"
#include "uqgh/rep.hpp"
#include "uqgh/sampling.hpp"
#include "uqgh/serialize.hpp"
#include "uqgh/verma.hpp"

namespace py = pybind11;
using namespace uqgh;

namespace {

std::string module_json(const WeightModule& m) { return module_to_json(m).dump(); }

WeightModule module_from(const std::string& text) {
    return module_from_json(nlohmann::json::parse(text));
}

py::dict hwd_dict(const HighestWeightData& d) {
    py::dict out;
    out["eps"] = d.eps;
    out["n"] = d.n;
    out["alpha"] = d.alpha.to_string();
    out["beta"] = d.beta.to_string();
    return out;
}

}  // namespace

PYBIND11_MODULE(uqgh, m) {
    m.doc() = "exact symbolic engine for the two-parameter quantum enveloping algebra U_{g,h}";

    m.def("normalize", [](const std::string& expr) { return render(parse_element(expr)); },
          py::arg("expr"), "PBW normal form of an expression over E, F, K, g, h");
    m.def("multiply",
          [](const std::string& a, const std::string& b) {
              return render(multiply(parse_element(a), parse_element(b)));
          },
          py::arg("a"), py::arg("b"));
    m.def("qint", [](long n) { return qint(n).to_string(); }, py::arg("n"));
    m.def("qfact", [](long n) { return qfact(n).to_string(); }, py::arg("n"));
    m.def("casimir", [] { return render(casimir()); });
    m.def("is_central", [](const std::string& expr) { return is_central(parse_element(expr)); },
          py::arg("expr"));
    m.def("coproduct", [](const std::string& expr) {
        return coproduct(parse_element(expr)).to_string();
    });
    m.def("antipode", [](const std::string& expr) {
        return render(antipode(parse_element(expr)));
    });
    m.def("counit", [](const std::string& expr) {
        return counit(parse_element(expr)).to_string();
    });

    m.def("central_character",
          [](const std::string& a, const std::string& b, const std::string& c,
             const std::string& expr) {
              return central_character({parse_scalar(a), parse_scalar(b), parse_scalar(c)},
                                       parse_element(expr))
                  .to_string();
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("expr"));
    m.def("characters_equal",
          [](const std::string& a, const std::string& b, const std::string& c,
             const std::string& ap, const std::string& bp, const std::string& cp) {
              return characters_equal({parse_scalar(a), parse_scalar(b), parse_scalar(c)},
                                      {parse_scalar(ap), parse_scalar(bp), parse_scalar(cp)});
          });

    m.def("hopf_check",
          [](long samples, unsigned long seed) {
              std::vector<AlgebraElement> elems;
              for (Gen g : kAllGens) elems.push_back(AlgebraElement::generator(g));
              for (Gen g1 : kAllGens)
                  for (Gen g2 : kAllGens)
                      elems.push_back(normalize(GenWord{RatFunc(1), {g1, g2}}));
              Sampler s(seed);
              for (long i = 0; i < samples; ++i) elems.push_back(s.element(3, 3));
              return report_to_json(check_hopf_axioms(elems)).dump();
          },
          py::arg("samples") = 50, py::arg("seed") = 0);

    m.def("simple_module",
          [](int eps, long n, const std::string& alpha, const std::string& beta) {
              return module_json(simple_module({eps, n, parse_scalar(alpha), parse_scalar(beta)}));
          },
          py::arg("eps"), py::arg("n"), py::arg("alpha"), py::arg("beta"),
          "simple module as JSON");
    m.def("extension_module",
          [](int eps, long n, const std::string& alpha, const std::string& beta,
             const std::string& x, const std::string& y) {
              return module_json(extension_module({eps, n, parse_scalar(alpha), parse_scalar(beta)},
                                                  {parse_scalar(x), parse_scalar(y)}));
          });
    m.def("tensor", [](const std::string& a, const std::string& b) {
        return module_json(tensor(module_from(a), module_from(b)));
    });
    m.def("dual", [](const std::string& a, bool twisted) {
        const WeightModule v = module_from(a);
        return module_json(twisted ? twisted_dual(v) : dual_module(v));
    }, py::arg("module"), py::arg("twisted") = false);
    m.def("check_module", [](const std::string& a) {
        const RelationReport r = check_module(module_from(a));
        return py::make_tuple(r.pass, r.first_violation);
    });
    m.def("decompose", [](const std::string& a) {
        py::list out;
        for (const auto& d : decompose(module_from(a))) out.append(hwd_dict(d));
        return out;
    });
    m.def("ext_dims_torus",
          [](const std::string& a, const std::string& b, const std::string& ap,
             const std::string& bp) {
              const auto dims = ext_dims_torus(parse_scalar(a), parse_scalar(b), parse_scalar(ap),
                                               parse_scalar(bp));
              return py::make_tuple(dims[0], dims[1], dims[2]);
          });

    m.def("verma_report",
          [](const std::string& a, const std::string& b, const std::string& c, long cutoff) {
              const TruncatedVerma v =
                  verma(parse_scalar(a), parse_scalar(b), parse_scalar(c), cutoff);
              py::dict out;
              out["cutoff"] = v.cutoff();
              py::list table;
              for (const auto& mv : maximal_vectors(v)) {
                  py::dict row;
                  row["depth"] = mv.depth;
                  row["eps"] = mv.eps;
                  table.append(row);
              }
              out["maximal_vectors"] = table;
              out["simplicity"] = is_simple_verma(v.a(), v.b(), v.c(), cutoff).to_string();
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("cutoff") = 12);
    m.def("verma_hom",
          [](const std::string& a, const std::string& b, const std::string& c,
             const std::string& ap, const std::string& bp, const std::string& cp,
             long cutoff) -> py::object {
              const auto res = verma_hom(parse_scalar(a), parse_scalar(b), parse_scalar(c),
                                         parse_scalar(ap), parse_scalar(bp), parse_scalar(cp),
                                         cutoff);
              if (res.status == HomStatus::Found) return py::int_(res.n);
              if (res.status == HomStatus::None) return py::none();
              return py::str("inconclusive");
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("ap"), py::arg("bp"), py::arg("cp"),
          py::arg("cutoff") = 12);

    m.def("equitable_check", [] {
        EqReport r = verify_equitable_relations();
        const EqReport h = verify_equitable_hopf();
        r.checks.insert(r.checks.end(), h.checks.begin(), h.checks.end());
        return report_to_json(r).dump();
    });
}
