#include "uqgh/hopf.hpp"

namespace uqgh {

std::string TensorMono::to_string() const {
    return left.to_string() + " (x) " + right.to_string();
}

TensorElement TensorElement::one() {
    TensorElement t;
    t.add_term({}, RatFunc(1));
    return t;
}

TensorElement TensorElement::pure(const AlgebraElement& a, const AlgebraElement& b) {
    TensorElement t;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
    return t;
}

void TensorElement::add_term(const TensorMono& mono, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const AlgebraElement left =
                multiply(AlgebraElement::monomial(ma.left), AlgebraElement::monomial(mb.left));
            const AlgebraElement right =
                multiply(AlgebraElement::monomial(ma.right), AlgebraElement::monomial(mb.right));
            TensorElement prod = TensorElement::pure(left, right);
            const RatFunc c = ca * cb;
            for (const auto& [mono, pc] : prod.terms()) out.add_term(mono, pc * c);
        }
    return out;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        RatFunc c = it->second;
        const bool neg = c.lead_negative();
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (!c.is_one()) out += "(" + c.to_string() + ") ";
        out += it->first.to_string();
    }
    return out;
}

namespace {

TensorElement coproduct_of_gen(Gen g) {
    TensorElement t;
    switch (g) {
        case Gen::E:
            // h^-1 (x) E + E (x) hK
            t.add_term({{.s = -1}, {.t = 1}}, RatFunc(1));
            t.add_term({{.t = 1}, {.m = 1, .s = 1}}, RatFunc(1));
            break;
        case Gen::F:
            // K^-1 h g^2 (x) F + F (x) h^-1
            t.add_term({{.m = -1, .n = 2, .s = 1}, {.l = 1}}, RatFunc(1));
            t.add_term({{.l = 1}, {.s = -1}}, RatFunc(1));
            break;
        default: {
            // K^{+-1}, g^{+-1}, h^{+-1} are group-like
            AlgebraElement x = AlgebraElement::generator(g);
            const PBWMonomial mono = x.terms().begin()->first;
            t.add_term({mono, mono}, RatFunc(1));
            break;
        }
    }
    return t;
}

TensorElement tensor_pow(const TensorElement& base, long e) {
    TensorElement acc = TensorElement::one();
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

}  // namespace

TensorElement coproduct(const AlgebraElement& a) {
    TensorElement out;
    for (const auto& [mono, c] : a.terms()) {
        // D is multiplicative: D(F)^l D(K)^m D(g)^n D(h)^s D(E)^t
        TensorElement acc = tensor_pow(coproduct_of_gen(Gen::F), mono.l);
        acc = acc * tensor_pow(coproduct_of_gen(mono.m >= 0 ? Gen::K : Gen::Kinv), std::abs(mono.m));
        acc = acc * tensor_pow(coproduct_of_gen(mono.n >= 0 ? Gen::G : Gen::Ginv), std::abs(mono.n));
        acc = acc * tensor_pow(coproduct_of_gen(mono.s >= 0 ? Gen::H : Gen::Hinv), std::abs(mono.s));
        acc = acc * tensor_pow(coproduct_of_gen(Gen::E), mono.t);
        for (const auto& [tm, tc] : acc.terms()) out.add_term(tm, tc * c);
    }
    return out;
}

RatFunc counit(const AlgebraElement& a) {
    RatFunc out(0);
    for (const auto& [mono, c] : a.terms())
        if (mono.is_torus()) out += c;
    return out;
}

AlgebraElement antipode(const AlgebraElement& a) {
    static const AlgebraElement s_e = -normalize(GenWord{RatFunc(1), {Gen::E, Gen::Kinv}});
    static const AlgebraElement s_f = -normalize(GenWord{RatFunc(1), {Gen::K, Gen::F, Gen::Ginv, Gen::Ginv}});
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) {
        // S reverses products: S(F^l T E^t) = S(E)^t T^-1 S(F)^l
        AlgebraElement img = s_e.pow(mono.t);
        img = multiply(img, AlgebraElement::torus(-mono.m, -mono.n, -mono.s));
        img = multiply(img, s_f.pow(mono.l));
        img *= c;
        out += img;
    }
    return out;
}

TensorElement3 coproduct_left(const TensorElement& t) {
    TensorElement3 out;
    for (const auto& [mono, c] : t.terms()) {
        const TensorElement d = coproduct(AlgebraElement::monomial(mono.left));
        for (const auto& [dm, dc] : d.terms()) {
            const TensorMono3 key{dm.left, dm.right, mono.right};
            auto [it, inserted] = out.try_emplace(key, dc * c);
            if (!inserted) {
                it->second += dc * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

TensorElement3 coproduct_right(const TensorElement& t) {
    TensorElement3 out;
    for (const auto& [mono, c] : t.terms()) {
        const TensorElement d = coproduct(AlgebraElement::monomial(mono.right));
        for (const auto& [dm, dc] : d.terms()) {
            const TensorMono3 key{mono.left, dm.left, dm.right};
            auto [it, inserted] = out.try_emplace(key, dc * c);
            if (!inserted) {
                it->second += dc * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

AlgebraElement counit_left(const TensorElement& t) {
    AlgebraElement out;
    for (const auto& [mono, c] : t.terms())
        if (mono.left.is_torus()) out.add_term(mono.right, c);
    return out;
}

AlgebraElement counit_right(const TensorElement& t) {
    AlgebraElement out;
    for (const auto& [mono, c] : t.terms())
        if (mono.right.is_torus()) out.add_term(mono.left, c);
    return out;
}

AlgebraElement antipode_mul_left(const TensorElement& t) {
    AlgebraElement out;
    for (const auto& [mono, c] : t.terms()) {
        AlgebraElement p =
            multiply(antipode(AlgebraElement::monomial(mono.left)), AlgebraElement::monomial(mono.right));
        p *= c;
        out += p;
    }
    return out;
}

AlgebraElement antipode_mul_right(const TensorElement& t) {
    AlgebraElement out;
    for (const auto& [mono, c] : t.terms()) {
        AlgebraElement p =
            multiply(AlgebraElement::monomial(mono.left), antipode(AlgebraElement::monomial(mono.right)));
        p *= c;
        out += p;
    }
    return out;
}

bool HopfReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string first_tensor3_diff(const TensorElement3& a, const TensorElement3& b) {
    for (const auto& [mono, c] : a) {
        auto it = b.find(mono);
        if (it == b.end() || !(it->second == c))
            return mono.a.to_string() + " (x) " + mono.b.to_string() + " (x) " + mono.c.to_string();
    }
    for (const auto& [mono, c] : b)
        if (!a.contains(mono))
            return mono.a.to_string() + " (x) " + mono.b.to_string() + " (x) " + mono.c.to_string();
    return "";
}

std::string first_element_diff(const AlgebraElement& a, const AlgebraElement& b) {
    const AlgebraElement d = a - b;
    if (d.is_zero()) return "";
    return d.terms().begin()->first.to_string();
}

std::string first_tensor_diff(const TensorElement& a, const TensorElement& b) {
    const TensorElement d = a - b;
    if (d.is_zero()) return "";
    return d.terms().begin()->first.to_string();
}

void check_one(HopfReport& report, const AlgebraElement& a) {
    const std::string in = a.to_string();
    const TensorElement da = coproduct(a);

    {
        const TensorElement3 lhs = coproduct_left(da);
        const TensorElement3 rhs = coproduct_right(da);
        report.checks.push_back(
            {"coassociativity", in, lhs == rhs, first_tensor3_diff(lhs, rhs)});
    }
    {
        const AlgebraElement lhs = counit_left(da);
        const AlgebraElement rhs = counit_right(da);
        const bool pass = lhs == a && rhs == a;
        std::string witness = first_element_diff(lhs, a);
        if (witness.empty()) witness = first_element_diff(rhs, a);
        report.checks.push_back({"counit", in, pass, pass ? "" : witness});
    }
    {
        const AlgebraElement target = AlgebraElement::scalar(counit(a));
        const AlgebraElement lhs = antipode_mul_left(da);
        const AlgebraElement rhs = antipode_mul_right(da);
        const bool pass = lhs == target && rhs == target;
        std::string witness = first_element_diff(lhs, target);
        if (witness.empty()) witness = first_element_diff(rhs, target);
        report.checks.push_back({"antipode", in, pass, pass ? "" : witness});
    }
}

void check_pair(HopfReport& report, const AlgebraElement& a, const AlgebraElement& b) {
    const std::string in = "(" + a.to_string() + ", " + b.to_string() + ")";
    const AlgebraElement ab = multiply(a, b);
    {
        const TensorElement lhs = coproduct(ab);
        const TensorElement rhs = coproduct(a) * coproduct(b);
        report.checks.push_back(
            {"coproduct multiplicative", in, lhs == rhs, first_tensor_diff(lhs, rhs)});
    }
    {
        const bool pass = counit(ab) == counit(a) * counit(b);
        report.checks.push_back({"counit multiplicative", in, pass, pass ? "" : "unit term"});
    }
}

}  // namespace

HopfReport check_hopf_axioms(const std::vector<AlgebraElement>& samples) {
    HopfReport report;
    for (const auto& a : samples) check_one(report, a);
    for (size_t i = 0; i + 1 < samples.size(); i += 2) check_pair(report, samples[i], samples[i + 1]);
    return report;
}

}  // namespace uqgh
