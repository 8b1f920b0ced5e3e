#include "uqgh/pbw.hpp"

#include <stdexcept>

namespace uqgh {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::E: return "E";
        case Gen::F: return "F";
        case Gen::K: return "K";
        case Gen::Kinv: return "K^-1";
        case Gen::G: return "g";
        case Gen::Ginv: return "g^-1";
        case Gen::H: return "h";
        case Gen::Hinv: return "h^-1";
    }
    return "?";
}

Gen gen_inverse(Gen g) {
    switch (g) {
        case Gen::K: return Gen::Kinv;
        case Gen::Kinv: return Gen::K;
        case Gen::G: return Gen::Ginv;
        case Gen::Ginv: return Gen::G;
        case Gen::H: return Gen::Hinv;
        case Gen::Hinv: return Gen::H;
        default: throw std::domain_error("E, F are not invertible");
    }
}

namespace {

void append_power(std::string& out, const char* name, long e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string PBWMonomial::to_string() const {
    if (is_unit()) return "1";
    std::string out;
    append_power(out, "F", l);
    append_power(out, "K", m);
    append_power(out, "g", n);
    append_power(out, "h", s);
    append_power(out, "E", t);
    return out;
}

AlgebraElement AlgebraElement::generator(Gen g) {
    PBWMonomial mono;
    switch (g) {
        case Gen::E: mono.t = 1; break;
        case Gen::F: mono.l = 1; break;
        case Gen::K: mono.m = 1; break;
        case Gen::Kinv: mono.m = -1; break;
        case Gen::G: mono.n = 1; break;
        case Gen::Ginv: mono.n = -1; break;
        case Gen::H: mono.s = 1; break;
        case Gen::Hinv: mono.s = -1; break;
    }
    return monomial(mono);
}

AlgebraElement AlgebraElement::monomial(const PBWMonomial& mono, const RatFunc& coeff) {
    AlgebraElement a;
    a.add_term(mono, coeff);
    return a;
}

AlgebraElement AlgebraElement::torus(long m, long n, long s, const RatFunc& coeff) {
    return monomial({.l = 0, .m = m, .n = n, .s = s, .t = 0}, coeff);
}

bool AlgebraElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

RatFunc AlgebraElement::scalar_part() const {
    auto it = terms_.find(PBWMonomial{});
    return it == terms_.end() ? RatFunc(0) : it->second;
}

void AlgebraElement::add_term(const PBWMonomial& mono, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b);
}

AlgebraElement AlgebraElement::pow(long e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw std::domain_error("negative power of a non-invertible element");
        const auto& [mono, c] = *terms_.begin();
        if (!mono.is_torus()) throw std::domain_error("negative power of a non-invertible element");
        PBWMonomial inv{.l = 0, .m = -mono.m, .n = -mono.n, .s = -mono.s, .t = 0};
        return monomial(inv, c.inv()).pow(-e);
    }
    AlgebraElement acc = one();
    AlgebraElement base(*this);
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<GenWord> AlgebraElement::to_words() const {
    std::vector<GenWord> words;
    for (const auto& [mono, c] : terms_) {
        GenWord w;
        w.scalar = c;
        for (long i = 0; i < mono.l; ++i) w.letters.push_back(Gen::F);
        for (long i = 0; i < std::abs(mono.m); ++i)
            w.letters.push_back(mono.m > 0 ? Gen::K : Gen::Kinv);
        for (long i = 0; i < std::abs(mono.n); ++i)
            w.letters.push_back(mono.n > 0 ? Gen::G : Gen::Ginv);
        for (long i = 0; i < std::abs(mono.s); ++i)
            w.letters.push_back(mono.s > 0 ? Gen::H : Gen::Hinv);
        for (long i = 0; i < mono.t; ++i) w.letters.push_back(Gen::E);
        words.push_back(std::move(w));
    }
    return words;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // printed order: lexicographic descending on (l, m, n, s, t)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const PBWMonomial& mono = it->first;
        RatFunc c = it->second;
        const bool neg = c.lead_negative();
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mono.is_unit()) {
            const std::string cs = c.to_string();
            out += c.is_one() || cs.find(' ') == std::string::npos ? cs : "(" + cs + ")";
        } else if (c.is_one()) {
            out += mono.to_string();
        } else {
            out += "(" + c.to_string() + ") " + mono.to_string();
        }
    }
    return out;
}

namespace {

// scalar pieces of the commutator (K - K^-1 g^2)/(q - q^-1)
const RatFunc& qcomm_denom_inv() {
    static const RatFunc v = (RatFunc::q_power(1) - RatFunc::q_power(-1)).inv();
    return v;
}

// single step: normalized monomial times F on the right
void mul_mono_f(const PBWMonomial& mono, const RatFunc& coeff, AlgebraElement& out) {
    if (mono.t == 0) {
        // F^l K^m g^n h^s F = q^{-2m} F^{l+1} K^m g^n h^s
        PBWMonomial r = mono;
        r.l += 1;
        out.add_term(r, coeff * RatFunc::q_power(static_cast<int>(-2 * mono.m)));
        return;
    }
    // peel one E:  A E F = A F E + A (K - K^-1 g^2)/(q - q^-1),  A = mono with t-1
    PBWMonomial a = mono;
    a.t -= 1;
    AlgebraElement af;
    mul_mono_f(a, coeff, af);
    for (const auto& [rm, rc] : af.terms()) {
        PBWMonomial r = rm;
        r.t += 1;
        out.add_term(r, rc);
    }
    // A (K - K^-1 g^2): the torus factors pass the remaining E^{t-1}
    const RatFunc c = coeff * qcomm_denom_inv();
    PBWMonomial k = a;
    k.m += 1;
    out.add_term(k, c * RatFunc::q_power(static_cast<int>(-2 * a.t)));
    PBWMonomial kg = a;
    kg.m -= 1;
    kg.n += 2;
    out.add_term(kg, -c * RatFunc::q_power(static_cast<int>(2 * a.t)));
}

AlgebraElement mul_gen_right(const AlgebraElement& a, Gen x) {
    AlgebraElement out;
    for (const auto& [mono, coeff] : a.terms()) {
        PBWMonomial r = mono;
        switch (x) {
            case Gen::E:
                r.t += 1;
                out.add_term(r, coeff);
                break;
            case Gen::K:
                r.m += 1;
                out.add_term(r, coeff * RatFunc::q_power(static_cast<int>(-2 * mono.t)));
                break;
            case Gen::Kinv:
                r.m -= 1;
                out.add_term(r, coeff * RatFunc::q_power(static_cast<int>(2 * mono.t)));
                break;
            case Gen::G:
                r.n += 1;
                out.add_term(r, coeff);
                break;
            case Gen::Ginv:
                r.n -= 1;
                out.add_term(r, coeff);
                break;
            case Gen::H:
                r.s += 1;
                out.add_term(r, coeff);
                break;
            case Gen::Hinv:
                r.s -= 1;
                out.add_term(r, coeff);
                break;
            case Gen::F:
                mul_mono_f(mono, coeff, out);
                break;
        }
    }
    return out;
}

}  // namespace

AlgebraElement mul_by_generator(const AlgebraElement& a, Gen x, Side side) {
    if (side == Side::Right) return mul_gen_right(a, x);
    return multiply(AlgebraElement::generator(x), a);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [mono, c] : b.terms()) {
        // peel the right factor one generator at a time, in PBW order
        AlgebraElement acc = a;
        acc *= c;
        for (long i = 0; i < mono.l; ++i) acc = mul_gen_right(acc, Gen::F);
        for (long i = 0; i < std::abs(mono.m); ++i)
            acc = mul_gen_right(acc, mono.m > 0 ? Gen::K : Gen::Kinv);
        for (long i = 0; i < std::abs(mono.n); ++i)
            acc = mul_gen_right(acc, mono.n > 0 ? Gen::G : Gen::Ginv);
        for (long i = 0; i < std::abs(mono.s); ++i)
            acc = mul_gen_right(acc, mono.s > 0 ? Gen::H : Gen::Hinv);
        for (long i = 0; i < mono.t; ++i) acc = mul_gen_right(acc, Gen::E);
        out += acc;
    }
    return out;
}

AlgebraElement normalize(const GenWord& word) {
    AlgebraElement acc = AlgebraElement::scalar(word.scalar);
    for (Gen g : word.letters) acc = mul_gen_right(acc, g);
    return acc;
}

AlgebraElement normalize(const std::vector<GenWord>& words) {
    AlgebraElement out;
    for (const auto& w : words) out += normalize(w);
    return out;
}

AlgebraElement e_fpow_commutator(long m) {
    if (m < 1) throw std::domain_error("e_fpow_commutator requires m >= 1");
    const RatFunc c = qint(m) * qcomm_denom_inv();
    AlgebraElement out;
    out.add_term({.l = m - 1, .m = 1, .n = 0, .s = 0, .t = 0},
                 c * RatFunc::q_power(static_cast<int>(-(m - 1))));
    out.add_term({.l = m - 1, .m = -1, .n = 2, .s = 0, .t = 0},
                 -c * RatFunc::q_power(static_cast<int>(m - 1)));
    return out;
}

AlgebraElement anti_involution(const AlgebraElement& a) {
    static const AlgebraElement i_e = -normalize(GenWord{RatFunc(1), {Gen::K, Gen::F}});
    static const AlgebraElement i_f = -normalize(GenWord{RatFunc(1), {Gen::E, Gen::Kinv}});
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) {
        // i reverses products: i(F^l T E^t) = i(E)^t T i(F)^l with T the torus part
        AlgebraElement img = i_e.pow(mono.t);
        img = multiply(img, AlgebraElement::torus(mono.m, mono.n, mono.s));
        img = multiply(img, i_f.pow(mono.l));
        img *= c;
        out += img;
    }
    return out;
}

}  // namespace uqgh
