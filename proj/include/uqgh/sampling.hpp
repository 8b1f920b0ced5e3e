#pragma once

#include <random>
#include <vector>

#include "uqgh/pbw.hpp"

namespace uqgh {

// Seeded deterministic sampling for property checks. Raw modular draws keep
// the output identical across platforms, which std::uniform_int_distribution
// does not guarantee.
class Sampler {
public:
    explicit Sampler(unsigned long seed) : rng_(seed) {}

    unsigned long next(unsigned long bound) { return rng_() % bound; }
    long next_int(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next(static_cast<unsigned long>(hi - lo + 1)));
    }

    Gen gen() { return kAllGens[next(kAllGens.size())]; }

    std::vector<Gen> word(size_t min_len, size_t max_len) {
        const size_t len = min_len + next(max_len - min_len + 1);
        std::vector<Gen> w(len);
        for (auto& g : w) g = gen();
        return w;
    }

    // small Laurent polynomial with integer coefficients, never zero
    RatFunc laurent(int max_abs_deg, int max_terms) {
        LaurentPoly lp;
        const int terms = 1 + static_cast<int>(next(static_cast<unsigned long>(max_terms)));
        for (int i = 0; i < terms; ++i) {
            const int e = static_cast<int>(next_int(-max_abs_deg, max_abs_deg));
            const long c = next_int(-4, 4);
            if (c != 0) lp[e] += c;
        }
        for (auto it = lp.begin(); it != lp.end();)
            it = it->second == 0 ? lp.erase(it) : std::next(it);
        if (lp.empty()) lp[0] = 1;
        return RatFunc::from_laurent(lp);
    }

    // random element of Q(q) with numerator/denominator degree <= max_deg
    RatFunc ratfunc(int max_deg) {
        const RatFunc num = laurent(max_deg, max_deg + 1);
        RatFunc den = laurent(max_deg, max_deg + 1);
        if (den.is_zero()) den = RatFunc(1);
        return num / den;
    }

    GenWord gen_word(size_t min_len, size_t max_len, bool random_scalar = false) {
        GenWord w;
        w.letters = word(min_len, max_len);
        if (random_scalar) {
            const long c = next_int(-5, 5);
            w.scalar = RatFunc(Rational(c == 0 ? 1 : c));
        }
        return w;
    }

    AlgebraElement element(size_t max_terms, size_t max_len) {
        const size_t terms = 1 + next(max_terms);
        std::vector<GenWord> words;
        for (size_t i = 0; i < terms; ++i) words.push_back(gen_word(0, max_len, true));
        return normalize(words);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace uqgh
