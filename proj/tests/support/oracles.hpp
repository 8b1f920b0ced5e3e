#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <map>
#include <vector>

#include "uqgh/pbw.hpp"
#include "uqgh/sampling.hpp"

namespace uqgh::oracles {

// convolution product of Laurent polynomials, the independent multiplier
// used to cross-check field arithmetic
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Naive single-step rewriter: applies one applicable relation at a randomly
// chosen position until no position is reducible, then reads off the PBW
// normal form. Termination: every step either removes letters or reduces the
// number of out-of-order adjacent pairs at equal length profile.
class NaiveRewriter {
public:
    explicit NaiveRewriter(unsigned long seed) : sampler_(seed) {}

    AlgebraElement run(const std::vector<GenWord>& input) {
        std::map<std::vector<Gen>, RatFunc> sum;
        for (const auto& w : input) add(sum, w.letters, w.scalar);
        while (step(sum)) {}
        AlgebraElement out;
        for (const auto& [word, c] : sum) out.add_term(word_to_mono(word), c);
        return out;
    }

private:
    static int rank(Gen g) {
        switch (g) {
            case Gen::F: return 0;
            case Gen::K:
            case Gen::Kinv: return 1;
            case Gen::G:
            case Gen::Ginv: return 2;
            case Gen::H:
            case Gen::Hinv: return 3;
            case Gen::E: return 4;
        }
        return -1;
    }

    static bool inverse_pair(Gen a, Gen b) {
        return (a != Gen::E && a != Gen::F && gen_inverse(a) == b);
    }

    static bool reducible(Gen a, Gen b) {
        return inverse_pair(a, b) || rank(a) > rank(b);
    }

    static void add(std::map<std::vector<Gen>, RatFunc>& sum, const std::vector<Gen>& w,
                    const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = sum.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) sum.erase(it);
        }
    }

    static PBWMonomial word_to_mono(const std::vector<Gen>& w) {
        PBWMonomial m;
        for (Gen g : w) switch (g) {
                case Gen::E: m.t += 1; break;
                case Gen::F: m.l += 1; break;
                case Gen::K: m.m += 1; break;
                case Gen::Kinv: m.m -= 1; break;
                case Gen::G: m.n += 1; break;
                case Gen::Ginv: m.n -= 1; break;
                case Gen::H: m.s += 1; break;
                case Gen::Hinv: m.s -= 1; break;
            }
        return m;
    }

    bool step(std::map<std::vector<Gen>, RatFunc>& sum) {
        // collect every reducible (word, position) pair, pick one at random
        std::vector<std::pair<std::vector<Gen>, size_t>> sites;
        for (const auto& [word, c] : sum)
            for (size_t i = 0; i + 1 < word.size(); ++i)
                if (reducible(word[i], word[i + 1])) sites.emplace_back(word, i);
        if (sites.empty()) return false;
        const auto& [word, i] = sites[sampler_.next(sites.size())];
        const RatFunc c = sum.at(word);
        sum.erase(word);
        apply(sum, word, i, c);
        return true;
    }

    void apply(std::map<std::vector<Gen>, RatFunc>& sum, const std::vector<Gen>& word, size_t i,
               const RatFunc& c) {
        const Gen a = word[i], b = word[i + 1];
        auto splice = [&](const std::vector<Gen>& middle) {
            std::vector<Gen> w(word.begin(), word.begin() + i);
            w.insert(w.end(), middle.begin(), middle.end());
            w.insert(w.end(), word.begin() + i + 2, word.end());
            return w;
        };
        if (inverse_pair(a, b)) {
            add(sum, splice({}), c);
            return;
        }
        if (a == Gen::E && b == Gen::F) {
            // E F = F E + (K - K^-1 g^2)/(q - q^-1)
            const RatFunc s = (RatFunc::q_power(1) - RatFunc::q_power(-1)).inv();
            add(sum, splice({Gen::F, Gen::E}), c);
            add(sum, splice({Gen::K}), c * s);
            add(sum, splice({Gen::Kinv, Gen::G, Gen::G}), -(c * s));
            return;
        }
        RatFunc factor(1);
        if (a == Gen::E && b == Gen::K) factor = RatFunc::q_power(-2);
        if (a == Gen::E && b == Gen::Kinv) factor = RatFunc::q_power(2);
        if (a == Gen::K && b == Gen::F) factor = RatFunc::q_power(-2);
        if (a == Gen::Kinv && b == Gen::F) factor = RatFunc::q_power(2);
        add(sum, splice({b, a}), c * factor);
    }

    Sampler sampler_;
};

}  // namespace uqgh::oracles
