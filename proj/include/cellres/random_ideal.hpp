#pragma once

#include <random>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace cellres {

// Deterministic generator for randomized tests and the gen-random-ideal CLI
// helper.  mt19937_64 with reduction by modulo keeps the stream identical
// across platforms, unlike std::uniform_int_distribution.
class RandomSource {
public:
    explicit RandomSource(unsigned long long seed) : rng_(seed) {}
    unsigned long below(unsigned long n) { return n == 0 ? 0 : rng_() % n; }
    bool coin() { return (rng_() & 1u) != 0; }

private:
    std::mt19937_64 rng_;
};

inline Monomial randomMonomial(RandomSource& rnd, const RingPtr& ring, unsigned long maxExp) {
    std::vector<Integer> exps;
    for (size_t i = 0; i < ring->variables.size(); ++i)
        exps.push_back(Integer(rnd.below(maxExp + 1)));
    return Monomial(ring, std::move(exps));
}

// Random monomial ideal with at most `gens` minimal generators (minimalizing
// may merge some; never zero since the constant monomial is rerolled).
inline MonomialIdeal randomIdeal(RandomSource& rnd, const RingPtr& ring, unsigned long gens,
                                 unsigned long maxExp) {
    std::vector<Monomial> picked;
    for (unsigned long i = 0; i < gens; ++i) {
        Monomial m = randomMonomial(rnd, ring, maxExp);
        while (m.isOne()) m = randomMonomial(rnd, ring, maxExp);
        picked.push_back(m);
    }
    return minimalize(picked);
}

inline bool isGenericIdeal(const MonomialIdeal& I) {
    size_t nvars = I.ring()->variables.size();
    for (size_t v = 0; v < nvars; ++v) {
        std::set<Integer> seen;
        for (const auto& g : I.generators()) {
            const Integer& e = g.exponents()[v];
            if (e == 0) continue;
            if (!seen.insert(e).second) return false;
        }
    }
    return true;
}

// Rejection-sampled generic ideal: no two generators share a nonzero
// exponent in any variable.
inline MonomialIdeal randomGenericIdeal(RandomSource& rnd, const RingPtr& ring,
                                        unsigned long gens, unsigned long maxExp) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        MonomialIdeal I = randomIdeal(rnd, ring, gens, maxExp);
        if (I.numGenerators() == gens && isGenericIdeal(I)) return I;
    }
    throw DomainError("randomGenericIdeal: rejection sampling failed (raise maxExp)");
}

}  // namespace cellres
