#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cell_complex.hpp"
#include "monomial.hpp"

namespace cellres {

namespace detail {

inline std::vector<int> maskElements(unsigned mask) {
    std::vector<int> e;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) e.push_back(i);
    return e;
}

inline std::string subsetId(const char* prefix, unsigned mask) {
    std::ostringstream s;
    s << prefix;
    bool first = true;
    for (int i : maskElements(mask)) {
        s << (first ? "" : "_") << i;
        first = false;
    }
    return s.str();
}

inline Monomial subsetLcm(const std::vector<Monomial>& gens, unsigned mask) {
    std::vector<Monomial> part;
    for (int i : maskElements(mask)) part.push_back(gens[static_cast<size_t>(i)]);
    return lcmOf(part);
}

// Simplicial cell on the generator subset `mask` with the standard signs
// alpha(s, s \ {i-th element}) = (-1)^position.
inline RawCell simplexCell(const char* prefix, unsigned mask,
                           const std::vector<Monomial>& gens) {
    std::vector<int> elems = maskElements(mask);
    RawCell c{subsetId(prefix, mask), static_cast<int>(elems.size()) - 1,
              subsetLcm(gens, mask), {}};
    if (elems.size() >= 2) {
        for (size_t pos = 0; pos < elems.size(); ++pos) {
            unsigned face = mask & ~(1u << elems[pos]);
            c.boundary.push_back({subsetId(prefix, face), Integer(pos % 2 == 0 ? 1 : -1)});
        }
    }
    return c;
}

}  // namespace detail

// Full (q-1)-simplex on the q minimal generators; the cell of a subset is
// labeled by the subset's lcm.
inline CellComplex taylorComplex(const MonomialIdeal& I) {
    const auto& gens = I.generators();
    size_t q = gens.size();
    if (q > 24) throw DomainError("taylorComplex: too many generators (2^q cells)");
    std::vector<RawCell> raw;
    for (unsigned mask = 1; mask < (1u << q); ++mask)
        raw.push_back(detail::simplexCell("s", mask, gens));
    return CellComplex::fromRaw(I.ring(), std::move(raw), true);
}

// Subcomplex of the Taylor complex on the subsets whose lcm differs from the
// lcm of every other subset.  Brute-force over all 2^q - 1 subsets, which is
// exponential in q but immediate at desk scale.
inline CellComplex scarfComplex(const MonomialIdeal& I) {
    const auto& gens = I.generators();
    size_t q = gens.size();
    if (q > 24) throw DomainError("scarfComplex: too many generators (2^q subsets)");
    std::map<Monomial, int, MonomialLess> multiplicity;
    std::vector<Monomial> subsetLcms(1u << q, Monomial::one(I.ring()));
    for (unsigned mask = 1; mask < (1u << q); ++mask) {
        subsetLcms[mask] = detail::subsetLcm(gens, mask);
        ++multiplicity[subsetLcms[mask]];
    }
    std::vector<RawCell> raw;
    std::set<unsigned> survivors;
    for (unsigned mask = 1; mask < (1u << q); ++mask)
        if (multiplicity.at(subsetLcms[mask]) == 1) survivors.insert(mask);
    // the Scarf collection is closed under taking subsets; guard regardless
    for (unsigned mask : survivors)
        for (int i : detail::maskElements(mask)) {
            unsigned face = mask & ~(1u << i);
            if (face != 0 && !survivors.count(face))
                throw DomainError("scarfComplex: subset closure violated (internal)");
        }
    for (unsigned mask : survivors) raw.push_back(detail::simplexCell("s", mask, gens));
    return CellComplex::fromRaw(I.ring(), std::move(raw), true);
}

// One 0-cell and one n-cell, labels 1.  For n = 1 the top cell is a loop on
// the vertex with attaching degree 0; for n >= 2 there is nothing in
// dimension n-1 and the recorded boundary is empty.
inline CellComplex sphereComplex(const RingPtr& ring, int n) {
    if (n < 1) throw DomainError("sphereComplex: dimension must be >= 1");
    Monomial one = Monomial::one(ring);
    std::vector<RawCell> raw;
    raw.push_back({"v", 0, one, {}});
    RawCell top{"c", n, one, {}};
    if (n == 1) top.boundary.push_back({"v", Integer(0)});
    raw.push_back(std::move(top));
    return CellComplex::fromRaw(ring, std::move(raw), true);
}

// Minimal CW structure on RP^n: one cell per dimension, attaching degree
// 1 + (-1)^k onto the cell below.
inline CellComplex rpnComplex(const RingPtr& ring, int n) {
    if (n < 1) throw DomainError("rpnComplex: dimension must be >= 1");
    Monomial one = Monomial::one(ring);
    std::vector<RawCell> raw;
    for (int k = 0; k <= n; ++k) {
        RawCell c{"c" + std::to_string(k), k, one, {}};
        if (k >= 1)
            c.boundary.push_back({"c" + std::to_string(k - 1), Integer(k % 2 == 0 ? 2 : 0)});
        raw.push_back(std::move(c));
    }
    return CellComplex::fromRaw(ring, std::move(raw), true);
}

// Product CW structure of n circles: one cell per subset of {1..n}, all
// attaching degrees 0, so the boundary maps vanish identically.
inline CellComplex torusComplex(const RingPtr& ring, int n) {
    if (n < 1) throw DomainError("torusComplex: dimension must be >= 1");
    if (n > 20) throw DomainError("torusComplex: dimension too large (2^n cells)");
    Monomial one = Monomial::one(ring);
    std::vector<RawCell> raw;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> elems = detail::maskElements(mask);
        RawCell c{detail::subsetId("t", mask), static_cast<int>(elems.size()), one, {}};
        if (mask == 0) c.id = "t";
        for (int i : elems) {
            unsigned face = mask & ~(1u << i);
            c.boundary.push_back({face == 0 ? "t" : detail::subsetId("t", face), Integer(0)});
        }
        raw.push_back(std::move(c));
    }
    return CellComplex::fromRaw(ring, std::move(raw), true);
}

}  // namespace cellres
