#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <cellres/cellres.hpp>

namespace testutil {

using namespace cellres;

inline RingPtr ringXYZW() { return makeRing({"x", "y", "z", "w"}); }
inline RingPtr ringXYZ() { return makeRing({"x", "y", "z"}); }
inline RingPtr ringAB() { return makeRing({"a", "b"}); }

inline Monomial mono(const std::string& text, const RingPtr& ring) {
    return parseMonomial(text, ring);
}

// I = <yw, xyz, x^2y, z^4w>, the running example.
inline MonomialIdeal idealI(const RingPtr& S) {
    return minimalize({mono("y*w", S), mono("x*y*z", S), mono("x^2*y", S), mono("z^4*w", S)});
}

// I2 = <x^2z, xyz, y^2z, x^3y^5, x^4y^4, x^5y^3>, whose hull complex is minimal.
inline MonomialIdeal idealI2(const RingPtr& R) {
    return minimalize({mono("x^2*z", R), mono("x*y*z", R), mono("y^2*z", R), mono("x^3*y^5", R),
                       mono("x^4*y^4", R), mono("x^5*y^3", R)});
}

// <xy, yz, zw, wx>, whose Scarf complex is the 4-cycle.
inline MonomialIdeal idealCycle(const RingPtr& S) {
    return minimalize({mono("x*y", S), mono("y*z", S), mono("z*w", S), mono("w*x", S)});
}

// The hand-built complex Delta supporting the minimal resolution of I:
// a triangle on yw/xyz/x^2y plus the pendant edge to z^4w.
inline CellComplex buildDelta(const RingPtr& S) {
    CellPtr v1 = newVertex(mono("y*w", S), "v1");
    CellPtr v2 = newVertex(mono("x*y*z", S), "v2");
    CellPtr v3 = newVertex(mono("x^2*y", S), "v3");
    CellPtr v4 = newVertex(mono("z^4*w", S), "v4");
    CellPtr e12 = newCell({v1, v2}, std::nullopt, "e12");
    CellPtr e13 = newCell({v1, v3}, std::nullopt, "e13");
    CellPtr e23 = newCell({v2, v3}, std::nullopt, "e23");
    CellPtr e14 = newCell({v1, v4}, std::nullopt, "e14");
    CellPtr f123 = newCell({e12, e13, e23}, std::nullopt, "f123");
    return buildComplex(S, {f123, e14});
}

inline RationalPoint pt(std::vector<long> coords) {
    RationalPoint p;
    for (long c : coords) p.coords.push_back(Rational(c));
    return p;
}

// Prism [0,1] x triangle with the complementary-monomial labeling for the
// irrelevant ideal of P^1 x P^2.
inline std::pair<Polyhedron, std::map<RationalPoint, Monomial>> prismForP1xP2(const RingPtr& S5) {
    Polyhedron prism;
    prism.vertices = {pt({0, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}),
                      pt({1, 0, 0}), pt({1, 1, 0}), pt({1, 0, 1})};
    std::map<RationalPoint, Monomial> labels;
    labels.emplace(pt({0, 0, 0}), mono("x0*x2", S5));
    labels.emplace(pt({0, 1, 0}), mono("x0*x3", S5));
    labels.emplace(pt({0, 0, 1}), mono("x0*x4", S5));
    labels.emplace(pt({1, 0, 0}), mono("x1*x2", S5));
    labels.emplace(pt({1, 1, 0}), mono("x1*x3", S5));
    labels.emplace(pt({1, 0, 1}), mono("x1*x4", S5));
    return {prism, labels};
}

// The three segments of the polyhedral-complex figure, with labels a^i b^j
// at vertex (i, j).
inline std::pair<std::vector<Polyhedron>, std::map<RationalPoint, Monomial>> figSegments(
    const RingPtr& R) {
    Polyhedron P1, P2, P3;
    P1.vertices = {pt({5, 1}), pt({3, 2})};
    P2.vertices = {pt({3, 2}), pt({2, 3})};
    P3.vertices = {pt({2, 3}), pt({0, 7})};
    std::map<RationalPoint, Monomial> labels;
    labels.emplace(pt({5, 1}), mono("a^5*b", R));
    labels.emplace(pt({3, 2}), mono("a^3*b^2", R));
    labels.emplace(pt({2, 3}), mono("a^2*b^3", R));
    labels.emplace(pt({0, 7}), mono("b^7", R));
    return {{P1, P2, P3}, labels};
}

// --- independent oracles -------------------------------------------------

// All subset lcms by direct enumeration of the 2^q - 1 nonempty subsets.
inline std::vector<Monomial> subsetLcmsBruteForce(const std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (unsigned mask = 1; mask < (1u << gens.size()); ++mask) {
        std::vector<Monomial> part;
        for (size_t i = 0; i < gens.size(); ++i)
            if (mask & (1u << i)) part.push_back(gens[i]);
        out.push_back(lcmOf(part));
    }
    return out;
}

inline Integer bareissDeterminant(ZMatrix m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Determinant-divisor oracle for the Smith normal form: the k-th invariant
// factor is gcd(k x k minors) / gcd((k-1) x (k-1) minors).  Entirely
// independent of the row/column-reduction implementation.
inline std::vector<Integer> invariantFactorsByMinors(const ZMatrix& m) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::vector<Integer> divisors{1};  // d_0 = 1
    for (size_t k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        std::vector<size_t> ri(k), ci(k);
        for (size_t i = 0; i < k; ++i) ri[i] = i;
        bool rowsLeft = rows >= k;
        while (rowsLeft) {
            for (size_t i = 0; i < k; ++i) ci[i] = i;
            bool colsLeft = cols >= k;
            while (colsLeft) {
                ZMatrix sub(k, std::vector<Integer>(k));
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
                g = gcd(g, bareissDeterminant(sub));
                colsLeft = polydetail::nextCombination(ci, cols);
            }
            rowsLeft = polydetail::nextCombination(ri, rows);
        }
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<Integer> factors;
    for (size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
    return factors;
}

// Random downward-closed collection of simplices on a few labeled vertices,
// optionally with one label inflated beyond the lcm of its boundary.  Small
// enough to cross-check the strand/subcomplex homology identity degreewise.
inline CellComplex randomLabeledComplex(RandomSource& rnd, const RingPtr& ring,
                                        unsigned long maxExp = 3) {
    size_t nverts = 3 + rnd.below(2);  // 3 or 4
    std::vector<Monomial> vlabels;
    for (size_t i = 0; i < nverts; ++i) vlabels.push_back(randomMonomial(rnd, ring, maxExp));

    std::set<unsigned> included;
    for (size_t i = 0; i < nverts; ++i) included.insert(1u << i);
    std::vector<unsigned> byPopcount;
    for (unsigned mask = 1; mask < (1u << nverts); ++mask)
        if (__builtin_popcount(mask) >= 2) byPopcount.push_back(mask);
    std::sort(byPopcount.begin(), byPopcount.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (unsigned mask : byPopcount) {
        bool closed = true;
        for (size_t i = 0; i < nverts; ++i)
            if (mask & (1u << i)) closed &= included.count(mask & ~(1u << i)) > 0;
        if (closed && rnd.below(100) < 60 && included.size() < 10) included.insert(mask);
    }

    std::vector<RawCell> raw;
    std::vector<size_t> maximal;  // indices into raw of inclusion-maximal cells
    for (unsigned mask : included) {
        bool isMaximal = true;
        for (unsigned other : included)
            if (other != mask && (other & mask) == mask) isMaximal = false;
        if (isMaximal) maximal.push_back(raw.size());
        raw.push_back(detail::simplexCell("s", mask, vlabels));
    }
    // occasionally inflate a maximal cell's label by one variable; the
    // divisibility invariant survives because nothing sits above it
    if (!maximal.empty() && rnd.coin() && !ring->variables.empty()) {
        size_t pick = maximal[rnd.below(static_cast<unsigned long>(maximal.size()))];
        std::vector<Integer> exps = raw[pick].label.exponents();
        exps[rnd.below(static_cast<unsigned long>(exps.size()))] += 1;
        raw[pick].label = Monomial(ring, exps);
    }
    return CellComplex::fromRaw(ring, std::move(raw), true);
}

}  // namespace testutil
