#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cell_complex.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

namespace cellres {

// Basis id of the ambient rank-1 module sitting in homological degree -1 of
// a reduced chain complex.
inline const std::string kAmbientBasisId = "ambient";

struct DiffEntry {
    int row = 0;  // index into the target basis (degree d-1)
    int col = 0;  // index into the source basis (degree d)
    Integer coeff;
    Monomial monomial;  // label(source)/label(target); the inclusion twist
};

struct Differential {
    int degree = 0;                 // maps degree -> degree-1
    std::vector<std::string> rows;  // basis of degree-1
    std::vector<std::string> cols;  // basis of degree
    std::vector<DiffEntry> entries;

    ZMatrix integerMatrix() const {
        ZMatrix m(rows.size(), std::vector<Integer>(cols.size(), 0));
        for (const auto& e : entries)
            m[static_cast<size_t>(e.row)][static_cast<size_t>(e.col)] = e.coeff;
        return m;
    }
};

// The free chain complex supported on a labeled cell complex: one rank-1
// summand per cell, twisted by its label, with the augmentation to the
// ambient module in degree -1 when reduced.
struct ChainComplexData {
    RingPtr ring;
    bool reduced = true;
    int lo = 0, hi = -1;  // homological degree range; empty when lo > hi
    std::map<int, std::vector<std::string>> basis;
    std::map<int, std::vector<Monomial>> basisLabels;
    std::map<int, Differential> differentials;  // keyed by source degree, lo < d <= hi

    long rank(int degree) const {
        auto it = basis.find(degree);
        return it == basis.end() ? 0 : static_cast<long>(it->second.size());
    }
    std::map<int, long> ranks() const {
        std::map<int, long> r;
        for (int d = lo; d <= hi; ++d) r[d] = rank(d);
        return r;
    }
};

inline ChainComplexData chainComplex(const CellComplex& X, bool reduced = true) {
    ChainComplexData C;
    C.ring = X.ring();
    C.reduced = reduced;
    int top = X.topDim();
    C.lo = reduced ? -1 : 0;
    C.hi = std::max(top, C.lo - 1);
    if (!reduced && X.empty()) {
        C.lo = 0;
        C.hi = -1;  // empty complex
        return C;
    }

    std::map<int, std::vector<int>> cellsByDim;
    for (int d = 0; d <= top; ++d) cellsByDim[d] = X.cellsOfDim(d);

    if (reduced) {
        C.basis[-1] = {kAmbientBasisId};
        C.basisLabels[-1] = {Monomial::one(X.ring())};
    }
    for (int d = 0; d <= top; ++d) {
        std::vector<std::string> ids;
        std::vector<Monomial> labels;
        for (int i : cellsByDim[d]) {
            ids.push_back(X.cell(i).id);
            labels.push_back(X.cell(i).label);
        }
        C.basis[d] = std::move(ids);
        C.basisLabels[d] = std::move(labels);
    }

    if (reduced && top >= 0) {
        Differential aug;
        aug.degree = 0;
        aug.rows = C.basis[-1];
        aug.cols = C.basis[0];
        for (size_t j = 0; j < aug.cols.size(); ++j)
            aug.entries.push_back({0, static_cast<int>(j), Integer(1), C.basisLabels[0][j]});
        C.differentials[0] = std::move(aug);
    }
    for (int d = 1; d <= top; ++d) {
        Differential diff;
        diff.degree = d;
        diff.rows = C.basis[d - 1];
        diff.cols = C.basis[d];
        std::map<std::string, int> rowIndex;
        for (size_t i = 0; i < diff.rows.size(); ++i)
            rowIndex[diff.rows[i]] = static_cast<int>(i);
        const auto& sources = cellsByDim[d];
        for (size_t j = 0; j < sources.size(); ++j) {
            const auto& cell = X.cell(sources[j]);
            for (const auto& [tidx, deg] : cell.boundary) {
                if (deg == 0) continue;
                const auto& target = X.cell(tidx);
                diff.entries.push_back({rowIndex.at(target.id), static_cast<int>(j), deg,
                                        quotient(cell.label, target.label)});
            }
        }
        C.differentials[d] = std::move(diff);
    }
    return C;
}

// Re-indexes homological degrees by -s, so shiftComplex(C, -1) turns the
// reduced range [-1, n] into [0, n+1].
inline ChainComplexData shiftComplex(const ChainComplexData& C, int s) {
    ChainComplexData out;
    out.ring = C.ring;
    out.reduced = C.reduced;
    out.lo = C.lo - s;
    out.hi = C.hi - s;
    for (const auto& [d, b] : C.basis) out.basis[d - s] = b;
    for (const auto& [d, b] : C.basisLabels) out.basisLabels[d - s] = b;
    for (const auto& [d, diff] : C.differentials) {
        Differential moved = diff;
        moved.degree = d - s;
        out.differentials[d - s] = std::move(moved);
    }
    return out;
}

// Symbolic check that consecutive differentials compose to zero: the products
// coeff * monomial are accumulated as genuine polynomial sums per (row, col)
// and every one of them must vanish.
inline bool symbolicCompositionIsZero(const ChainComplexData& C) {
    for (int d = C.lo + 2; d <= C.hi; ++d) {
        auto hiIt = C.differentials.find(d);
        auto loIt = C.differentials.find(d - 1);
        if (hiIt == C.differentials.end() || loIt == C.differentials.end()) continue;
        const Differential& upper = hiIt->second;
        const Differential& lower = loIt->second;
        std::map<std::pair<int, int>, std::map<Monomial, Integer, MonomialLess>> sums;
        std::map<int, std::vector<const DiffEntry*>> lowerByCol;
        for (const auto& e : lower.entries) lowerByCol[e.col].push_back(&e);
        for (const auto& up : upper.entries)
            for (const DiffEntry* low : lowerByCol[up.row]) {
                Monomial m = product(up.monomial, low->monomial);
                sums[{low->row, up.col}][m] += up.coeff * low->coeff;
            }
        for (const auto& [pos, poly] : sums) {
            (void)pos;
            for (const auto& [m, c] : poly) {
                (void)m;
                if (c != 0) return false;
            }
        }
    }
    return true;
}

}  // namespace cellres
