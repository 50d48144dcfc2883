#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cell_complex.hpp"
#include "homology.hpp"

namespace cellres {

struct ResolutionWitness {
    Monomial multidegree;
    int homologicalDegree = 0;
    long rank = 0;
};

struct ResolutionCheck {
    bool isResolution = false;
    std::optional<ResolutionWitness> witness;  // set on failure
};

// A labeled complex supports a free resolution iff every divisibility
// subcomplex is acyclic.  The quantifier over all monomials collapses to the
// lcm lattice of the cell labels: restricting to any b and to the lcm of the
// labels dividing b gives the same subcomplex.  The witness is the smallest
// failing multidegree in canonical order.
inline ResolutionCheck isResolution(const CellComplex& X) {
    std::vector<Monomial> vlabels = vertexLabelList(X);
    if (vlabels.empty())
        throw DomainError("isResolution: complex has no vertices");
    const FieldSpec& field = X.ring()->field;
    for (const auto& b : lcmLattice(cellLabels(X))) {
        CellComplex Y = restrictComplex(X, b);
        std::map<int, long> ranks = reducedHomologyRanksOverField(Y, field);
        for (const auto& [d, r] : ranks) {
            if (d < 0 || r == 0) continue;
            return {false, ResolutionWitness{b, d, r}};
        }
    }
    return {true, std::nullopt};
}

// Label inequality across every nonzero incidence; the degree-0 entries of
// the differentials are exactly the equal-label incidences.
inline bool isMinimal(const CellComplex& X) {
    for (const auto& c : X.cells())
        for (const auto& [t, deg] : c.boundary) {
            if (deg == 0) continue;
            if (X.cell(t).label == c.label) return false;
        }
    return true;
}

struct BettiTable {
    bool shifted = true;
    std::map<int, std::map<Monomial, long, MonomialLess>> entries;
    std::map<int, long> totals;

    std::string renderText() const {
        std::ostringstream out;
        out << "degree  total  multidegrees\n";
        for (const auto& [d, total] : totals) {
            out << d << "\t" << total << "\t";
            bool first = true;
            auto it = entries.find(d);
            if (it != entries.end())
                for (const auto& [b, count] : it->second) {
                    out << (first ? "" : " ") << b.str() << ":" << count;
                    first = false;
                }
            out << "\n";
        }
        return out.str();
    }
};

// Multigraded Betti numbers read off the cells of a minimal cellular
// resolution: a cell of dimension i labeled b contributes to beta_{i+1,b}
// when shifted (resolving the quotient ring; degree 0 holds the ambient
// rank 1), or to beta_{i,b} unshifted (resolving the ideal).
inline BettiTable bettiTable(const CellComplex& X, bool shifted = true) {
    ResolutionCheck rc = isResolution(X);
    if (!rc.isResolution) {
        std::ostringstream msg;
        msg << "bettiTable: complex is not a resolution (witness: multidegree "
            << rc.witness->multidegree.str() << ", degree " << rc.witness->homologicalDegree
            << ", rank " << rc.witness->rank << ")";
        throw DomainError(msg.str());
    }
    if (!isMinimal(X))
        throw DomainError("bettiTable: complex is not minimal (equal labels across a "
                          "nonzero incidence); Betti numbers would overcount");
    BettiTable table;
    table.shifted = shifted;
    int offset = shifted ? 1 : 0;
    if (shifted) {
        table.entries[0][Monomial::one(X.ring())] = 1;
        table.totals[0] = 1;
    }
    for (const auto& c : X.cells()) {
        ++table.entries[c.dim + offset][c.label];
        ++table.totals[c.dim + offset];
    }
    return table;
}

}  // namespace cellres
