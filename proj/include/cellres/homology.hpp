#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chain.hpp"
#include "linalg.hpp"

namespace cellres {

enum class CoeffKind { Field, IntegersZ };

struct Coefficients {
    CoeffKind kind = CoeffKind::Field;
    FieldSpec field;  // valid when kind == Field

    static Coefficients overField(const FieldSpec& f) { return {CoeffKind::Field, f}; }
    static Coefficients integers() { return {CoeffKind::IntegersZ, {}}; }
    std::string displayName() const {
        return kind == CoeffKind::IntegersZ ? std::string("Z") : field.displayName();
    }
};

struct TorsionSummary {
    long freeRank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, divisibility order
};

struct HomologySummary {
    enum class Mode { Field, Integers, Graded };
    Mode mode = Mode::Field;
    bool reduced = true;
    int lo = 0, hi = -1;
    std::string coeffName;  // "QQ", "Z2", "Z"; graded mode renders over "S"

    std::map<int, long> fieldRanks;
    std::map<int, TorsionSummary> integers;
    std::map<int, std::map<Monomial, long, MonomialLess>> graded;

    // Degree -1 of a reduced labeled complex is presented as the cokernel of
    // the vertex labels, matching how such listings are usually printed.
    bool showCokernel = false;
    bool cokernelIsZero = false;          // some vertex label is 1
    bool cokernelIsFree = false;          // no vertices at all
    std::vector<Monomial> cokernelGenerators;

    std::string render() const {
        std::ostringstream out;
        for (int d = lo; d <= hi; ++d) {
            out.width(2);
            out << d << " : " << lineFor(d) << "\n";
        }
        return out.str();
    }

private:
    std::string lineFor(int d) const {
        if (d == -1 && showCokernel) {
            if (cokernelIsZero) return "0";
            if (cokernelIsFree) return "S^1";
            std::ostringstream line;
            line << "cokernel |";
            for (const auto& g : cokernelGenerators) line << ' ' << g.str();
            line << " |";
            return line.str();
        }
        switch (mode) {
            case Mode::Field: {
                auto it = fieldRanks.find(d);
                long r = it == fieldRanks.end() ? 0 : it->second;
                return r == 0 ? "0" : coeffName + "^" + std::to_string(r);
            }
            case Mode::Integers: {
                auto it = integers.find(d);
                if (it == integers.end()) return "0";
                const TorsionSummary& t = it->second;
                std::ostringstream line;
                bool any = false;
                if (t.freeRank > 0) {
                    line << "Z^" << t.freeRank;
                    any = true;
                }
                for (const auto& f : t.torsion) {
                    if (any) line << " + ";
                    line << "Z/" << f.get_str();
                    any = true;
                }
                return any ? line.str() : "0";
            }
            case Mode::Graded: {
                auto it = graded.find(d);
                if (it == graded.end() || it->second.empty()) return "0";
                std::ostringstream line;
                bool any = false;
                for (const auto& [b, r] : it->second) {
                    if (r == 0) continue;
                    if (any) line << " + ";
                    line << "S^" << r << " (" << b.str() << ")";
                    any = true;
                }
                return any ? line.str() : "0";
            }
        }
        return "0";
    }
};

namespace detail {

inline ZMatrix integerMatrixOf(const ChainComplexData& C, int degree) {
    auto it = C.differentials.find(degree);
    if (it != C.differentials.end()) return it->second.integerMatrix();
    size_t rows = static_cast<size_t>(C.rank(degree - 1));
    size_t cols = static_cast<size_t>(C.rank(degree));
    return ZMatrix(rows, std::vector<Integer>(cols, 0));
}

}  // namespace detail

// Homology ranks of the integer chain complex over the given field:
// H_d = dim ker(d_d) - rank(d_{d+1}).
inline std::map<int, long> homologyRanksOverField(const ChainComplexData& C,
                                                  const FieldSpec& field) {
    std::map<int, long> ranks;
    std::map<int, long> diffRank;
    for (int d = C.lo; d <= C.hi + 1; ++d)
        diffRank[d] = rankOverField(detail::integerMatrixOf(C, d), field);
    for (int d = C.lo; d <= C.hi; ++d) {
        long n = C.rank(d);
        long out = (d >= C.lo + 1) ? diffRank[d] : 0;  // lowest degree has no outgoing map
        long in = diffRank[d + 1];
        ranks[d] = n - out - in;
    }
    return ranks;
}

inline std::map<int, long> reducedHomologyRanksOverField(const CellComplex& X,
                                                         const FieldSpec& field) {
    return homologyRanksOverField(chainComplex(X, true), field);
}

// Cellular homology with the labels ignored: ranks over a field, or free
// rank plus invariant factors over the integers.
inline HomologySummary coefficientHomology(const CellComplex& X, const Coefficients& coeff,
                                           bool reduced = true) {
    ChainComplexData C = chainComplex(X, reduced);
    HomologySummary s;
    s.reduced = reduced;
    s.lo = C.lo;
    s.hi = C.hi;
    s.coeffName = coeff.displayName();
    if (coeff.kind == CoeffKind::Field) {
        s.mode = HomologySummary::Mode::Field;
        s.fieldRanks = homologyRanksOverField(C, coeff.field);
        return s;
    }
    s.mode = HomologySummary::Mode::Integers;
    std::map<int, long> qRank;
    std::map<int, std::vector<Integer>> snf;
    for (int d = C.lo; d <= C.hi + 1; ++d) {
        ZMatrix m = detail::integerMatrixOf(C, d);
        snf[d] = smithNormalForm(m);
        qRank[d] = static_cast<long>(snf[d].size());
    }
    for (int d = C.lo; d <= C.hi; ++d) {
        TorsionSummary t;
        long out = (d >= C.lo + 1) ? qRank[d] : 0;
        t.freeRank = C.rank(d) - out - qRank[d + 1];
        for (const auto& f : snf[d + 1])
            if (f > 1) t.torsion.push_back(f);
        if (t.freeRank != 0 || !t.torsion.empty()) s.integers[d] = std::move(t);
    }
    return s;
}

// The degree-b strand of a symbolic chain complex: keep the basis elements
// whose label divides b and the integer coefficients between them.  This is
// the degree-b part of the homology, and it must agree with the homology of
// the divisibility subcomplex; tests compare the two routes.
inline std::map<int, long> strandHomologyRanks(const ChainComplexData& C, const Monomial& b,
                                               const FieldSpec& field) {
    requireSameRing(b.ring(), C.ring, "strandHomologyRanks");
    std::map<int, std::vector<int>> keep;
    for (const auto& [d, labels] : C.basisLabels) {
        std::vector<int> idx;
        for (size_t i = 0; i < labels.size(); ++i)
            if (divides(labels[i], b)) idx.push_back(static_cast<int>(i));
        keep[d] = std::move(idx);
    }
    std::map<int, long> diffRank;
    for (int d = C.lo; d <= C.hi + 1; ++d) {
        auto it = C.differentials.find(d);
        const std::vector<int>& rowsKeep = keep[d - 1];
        const std::vector<int>& colsKeep = keep[d];
        ZMatrix m(rowsKeep.size(), std::vector<Integer>(colsKeep.size(), 0));
        if (it != C.differentials.end()) {
            std::map<int, int> rowPos, colPos;
            for (size_t i = 0; i < rowsKeep.size(); ++i) rowPos[rowsKeep[i]] = static_cast<int>(i);
            for (size_t j = 0; j < colsKeep.size(); ++j) colPos[colsKeep[j]] = static_cast<int>(j);
            for (const auto& e : it->second.entries) {
                auto r = rowPos.find(e.row);
                auto c = colPos.find(e.col);
                // a surviving source forces its nonzero targets to survive,
                // so dropped entries can only pair a kept row with a cut column
                if (r != rowPos.end() && c != colPos.end())
                    m[static_cast<size_t>(r->second)][static_cast<size_t>(c->second)] = e.coeff;
            }
        }
        diffRank[d] = rankOverField(m, field);
    }
    std::map<int, long> ranks;
    for (int d = C.lo; d <= C.hi; ++d) {
        long n = keep.count(d) ? static_cast<long>(keep[d].size()) : 0;
        long out = (d >= C.lo + 1) ? diffRank[d] : 0;
        ranks[d] = n - out - diffRank[d + 1];
    }
    return ranks;
}

// Multigraded homology: for each multidegree b (default: the lcm lattice of
// all cell labels) the reduced homology of the subcomplex of cells whose
// label divides b, over the ring's coefficient field.
inline HomologySummary gradedHomology(const CellComplex& X,
                                      std::optional<std::vector<Monomial>> degrees = std::nullopt,
                                      bool reduced = true) {
    HomologySummary s;
    s.mode = HomologySummary::Mode::Graded;
    s.reduced = reduced;
    s.lo = reduced ? -1 : 0;
    s.hi = reduced ? std::max(X.topDim(), -1) : X.topDim();
    s.coeffName = "S";

    std::vector<Monomial> lattice;
    if (degrees) {
        for (const auto& b : *degrees) requireSameRing(b.ring(), X.ring(), "gradedHomology");
        lattice = *degrees;
    } else if (!X.empty()) {
        lattice = lcmLattice(cellLabels(X));
    }

    const FieldSpec& field = X.ring()->field;
    for (const auto& b : lattice) {
        CellComplex Y = restrictComplex(X, b);
        std::map<int, long> ranks = homologyRanksOverField(chainComplex(Y, reduced), field);
        for (const auto& [d, r] : ranks)
            if (r != 0) s.graded[d][b] += r;
    }

    if (reduced) {
        s.showCokernel = true;
        std::vector<Monomial> vlabels = vertexLabelList(X);
        if (vlabels.empty()) {
            s.cokernelIsFree = true;
        } else {
            bool containsOne = false;
            for (const auto& m : vlabels) containsOne |= m.isOne();
            if (containsOne)
                s.cokernelIsZero = true;
            else
                s.cokernelGenerators = minimalize(vlabels).generators();
        }
    }
    return s;
}

}  // namespace cellres
