#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "monomial.hpp"
#include "numeric.hpp"

namespace cellres {

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<Integer>>;

inline size_t columnCount(const QMatrix& m) { return m.empty() ? 0 : m[0].size(); }
inline size_t columnCount(const ZMatrix& m) { return m.empty() ? 0 : m[0].size(); }

// Row-reduces in place; returns the pivot columns.  Exact over Q.
inline std::vector<size_t> rowEchelon(QMatrix& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size(), cols = columnCount(m);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline long rankRational(QMatrix m) { return static_cast<long>(rowEchelon(m).size()); }

inline long rankRationalOfInteger(const ZMatrix& m) {
    QMatrix q(m.size(), std::vector<Rational>(columnCount(m)));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) q[i][j] = Rational(m[i][j]);
    return rankRational(std::move(q));
}

// Basis of {x : M x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspaceRational(QMatrix m) {
    size_t cols = columnCount(m);
    std::vector<size_t> pivots = rowEchelon(m);
    std::vector<bool> isPivot(cols, false);
    for (size_t c : pivots) isPivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (isPivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline long rankModP(ZMatrix m, const Integer& p) {
    size_t rows = m.size(), cols = columnCount(m);
    for (auto& row : m)
        for (auto& e : row) {
            mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        }
    long rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), m[r][c].get_mpz_t(), p.get_mpz_t()) == 0)
            throw DomainError("rankModP: non-invertible pivot (p not prime?)");
        for (size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] * inv) % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Integer f = m[i][c];
            for (size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
                mpz_fdiv_r(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), p.get_mpz_t());
            }
        }
        ++rank;
        ++r;
    }
    return rank;
}

inline long rankOverField(const ZMatrix& m, const FieldSpec& field) {
    if (field.kind == FieldKind::Rationals) return rankRationalOfInteger(m);
    return rankModP(m, field.characteristic);
}

// Smith normal form by elementary row/column reduction, pivot = smallest
// nonzero absolute value.  Returns the nonzero diagonal d1 | d2 | ... as
// positive integers (including any leading 1s).
inline std::vector<Integer> smithNormalForm(ZMatrix m) {
    size_t rows = m.size(), cols = columnCount(m);
    size_t bound = std::min(rows, cols);
    std::vector<Integer> diagonal;

    for (size_t t = 0; t < bound; ++t) {
        // locate smallest nonzero |entry| in the trailing submatrix
        size_t pr = rows, pc = cols;
        Integer best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Integer a = abs(m[i][j]);
                if (pr == rows || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;  // submatrix is zero
        std::swap(m[t], m[pr]);
        for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool settled = false;
        while (!settled) {
            settled = true;
            // clear column t; a nonzero remainder becomes the new, smaller pivot
            for (size_t i = t + 1; i < rows && settled; ++i) {
                if (m[i][t] == 0) continue;
                Integer q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    settled = false;
                }
            }
            if (!settled) continue;
            // clear row t
            for (size_t j = t + 1; j < cols && settled; ++j) {
                if (m[t][j] == 0) continue;
                Integer q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    settled = false;
                }
            }
            if (!settled) continue;
            // pivot must divide every remaining entry; if not, fold the
            // offending row into row t and reduce again
            for (size_t i = t + 1; i < rows && settled; ++i)
                for (size_t j = t + 1; j < cols && settled; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                        settled = false;
                    }
        }
        diagonal.push_back(abs(m[t][t]));
    }
    return diagonal;
}

}  // namespace cellres
