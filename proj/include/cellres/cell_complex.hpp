#pragma once

#include <atomic>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "numeric.hpp"

namespace cellres {

// A cell under construction, before it is baked into a CellComplex.  Built
// incrementally with newVertex/newCell, mirroring the usual interactive
// workflow: make vertices, then edges over them, and so on.
struct CellNode;
using CellPtr = std::shared_ptr<const CellNode>;

struct CellNode {
    std::string id;
    int dim = 0;
    Monomial label;
    std::vector<std::pair<CellPtr, Integer>> boundary;  // (target, attaching degree)

    CellNode(std::string id_, int dim_, Monomial label_,
             std::vector<std::pair<CellPtr, Integer>> boundary_)
        : id(std::move(id_)), dim(dim_), label(std::move(label_)),
          boundary(std::move(boundary_)) {}
};

namespace detail {

inline std::string freshCellId() {
    static std::atomic<unsigned long> counter{0};
    return "c" + std::to_string(counter.fetch_add(1));
}

// Chooses signs s_i in {+1,-1} for boundary cells so that the inherited
// second boundary cancels.  Each codim-2 target hit by exactly two boundary
// cells pins their relative sign; signs propagate breadth-first over that
// constraint graph (+1 seed per component) and the full cancellation
// condition is verified at the end.
inline std::vector<int> inferBoundarySigns(
    const std::vector<std::map<std::string, Integer>>& beta) {
    size_t k = beta.size();
    std::map<std::string, std::vector<size_t>> hits;
    for (size_t i = 0; i < k; ++i)
        for (const auto& [target, deg] : beta[i])
            if (deg != 0) hits[target].push_back(i);

    std::vector<std::vector<std::pair<size_t, int>>> adjacent(k);
    for (const auto& [target, owners] : hits) {
        if (owners.size() != 2) continue;
        const Integer& a = beta[owners[0]].at(target);
        const Integer& b = beta[owners[1]].at(target);
        if (abs(a) != abs(b))
            throw DomainError("newCell: degree inference impossible (incidences on '" +
                              target + "' have unequal magnitude)");
        int rel = (signOf(a) == signOf(b)) ? -1 : 1;  // s_j = rel * s_i
        adjacent[owners[0]].push_back({owners[1], rel});
        adjacent[owners[1]].push_back({owners[0], rel});
    }

    std::vector<int> sign(k, 0);
    for (size_t seed = 0; seed < k; ++seed) {
        if (sign[seed] != 0) continue;
        sign[seed] = 1;
        std::deque<size_t> queue{seed};
        while (!queue.empty()) {
            size_t i = queue.front();
            queue.pop_front();
            for (const auto& [j, rel] : adjacent[i]) {
                int expected = rel * sign[i];
                if (sign[j] == 0) {
                    sign[j] = expected;
                    queue.push_back(j);
                } else if (sign[j] != expected) {
                    throw DomainError("newCell: degree inference impossible (inconsistent signs)");
                }
            }
        }
    }

    for (const auto& [target, owners] : hits) {
        Integer sum = 0;
        for (size_t i : owners) sum += sign[i] * beta[i].at(target);
        if (sum != 0)
            throw DomainError("newCell: degree inference impossible (boundary of boundary "
                              "does not cancel on '" + target + "')");
    }
    return sign;
}

inline std::map<std::string, Integer> aggregatedBoundary(const CellPtr& cell) {
    std::map<std::string, Integer> acc;
    for (const auto& [target, deg] : cell->boundary) acc[target->id] += deg;
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

}  // namespace detail

inline CellPtr newVertex(const Monomial& label, std::string id = "") {
    if (id.empty()) id = detail::freshCellId();
    return std::make_shared<CellNode>(std::move(id), 0, label,
                                      std::vector<std::pair<CellPtr, Integer>>{});
}

inline CellPtr newVertex(const RingPtr& ring, std::string id = "") {
    return newVertex(Monomial::one(ring), std::move(id));
}

// Cell with explicitly given attaching degrees.  Structural checks only;
// the boundary-of-boundary condition is verified by buildComplex.
inline CellPtr newCellWithDegrees(const std::vector<std::pair<CellPtr, Integer>>& boundary,
                                  std::optional<Monomial> label = std::nullopt,
                                  std::string id = "") {
    if (boundary.empty())
        throw DomainError("newCellWithDegrees: empty boundary (use newVertex)");
    int below = boundary.front().first->dim;
    std::set<std::string> seen;
    std::vector<Monomial> boundaryLabels;
    for (const auto& [cell, deg] : boundary) {
        (void)deg;
        if (cell->dim != below)
            throw DomainError("newCell: mixed boundary dimensions");
        if (!seen.insert(cell->id).second)
            throw DomainError("newCell: duplicate boundary cell '" + cell->id + "'");
        boundaryLabels.push_back(cell->label);
    }
    Monomial cellLabel = label ? *label : lcmOf(boundaryLabels);
    for (const auto& [cell, deg] : boundary) {
        (void)deg;
        if (!divides(cell->label, cellLabel))
            throw DomainError("newCell: explicit label " + cellLabel.str() +
                              " is not divisible by boundary label " + cell->label.str());
    }
    if (id.empty()) id = detail::freshCellId();
    return std::make_shared<CellNode>(std::move(id), below + 1, std::move(cellLabel), boundary);
}

// Cell over a list of boundary cells with inferred attaching degrees: a
// 1-cell over two distinct vertices gets (+1,-1) in listed order, a loop gets
// degree 0, and higher cells are oriented by sign propagation.  The label
// defaults to the lcm of the boundary labels.
inline CellPtr newCell(const std::vector<CellPtr>& boundary,
                       std::optional<Monomial> label = std::nullopt,
                       std::string id = "") {
    if (boundary.empty()) {
        if (!label)
            throw DomainError("newCell: empty boundary needs a label (or use newVertex)");
        return newVertex(*label, std::move(id));
    }
    int below = boundary.front()->dim;
    for (const auto& cell : boundary)
        if (cell->dim != below) throw DomainError("newCell: mixed boundary dimensions");

    std::vector<std::pair<CellPtr, Integer>> withDegrees;
    if (below == 0) {
        std::vector<CellPtr> distinct;
        for (const auto& cell : boundary) {
            bool dup = false;
            for (const auto& d : distinct) dup |= (d == cell);
            if (!dup) distinct.push_back(cell);
        }
        if (distinct.size() == 2) {
            withDegrees = {{distinct[0], Integer(1)}, {distinct[1], Integer(-1)}};
        } else if (distinct.size() == 1) {
            withDegrees = {{distinct[0], Integer(0)}};  // loop
        } else {
            throw DomainError("newCell: a 1-cell needs 1 or 2 boundary vertices, got " +
                              std::to_string(distinct.size()));
        }
    } else {
        std::set<const CellNode*> seen;
        std::vector<std::map<std::string, Integer>> beta;
        for (const auto& cell : boundary) {
            if (!seen.insert(cell.get()).second)
                throw DomainError("newCell: duplicate boundary cell '" + cell->id + "'");
            beta.push_back(detail::aggregatedBoundary(cell));
        }
        std::vector<int> sign = detail::inferBoundarySigns(beta);
        for (size_t i = 0; i < boundary.size(); ++i)
            withDegrees.push_back({boundary[i], Integer(sign[i])});
    }
    return newCellWithDegrees(withDegrees, std::move(label), std::move(id));
}

// ---------------------------------------------------------------------------

// Flat, id-keyed cell description; the exchange format between builders,
// validation and JSON.
struct RawCell {
    std::string id;
    int dim = 0;
    Monomial label;
    std::vector<std::pair<std::string, Integer>> boundary;
};

struct Violation {
    std::string rule;                // "d-squared", "one-cell", "divisibility", structural names
    std::vector<std::string> cells;  // offending cell ids
    std::string detail;
};

inline std::string formatViolations(const std::vector<Violation>& vs) {
    std::ostringstream out;
    for (const auto& v : vs) {
        out << v.rule << " [";
        for (size_t i = 0; i < v.cells.size(); ++i) out << (i ? "," : "") << v.cells[i];
        out << "] " << v.detail << "; ";
    }
    return out.str();
}

// Checks everything the complex promises: structural soundness plus the
// three invariant families (boundary-of-boundary, the 1-cell rule, and label
// divisibility along nonzero incidences).  Reports; never throws.
inline std::vector<Violation> validateRaw(const RingPtr& ring,
                                          const std::vector<RawCell>& cells) {
    std::vector<Violation> out;
    std::map<std::string, const RawCell*> byId;
    for (const auto& c : cells) {
        if (!byId.emplace(c.id, &c).second)
            out.push_back({"duplicate-id", {c.id}, "cell id appears more than once"});
    }
    bool structural = out.empty();
    for (const auto& c : cells) {
        if (c.dim < 0) {
            out.push_back({"bad-dimension", {c.id}, "negative dimension"});
            structural = false;
        }
        if (!sameRing(c.label.ring(), ring)) {
            out.push_back({"label-ring", {c.id}, "label is not over the complex's ring"});
            structural = false;
        }
        if (c.dim == 0 && !c.boundary.empty()) {
            out.push_back({"vertex-boundary", {c.id}, "0-cell with nonempty boundary"});
            structural = false;
        }
        std::set<std::string> targets;
        for (const auto& [tid, deg] : c.boundary) {
            (void)deg;
            if (!targets.insert(tid).second) {
                out.push_back({"duplicate-target", {c.id, tid}, "repeated boundary target"});
                structural = false;
            }
            auto it = byId.find(tid);
            if (it == byId.end()) {
                out.push_back({"missing-target", {c.id, tid}, "boundary target not in complex"});
                structural = false;
            } else if (it->second->dim != c.dim - 1) {
                out.push_back({"target-dimension", {c.id, tid},
                               "boundary target is not one dimension lower"});
                structural = false;
            }
        }
    }
    if (!structural) return out;

    // 1-cell rule: exactly 2 or 0 nonzero incidences, each of degree +-1
    for (const auto& c : cells) {
        if (c.dim != 1) continue;
        int nonzero = 0;
        bool unit = true;
        for (const auto& [tid, deg] : c.boundary) {
            (void)tid;
            if (deg == 0) continue;
            ++nonzero;
            if (deg != 1 && deg != -1) unit = false;
        }
        if (!(nonzero == 0 || (nonzero == 2 && unit)))
            out.push_back({"one-cell", {c.id},
                           "a 1-cell needs 2 or 0 nonzero boundary degrees, all +-1"});
    }

    // divisibility along nonzero incidences
    for (const auto& c : cells)
        for (const auto& [tid, deg] : c.boundary) {
            if (deg == 0) continue;
            const RawCell* d = byId.at(tid);
            if (!divides(d->label, c.label))
                out.push_back({"divisibility", {c.id, tid},
                               d->label.str() + " does not divide " + c.label.str()});
        }

    // boundary-of-boundary: for each cell A and codim-2 cell C,
    // sum over B of deg(A,B)*deg(B,C) vanishes
    for (const auto& a : cells) {
        if (a.dim < 2) continue;
        std::map<std::string, Integer> sums;
        for (const auto& [bid, degAB] : a.boundary) {
            const RawCell* b = byId.at(bid);
            for (const auto& [cid, degBC] : b->boundary) sums[cid] += degAB * degBC;
        }
        for (const auto& [cid, sum] : sums)
            if (sum != 0)
                out.push_back({"d-squared", {a.id, cid}, "composite degree sum = " + sum.get_str()});
    }
    return out;
}

// Validated immutable cell complex.  Cells are held in the canonical order
// (dimension, then id) and referenced by index.
class CellComplex {
public:
    struct CellData {
        std::string id;
        int dim = 0;
        Monomial label;
        std::vector<std::pair<int, Integer>> boundary;  // (cell index, degree)
    };

    const RingPtr& ring() const { return ring_; }
    const std::vector<CellData>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    size_t size() const { return cells_.size(); }
    int topDim() const { return cells_.empty() ? -1 : cells_.back().dim; }

    int indexOf(const std::string& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? -1 : it->second;
    }
    const CellData& cell(int i) const { return cells_.at(static_cast<size_t>(i)); }

    std::vector<int> cellsOfDim(int d) const {
        std::vector<int> out;
        for (size_t i = 0; i < cells_.size(); ++i)
            if (cells_[i].dim == d) out.push_back(static_cast<int>(i));
        return out;
    }

    // Counts per dimension 0..topDim; empty for the void complex.
    std::vector<long> fVector() const {
        std::vector<long> f(static_cast<size_t>(topDim() + 1), 0);
        for (const auto& c : cells_) ++f[static_cast<size_t>(c.dim)];
        return f;
    }

    std::vector<RawCell> toRaw() const {
        std::vector<RawCell> raw;
        raw.reserve(cells_.size());
        for (const auto& c : cells_) {
            RawCell r{c.id, c.dim, c.label, {}};
            for (const auto& [idx, deg] : c.boundary)
                r.boundary.push_back({cells_[static_cast<size_t>(idx)].id, deg});
            raw.push_back(std::move(r));
        }
        return raw;
    }

    static CellComplex fromRaw(const RingPtr& ring, std::vector<RawCell> raw,
                               bool check = true) {
        if (!ring) throw DomainError("CellComplex: null ring");
        if (check) {
            auto violations = validateRaw(ring, raw);
            if (!violations.empty())
                throw DomainError("invalid cell complex: " + formatViolations(violations));
        }
        std::sort(raw.begin(), raw.end(), [](const RawCell& a, const RawCell& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.id < b.id;
        });
        CellComplex X;
        X.ring_ = ring;
        for (size_t i = 0; i < raw.size(); ++i) X.index_[raw[i].id] = static_cast<int>(i);
        for (auto& r : raw) {
            CellData c{std::move(r.id), r.dim, std::move(r.label), {}};
            for (auto& [tid, deg] : r.boundary) c.boundary.push_back({X.index_.at(tid), deg});
            std::sort(c.boundary.begin(), c.boundary.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            X.cells_.push_back(std::move(c));
        }
        return X;
    }

private:
    RingPtr ring_;
    std::vector<CellData> cells_;
    std::map<std::string, int> index_;
};

inline std::vector<Violation> validate(const CellComplex& X) {
    return validateRaw(X.ring(), X.toRaw());
}

// Transitively closes over boundaries, so listing only the maximal cells is
// enough.  The same cell object may be reached many times; two *different*
// objects sharing an id are accepted only if they carry identical data.
inline CellComplex buildComplex(const RingPtr& ring, const std::vector<CellPtr>& maximalCells) {
    std::map<const CellNode*, bool> visited;
    std::map<std::string, const CellNode*> byId;
    std::deque<CellPtr> queue(maximalCells.begin(), maximalCells.end());
    std::vector<const CellNode*> collected;

    auto signature = [](const CellNode* c) {
        std::ostringstream s;
        s << c->dim << '|' << c->label.str() << '|';
        std::vector<std::pair<std::string, std::string>> b;
        for (const auto& [t, deg] : c->boundary) b.push_back({t->id, deg.get_str()});
        std::sort(b.begin(), b.end());
        for (const auto& [tid, deg] : b) s << tid << ':' << deg << ';';
        return s.str();
    };

    while (!queue.empty()) {
        CellPtr cell = queue.front();
        queue.pop_front();
        if (!cell) throw DomainError("buildComplex: null cell");
        if (visited.count(cell.get())) continue;
        visited[cell.get()] = true;
        auto [it, inserted] = byId.emplace(cell->id, cell.get());
        if (!inserted) {
            if (signature(it->second) != signature(cell.get()))
                throw DomainError("buildComplex: conflicting cells share id '" + cell->id + "'");
            continue;  // identical duplicate; keep the first
        }
        collected.push_back(cell.get());
        for (const auto& [target, deg] : cell->boundary) {
            (void)deg;
            queue.push_back(target);
        }
    }

    std::vector<RawCell> raw;
    for (const CellNode* c : collected) {
        RawCell r{c->id, c->dim, c->label, {}};
        for (const auto& [target, deg] : c->boundary) r.boundary.push_back({target->id, deg});
        raw.push_back(std::move(r));
    }
    return CellComplex::fromRaw(ring, std::move(raw), true);
}

// Full subcomplex on the cells whose label divides b.  Boundary entries whose
// target drops out are necessarily zero-degree incidences and are removed.
inline CellComplex restrictComplex(const CellComplex& X, const Monomial& b) {
    requireSameRing(b.ring(), X.ring(), "restrict");
    std::set<std::string> kept;
    for (const auto& c : X.cells())
        if (divides(c.label, b)) kept.insert(c.id);
    std::vector<RawCell> raw;
    for (const auto& r : X.toRaw()) {
        if (!kept.count(r.id)) continue;
        RawCell copy = r;
        copy.boundary.clear();
        for (const auto& [tid, deg] : r.boundary)
            if (kept.count(tid)) copy.boundary.push_back({tid, deg});
        raw.push_back(std::move(copy));
    }
    return CellComplex::fromRaw(X.ring(), std::move(raw), false);
}

// Relation matrix of the face poset over the canonical cell order:
// M[i][j] = 1 iff cell i lies weakly below cell j under iterated boundary
// containment.  Every recorded incidence counts, including degree 0 (the RPn
// complexes rely on this).
inline std::vector<std::vector<int>> facePoset(const CellComplex& X) {
    size_t n = X.size();
    std::vector<std::vector<int>> below(n, std::vector<int>(n, 0));
    // cells_ are sorted by dimension, so every boundary index precedes its cell
    for (size_t j = 0; j < n; ++j) {
        below[j][j] = 1;
        for (const auto& [t, deg] : X.cell(static_cast<int>(j)).boundary) {
            (void)deg;
            for (size_t i = 0; i < n; ++i)
                if (below[static_cast<size_t>(t)][i]) below[j][i] = 1;
        }
    }
    // below[j][i] == 1 means i <= j; transpose into M[i][j]
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) m[i][j] = below[j][i];
    return m;
}

// Replaces the vertex labels and recomputes every higher label bottom-up as
// the lcm of its boundary labels.  Attaching degrees and the poset are
// untouched; the result is re-validated.
inline CellComplex relabelCellComplex(const CellComplex& X,
                                      const std::map<std::string, Monomial>& vertexLabels) {
    for (const auto& [id, label] : vertexLabels) {
        int idx = X.indexOf(id);
        if (idx < 0) throw DomainError("relabel: unknown cell id '" + id + "'");
        if (X.cell(idx).dim != 0) throw DomainError("relabel: '" + id + "' is not a 0-cell");
        requireSameRing(label.ring(), X.ring(), "relabel");
    }
    std::vector<RawCell> raw = X.toRaw();
    std::map<std::string, Monomial> newLabel;
    for (auto& r : raw) {
        if (r.dim == 0) {
            auto it = vertexLabels.find(r.id);
            if (it == vertexLabels.end())
                throw DomainError("relabel: missing vertex '" + r.id + "' in label map");
            newLabel.emplace(r.id, it->second);
        }
    }
    // raw is in canonical order (ascending dimension), so one pass suffices
    for (auto& r : raw) {
        if (r.dim == 0) {
            r.label = newLabel.at(r.id);
            continue;
        }
        Monomial acc = Monomial::one(X.ring());
        for (const auto& [tid, deg] : r.boundary) {
            (void)deg;
            acc = lcm(acc, newLabel.at(tid));
        }
        newLabel.emplace(r.id, acc);
        r.label = acc;
    }
    return CellComplex::fromRaw(X.ring(), std::move(raw), true);
}

inline std::vector<Monomial> cellLabels(const CellComplex& X) {
    std::vector<Monomial> out;
    out.reserve(X.size());
    for (const auto& c : X.cells()) out.push_back(c.label);
    return out;
}

inline std::vector<Monomial> vertexLabelList(const CellComplex& X) {
    std::vector<Monomial> out;
    for (const auto& c : X.cells())
        if (c.dim == 0) out.push_back(c.label);
    return out;
}

}  // namespace cellres
