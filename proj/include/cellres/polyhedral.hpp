#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cell_complex.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "numeric.hpp"

namespace cellres {

struct RationalPoint {
    std::vector<Rational> coords;

    bool operator==(const RationalPoint& o) const { return coords == o.coords; }
    bool operator<(const RationalPoint& o) const {
        for (size_t i = 0; i < std::min(coords.size(), o.coords.size()); ++i) {
            int c = cmp(coords[i], o.coords[i]);
            if (c != 0) return c < 0;
        }
        return coords.size() < o.coords.size();
    }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i)
            s += (i ? "," : "") + rationalToString(coords[i]);
        return s + ")";
    }
};

// conv(vertices) + cone(rays).  Rays may be empty (a polytope).
struct Polyhedron {
    std::vector<RationalPoint> vertices;
    std::vector<RationalPoint> rays;
};

struct Face {
    std::vector<int> vertexSet;  // indices into FaceLattice::vertices, sorted
    std::vector<int> raySet;     // indices into FaceLattice::rays, sorted
    int dim = 0;
    bool bounded() const { return raySet.empty(); }
};

// Complete face lattice of a polyhedron (empty face excluded; the polyhedron
// itself appears as the top face).  Facet inequalities and affine-hull
// equations are kept in homogenized form <w,(1,x)> <= 0 resp. = 0.
struct FaceLattice {
    std::vector<RationalPoint> vertices;
    std::vector<RationalPoint> rays;
    std::vector<Face> faces;                     // canonical order (dim, vertexSet, raySet)
    std::vector<std::pair<int, int>> coverings;  // (lower, upper) with dim difference 1
    int dim = 0;
    std::vector<std::vector<Rational>> facetInequalities;
    std::vector<std::vector<Rational>> affineHullEquations;

    std::vector<long> fVector() const {
        std::vector<long> f(static_cast<size_t>(dim + 1), 0);
        for (const auto& face : faces) ++f[static_cast<size_t>(face.dim)];
        return f;
    }
};

namespace polydetail {

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RationalPoint primitiveDirection(const RationalPoint& r) {
    Integer scale = 1;
    for (const auto& c : r.coords) scale = scale * c.get_den() / gcd(scale, Integer(c.get_den()));
    Integer g = 0;
    std::vector<Integer> ints;
    for (const auto& c : r.coords) {
        Rational v = c * Rational(scale);
        ints.push_back(v.get_num());
        g = gcd(g, Integer(v.get_num()));
    }
    if (g == 0) throw DomainError("polyhedron: zero ray");
    RationalPoint out;
    for (auto& z : ints) out.coords.push_back(Rational(z / g));
    return out;
}

// Basis of the row space, via row echelon form.
inline QMatrix rowSpaceBasis(const QMatrix& rows) {
    QMatrix m = rows;
    rowEchelon(m);
    QMatrix basis;
    for (const auto& r : m) {
        bool zero = true;
        for (const auto& x : r) zero &= (x == 0);
        if (!zero) basis.push_back(r);
    }
    return basis;
}

inline long rankOfRows(const QMatrix& rows) {
    QMatrix m = rows;
    return rankRational(std::move(m));
}

// The (up to scale unique) vector of span(basis) orthogonal to every row of
// sub, assuming rank(sub) == rank(basis) - 1.  Empty when the defect is not 1.
inline std::vector<Rational> orthogonalComplementInSpan(const QMatrix& sub, const QMatrix& basis) {
    size_t r = basis.size();
    QMatrix system;  // |sub| x r, entries <sub_i, basis_j>
    for (const auto& s : sub) {
        std::vector<Rational> row(r);
        for (size_t j = 0; j < r; ++j) row[j] = dot(s, basis[j]);
        system.push_back(std::move(row));
    }
    auto kernel = nullspaceRational(std::move(system));
    if (kernel.size() != 1) return {};
    std::vector<Rational> w(basis.empty() ? 0 : basis[0].size(), Rational(0));
    for (size_t j = 0; j < r; ++j)
        for (size_t k = 0; k < w.size(); ++k) w[k] += kernel[0][j] * basis[j][k];
    return w;
}

struct GenSet {
    QMatrix gens;      // homogenized: (1,v) per vertex, then (0,r) per ray
    size_t numVerts = 0;
    size_t ambient = 0;

    bool isVertexGen(size_t g) const { return g < numVerts; }
};

inline GenSet homogenize(const std::vector<RationalPoint>& vertices,
                         const std::vector<RationalPoint>& rays) {
    GenSet gs;
    gs.numVerts = vertices.size();
    gs.ambient = vertices.front().coords.size();
    for (const auto& v : vertices) {
        std::vector<Rational> g{Rational(1)};
        g.insert(g.end(), v.coords.begin(), v.coords.end());
        gs.gens.push_back(std::move(g));
    }
    for (const auto& r : rays) {
        std::vector<Rational> g{Rational(0)};
        g.insert(g.end(), r.coords.begin(), r.coords.end());
        gs.gens.push_back(std::move(g));
    }
    return gs;
}

inline bool nextCombination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace polydetail

// Face lattice by brute-force supporting-hyperplane enumeration: every facet
// of the homogenized cone is spanned by generators lying on it, so scanning
// the rank-(d-1) generator subsets and keeping the one-sided normals finds
// them all.  Faces are then closed under intersection.  Exponential in the
// generator count; intended for desk-scale inputs.
inline FaceLattice faceLattice(const Polyhedron& P) {
    using namespace polydetail;
    if (P.vertices.empty()) throw DomainError("faceLattice: polyhedron needs a vertex");
    size_t ambient = P.vertices.front().coords.size();
    for (const auto& v : P.vertices)
        if (v.coords.size() != ambient)
            throw DomainError("faceLattice: inconsistent coordinate dimensions");
    for (const auto& r : P.rays)
        if (r.coords.size() != ambient)
            throw DomainError("faceLattice: inconsistent coordinate dimensions");

    FaceLattice L;
    // exact dedupe; input order is otherwise preserved
    for (const auto& v : P.vertices)
        if (std::find(L.vertices.begin(), L.vertices.end(), v) == L.vertices.end())
            L.vertices.push_back(v);
    for (const auto& r : P.rays) {
        RationalPoint p = primitiveDirection(r);
        if (std::find(L.rays.begin(), L.rays.end(), p) == L.rays.end()) L.rays.push_back(p);
    }

    GenSet gs = homogenize(L.vertices, L.rays);
    size_t M = gs.gens.size();
    QMatrix spanBasis = rowSpaceBasis(gs.gens);
    size_t dL = spanBasis.size();
    L.dim = static_cast<int>(dL) - 1;

    // affine hull: nullspace of the generator matrix
    L.affineHullEquations = nullspaceRational(gs.gens);

    auto faceKey = [&](const std::vector<size_t>& genIdx) {
        Face f;
        for (size_t g : genIdx) {
            if (gs.isVertexGen(g))
                f.vertexSet.push_back(static_cast<int>(g));
            else
                f.raySet.push_back(static_cast<int>(g - gs.numVerts));
        }
        return f;
    };

    std::set<std::vector<size_t>> facetSets;
    if (dL >= 2) {
        std::vector<size_t> idx(dL - 1);
        for (size_t i = 0; i < dL - 1; ++i) idx[i] = i;
        if (M >= dL - 1) {
            do {
                QMatrix sub;
                for (size_t i : idx) sub.push_back(gs.gens[i]);
                if (static_cast<size_t>(rankOfRows(sub)) != dL - 1) continue;
                std::vector<Rational> w = orthogonalComplementInSpan(sub, spanBasis);
                if (w.empty()) continue;
                bool pos = false, neg = false;
                std::vector<size_t> onFace;
                for (size_t g = 0; g < M; ++g) {
                    int s = sgn(dot(w, gs.gens[g]));
                    if (s > 0) pos = true;
                    if (s < 0) neg = true;
                    if (s == 0) onFace.push_back(g);
                }
                if (pos && neg) continue;  // not supporting
                if (pos)
                    for (auto& x : w) x = -x;  // orient so <w, g> <= 0
                bool hasVertex = false;
                for (size_t g : onFace) hasVertex |= gs.isVertexGen(g);
                if (!hasVertex) continue;  // face at infinity, not a face of P
                if (facetSets.insert(onFace).second) L.facetInequalities.push_back(w);
            } while (nextCombination(idx, M));
        }
    }

    // all faces: intersections of facet generator sets, plus the top face
    std::vector<size_t> all(M);
    for (size_t i = 0; i < M; ++i) all[i] = i;
    std::set<std::vector<size_t>> faceSets{all};
    for (const auto& f : facetSets) faceSets.insert(f);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<size_t>> fresh;
        for (const auto& f : faceSets)
            for (const auto& g : facetSets) {
                std::vector<size_t> meet;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                      std::back_inserter(meet));
                if (meet.empty() || faceSets.count(meet)) continue;
                bool hasVertex = false;
                for (size_t x : meet) hasVertex |= gs.isVertexGen(x);
                if (hasVertex) fresh.push_back(std::move(meet));
            }
        for (auto& f : fresh) grew |= faceSets.insert(f).second;
    }

    for (const auto& genIdx : faceSets) {
        Face f = faceKey(genIdx);
        QMatrix sub;
        for (size_t g : genIdx) sub.push_back(gs.gens[g]);
        f.dim = static_cast<int>(rankOfRows(sub)) - 1;
        L.faces.push_back(std::move(f));
    }
    std::sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.vertexSet != b.vertexSet) return a.vertexSet < b.vertexSet;
        return a.raySet < b.raySet;
    });

    auto contains = [](const std::vector<int>& small, const std::vector<int>& big) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (size_t i = 0; i < L.faces.size(); ++i)
        for (size_t j = 0; j < L.faces.size(); ++j) {
            if (L.faces[i].dim + 1 != L.faces[j].dim) continue;
            if (contains(L.faces[i].vertexSet, L.faces[j].vertexSet) &&
                contains(L.faces[i].raySet, L.faces[j].raySet))
                L.coverings.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return L;
}

// The sub-lattice of bounded faces (no rays).  For a polytope this is the
// whole lattice including the top face; for an unbounded polyhedron the top
// face carries rays and drops out.
inline FaceLattice boundedFaces(const FaceLattice& L) {
    FaceLattice B;
    B.vertices = L.vertices;
    B.dim = -1;
    std::vector<int> remap(L.faces.size(), -1);
    for (size_t i = 0; i < L.faces.size(); ++i) {
        if (!L.faces[i].bounded()) continue;
        remap[i] = static_cast<int>(B.faces.size());
        B.faces.push_back(L.faces[i]);
        B.dim = std::max(B.dim, L.faces[i].dim);
    }
    for (const auto& [lo, hi] : L.coverings)
        if (remap[static_cast<size_t>(lo)] >= 0 && remap[static_cast<size_t>(hi)] >= 0)
            B.coverings.push_back({remap[static_cast<size_t>(lo)], remap[static_cast<size_t>(hi)]});
    B.facetInequalities = L.facetInequalities;
    B.affineHullEquations = L.affineHullEquations;
    return B;
}

inline FaceLattice boundedFaces(const Polyhedron& P) { return boundedFaces(faceLattice(P)); }

namespace polydetail {

// Shared cell builder: bounded faces in, labeled cell complex out.  Edges get
// (+1,-1) in canonical vertex-face order; higher cells get sign-propagated
// attaching degrees; labels are the lcm of the boundary labels.
inline CellComplex complexFromBoundedFaces(const RingPtr& ring, const FaceLattice& B,
                                           const std::vector<Monomial>& vertexLabels,
                                           const std::string& idPrefix) {
    std::vector<std::string> faceId(B.faces.size());
    std::map<int, int> perDimCounter;
    for (size_t i = 0; i < B.faces.size(); ++i) {
        int d = B.faces[i].dim;
        faceId[i] = idPrefix + std::to_string(d) + "_" + std::to_string(perDimCounter[d]++);
    }
    std::vector<std::vector<int>> covered(B.faces.size());
    for (const auto& [lo, hi] : B.coverings) covered[static_cast<size_t>(hi)].push_back(lo);
    for (auto& c : covered) std::sort(c.begin(), c.end());

    std::map<std::string, RawCell> built;
    std::vector<RawCell> raw;
    for (size_t i = 0; i < B.faces.size(); ++i) {  // ascending dimension
        const Face& f = B.faces[i];
        RawCell cell{faceId[i], f.dim, Monomial::one(ring), {}};
        if (f.dim == 0) {
            cell.label = vertexLabels.at(static_cast<size_t>(f.vertexSet.at(0)));
        } else {
            std::vector<Monomial> boundaryLabels;
            for (int lo : covered[i]) boundaryLabels.push_back(built.at(faceId[lo]).label);
            cell.label = lcmOf(boundaryLabels);
            if (f.dim == 1) {
                if (covered[i].size() != 2)
                    throw DomainError("polyhedral: bounded edge without two endpoints");
                cell.boundary = {{faceId[covered[i][0]], Integer(1)},
                                 {faceId[covered[i][1]], Integer(-1)}};
            } else {
                std::vector<std::map<std::string, Integer>> beta;
                for (int lo : covered[i]) {
                    const RawCell& bc = built.at(faceId[lo]);
                    std::map<std::string, Integer> agg;
                    for (const auto& [tid, deg] : bc.boundary)
                        if (deg != 0) agg[tid] = deg;
                    beta.push_back(std::move(agg));
                }
                std::vector<int> sign;
                try {
                    sign = detail::inferBoundarySigns(beta);
                } catch (const DomainError& e) {
                    throw DomainError(std::string("polyhedral: sign propagation failed "
                                                  "(broken face lattice): ") + e.what());
                }
                for (size_t k = 0; k < covered[i].size(); ++k)
                    cell.boundary.push_back({faceId[covered[i][k]], Integer(sign[k])});
            }
        }
        built.emplace(cell.id, cell);
        raw.push_back(std::move(cell));
    }
    return CellComplex::fromRaw(ring, std::move(raw), true);
}

inline std::vector<Monomial> resolveVertexLabels(
    const RingPtr& ring, const std::vector<RationalPoint>& vertices,
    const std::optional<std::map<RationalPoint, Monomial>>& labels) {
    std::vector<Monomial> out;
    if (!labels) {
        out.assign(vertices.size(), Monomial::one(ring));
        return out;
    }
    for (const auto& [pt, m] : *labels) {
        requireSameRing(m.ring(), ring, "cellComplex labels");
        if (std::find(vertices.begin(), vertices.end(), pt) == vertices.end())
            throw DomainError("cellComplex: label key " + pt.str() + " is not a vertex");
    }
    for (const auto& v : vertices) {
        auto it = labels->find(v);
        if (it == labels->end())
            throw DomainError("cellComplex: label map is missing vertex " + v.str());
        out.push_back(it->second);
    }
    return out;
}

}  // namespace polydetail

// Cell complex of the bounded faces of a polyhedron, with optional vertex
// labels keyed by exact coordinates.  Vertices are canonicalized by sorting,
// so the result does not depend on input order.
inline CellComplex cellComplexFromPolyhedron(
    const RingPtr& ring, const Polyhedron& P,
    const std::optional<std::map<RationalPoint, Monomial>>& labels = std::nullopt) {
    Polyhedron sorted = P;
    std::sort(sorted.vertices.begin(), sorted.vertices.end());
    sorted.vertices.erase(std::unique(sorted.vertices.begin(), sorted.vertices.end()),
                          sorted.vertices.end());
    std::sort(sorted.rays.begin(), sorted.rays.end());
    FaceLattice B = boundedFaces(faceLattice(sorted));
    auto vertexLabels = polydetail::resolveVertexLabels(ring, B.vertices, labels);
    return polydetail::complexFromBoundedFaces(ring, B, vertexLabels, "f");
}

// A collection of polytopes whose pairwise intersections are faces of both;
// checked exactly at construction.
struct PolyhedralComplex {
    std::vector<Polyhedron> members;
    std::vector<FaceLattice> lattices;

    std::vector<RationalPoint> allVertices() const {
        std::vector<RationalPoint> out;
        for (const auto& L : lattices)
            for (const auto& v : L.vertices)
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace polydetail {

// Vertices of the H-polytope cut out by both members' facet inequalities and
// affine hull equations, by brute force over n-subsets of constraints.
inline std::vector<RationalPoint> intersectionVertices(const FaceLattice& A,
                                                       const FaceLattice& B, size_t ambient) {
    QMatrix constraints;  // rows c with c.(1,x): equalities first
    size_t numEq = 0;
    for (const auto& e : A.affineHullEquations) constraints.push_back(e), ++numEq;
    for (const auto& e : B.affineHullEquations) constraints.push_back(e), ++numEq;
    for (const auto& w : A.facetInequalities) constraints.push_back(w);
    for (const auto& w : B.facetInequalities) constraints.push_back(w);

    auto feasible = [&](const std::vector<Rational>& hx) {
        for (size_t i = 0; i < constraints.size(); ++i) {
            Rational v = dot(constraints[i], hx);
            if (i < numEq ? (v != 0) : (v > 0)) return false;
        }
        return true;
    };

    std::set<RationalPoint> found;
    if (constraints.size() < ambient || ambient == 0) return {};
    std::vector<size_t> idx(ambient);
    for (size_t i = 0; i < ambient; ++i) idx[i] = i;
    do {
        // solve c_i . (1,x) = 0 for the chosen rows
        QMatrix sys;
        for (size_t i : idx) sys.push_back(constraints[i]);
        // augmented elimination: unknowns x_1..x_n, rhs = -c_0
        QMatrix m(ambient, std::vector<Rational>(ambient + 1));
        for (size_t r = 0; r < ambient; ++r) {
            for (size_t c = 0; c < ambient; ++c) m[r][c] = sys[r][c + 1];
            m[r][ambient] = -sys[r][0];
        }
        auto pivots = rowEchelon(m);
        if (pivots.size() != ambient) continue;  // not a determined system
        bool consistent = true;
        for (size_t c : pivots) consistent &= (c < ambient);
        if (!consistent) continue;
        std::vector<Rational> hx(ambient + 1);
        hx[0] = 1;
        for (size_t r = 0; r < ambient; ++r) hx[pivots[r] + 1] = m[r][ambient];
        if (!feasible(hx)) continue;
        RationalPoint p;
        p.coords.assign(hx.begin() + 1, hx.end());
        found.insert(std::move(p));
    } while (nextCombination(idx, constraints.size()));
    return std::vector<RationalPoint>(found.begin(), found.end());
}

// Vertex set of the smallest face of L containing every point of S.
inline std::vector<RationalPoint> smallestFaceVertices(const FaceLattice& L,
                                                       const std::vector<RationalPoint>& S) {
    std::vector<int> meet;
    for (size_t i = 0; i < L.faces.back().vertexSet.size(); ++i)
        meet.push_back(L.faces.back().vertexSet[i]);  // top face (last in canonical order)
    for (const auto& w : L.facetInequalities) {
        bool active = true;
        for (const auto& x : S) {
            std::vector<Rational> hx{Rational(1)};
            hx.insert(hx.end(), x.coords.begin(), x.coords.end());
            active &= (dot(w, hx) == 0);
        }
        if (!active) continue;
        // intersect with this facet's vertex set
        std::vector<int> facetVerts;
        for (size_t g = 0; g < L.vertices.size(); ++g) {
            std::vector<Rational> hv{Rational(1)};
            hv.insert(hv.end(), L.vertices[g].coords.begin(), L.vertices[g].coords.end());
            if (dot(w, hv) == 0) facetVerts.push_back(static_cast<int>(g));
        }
        std::vector<int> next;
        std::set_intersection(meet.begin(), meet.end(), facetVerts.begin(), facetVerts.end(),
                              std::back_inserter(next));
        meet = std::move(next);
    }
    std::vector<RationalPoint> out;
    for (int i : meet) out.push_back(L.vertices[static_cast<size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polydetail

// Builds a polyhedral complex from polytopes, verifying exactly that every
// pairwise intersection is a face of both members.
inline PolyhedralComplex polyhedralComplex(const std::vector<Polyhedron>& polytopes) {
    if (polytopes.empty()) throw DomainError("polyhedralComplex: empty list");
    PolyhedralComplex PC;
    size_t ambient = polytopes.front().vertices.empty()
                         ? 0
                         : polytopes.front().vertices.front().coords.size();
    for (const auto& P : polytopes) {
        if (!P.rays.empty())
            throw DomainError("polyhedralComplex: members must be polytopes (no rays)");
        Polyhedron sorted = P;
        std::sort(sorted.vertices.begin(), sorted.vertices.end());
        sorted.vertices.erase(std::unique(sorted.vertices.begin(), sorted.vertices.end()),
                              sorted.vertices.end());
        if (!sorted.vertices.empty() && sorted.vertices.front().coords.size() != ambient)
            throw DomainError("polyhedralComplex: inconsistent ambient dimensions");
        PC.members.push_back(sorted);
        PC.lattices.push_back(faceLattice(sorted));
    }
    for (size_t i = 0; i < PC.members.size(); ++i)
        for (size_t j = i + 1; j < PC.members.size(); ++j) {
            auto meet = polydetail::intersectionVertices(PC.lattices[i], PC.lattices[j], ambient);
            if (meet.empty()) continue;  // disjoint members are fine
            for (size_t side = 0; side < 2; ++side) {
                const FaceLattice& L = side == 0 ? PC.lattices[i] : PC.lattices[j];
                auto faceVerts = polydetail::smallestFaceVertices(L, meet);
                if (faceVerts != meet)
                    throw DomainError("polyhedralComplex: members " + std::to_string(i) + " and " +
                                      std::to_string(j) + " do not intersect in a common face");
            }
        }
    return PC;
}

// Cells of a polyhedral complex: the faces of all members, identified across
// members by their exact vertex coordinate sets.
inline CellComplex cellComplexFromPolyhedralComplex(
    const RingPtr& ring, const PolyhedralComplex& PC,
    const std::optional<std::map<RationalPoint, Monomial>>& labels = std::nullopt) {
    std::vector<RationalPoint> globalVerts = PC.allVertices();
    auto globalIndex = [&](const RationalPoint& p) {
        auto it = std::lower_bound(globalVerts.begin(), globalVerts.end(), p);
        return static_cast<int>(it - globalVerts.begin());
    };

    // merge faces keyed by global vertex index sets
    std::map<std::vector<int>, int> faceDim;
    std::set<std::pair<std::vector<int>, std::vector<int>>> coverPairs;
    for (const auto& L : PC.lattices) {
        std::vector<std::vector<int>> key(L.faces.size());
        for (size_t f = 0; f < L.faces.size(); ++f) {
            for (int vi : L.faces[f].vertexSet)
                key[f].push_back(globalIndex(L.vertices[static_cast<size_t>(vi)]));
            std::sort(key[f].begin(), key[f].end());
            auto [it, inserted] = faceDim.emplace(key[f], L.faces[f].dim);
            if (!inserted && it->second != L.faces[f].dim)
                throw DomainError("polyhedralComplex: face dimension clash (internal)");
        }
        for (const auto& [lo, hi] : L.coverings)
            coverPairs.insert({key[static_cast<size_t>(lo)], key[static_cast<size_t>(hi)]});
    }

    FaceLattice merged;
    merged.vertices = globalVerts;
    merged.dim = -1;
    std::map<std::vector<int>, int> faceIndex;
    std::vector<std::pair<std::vector<int>, int>> ordered(faceDim.begin(), faceDim.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    for (const auto& [key, d] : ordered) {
        faceIndex[key] = static_cast<int>(merged.faces.size());
        merged.faces.push_back(Face{key, {}, d});
        merged.dim = std::max(merged.dim, d);
    }
    for (const auto& [loKey, hiKey] : coverPairs)
        merged.coverings.push_back({faceIndex.at(loKey), faceIndex.at(hiKey)});

    auto vertexLabels = polydetail::resolveVertexLabels(ring, globalVerts, labels);
    return polydetail::complexFromBoundedFaces(ring, merged, vertexLabels, "f");
}

// Hull complex: bounded faces of conv{(t^a1, ..., t^an) : x^a a generator}
// plus the nonnegative orthant, vertices labeled by their generators.  The
// default t = (n+1)! + 1 satisfies the classical sufficiency bound.
inline CellComplex hullComplex(const MonomialIdeal& I,
                               std::optional<Integer> tOpt = std::nullopt) {
    size_t n = I.ring()->variables.size();
    Integer t = tOpt ? *tOpt : factorial(static_cast<unsigned long>(n) + 1) + 1;
    if (t < 2) throw DomainError("hullComplex: t must be >= 2");

    Polyhedron P;
    for (const auto& g : I.generators()) {
        RationalPoint p;
        for (const auto& e : g.exponents()) p.coords.push_back(Rational(power(t, e)));
        P.vertices.push_back(std::move(p));
    }
    for (size_t i = 0; i < n; ++i) {
        RationalPoint r;
        r.coords.assign(n, Rational(0));
        r.coords[i] = 1;
        P.rays.push_back(std::move(r));
    }

    FaceLattice B = boundedFaces(faceLattice(P));
    if (B.vertices.size() != I.numGenerators())
        throw DomainError("hullComplex: generator points collapsed (t too small?)");
    std::set<int> zeroFaces;
    for (const auto& f : B.faces)
        if (f.dim == 0) zeroFaces.insert(f.vertexSet.at(0));
    if (zeroFaces.size() != I.numGenerators())
        throw DomainError("hullComplex: some generator is not a vertex of the hull "
                          "polyhedron (t too small?)");
    // faceLattice preserved input vertex order, so index k is generator k
    return polydetail::complexFromBoundedFaces(I.ring(), B, I.generators(), "h");
}

}  // namespace cellres
