#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cell_complex.hpp"
#include "chain.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "polyhedral.hpp"
#include "resolution.hpp"

namespace cellres {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in a signed 64-bit
// value and as decimal strings otherwise; both forms are accepted on read.
inline Json jsonOfInteger(const Integer& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

inline Integer integerFromJson(const Json& j, const char* what) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_number_unsigned()) {
        Integer z;
        z.set_str(std::to_string(j.get<unsigned long long>()), 10);
        return z;
    }
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw ParseError(std::string(what) + ": bad integer literal '" +
                             j.get<std::string>() + "'");
        return z;
    }
    throw ParseError(std::string(what) + ": expected an integer");
}

inline Json ringToJson(const RingPtr& ring) {
    Json j;
    j["variables"] = ring->variables;
    j["field"] = ring->field.name();
    return j;
}

inline RingPtr ringFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("field"))
        throw ParseError("ring: expected {\"variables\": [...], \"field\": ...}");
    std::vector<std::string> vars;
    for (const auto& v : j.at("variables")) {
        if (!v.is_string()) throw ParseError("ring: variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    if (!j.at("field").is_string()) throw ParseError("ring: field must be a string");
    return makeRing(std::move(vars), parseField(j.at("field").get<std::string>()));
}

inline Json monomialToJson(const Monomial& m) {
    Json j = Json::array();
    for (const auto& e : m.exponents()) j.push_back(jsonOfInteger(e));
    return j;
}

inline Monomial monomialFromJson(const Json& j, const RingPtr& ring) {
    if (!j.is_array()) throw ParseError("monomial: expected an exponent array");
    std::vector<Integer> exps;
    for (const auto& e : j) exps.push_back(integerFromJson(e, "monomial exponent"));
    return Monomial(ring, std::move(exps));
}

inline Json complexToJson(const CellComplex& X) {
    Json j;
    j["ring"] = ringToJson(X.ring());
    Json cells = Json::array();
    for (const auto& c : X.cells()) {
        Json jc;
        jc["id"] = c.id;
        jc["dim"] = c.dim;
        jc["label"] = monomialToJson(c.label);
        Json boundary = Json::array();
        for (const auto& [t, deg] : c.boundary)
            boundary.push_back(Json::array({X.cell(t).id, jsonOfInteger(deg)}));
        jc["boundary"] = boundary;
        cells.push_back(std::move(jc));
    }
    j["cells"] = cells;
    return j;
}

inline std::pair<RingPtr, std::vector<RawCell>> rawComplexFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("cells"))
        throw ParseError("complex: expected {\"ring\": ..., \"cells\": [...]}");
    RingPtr ring = ringFromJson(j.at("ring"));
    std::vector<RawCell> raw;
    for (const auto& jc : j.at("cells")) {
        if (!jc.contains("id") || !jc.contains("dim") || !jc.contains("label"))
            throw ParseError("complex: each cell needs id, dim, label");
        RawCell c{jc.at("id").get<std::string>(), jc.at("dim").get<int>(),
                  monomialFromJson(jc.at("label"), ring), {}};
        if (jc.contains("boundary"))
            for (const auto& b : jc.at("boundary")) {
                if (!b.is_array() || b.size() != 2)
                    throw ParseError("complex: boundary entries are [\"id\", degree] pairs");
                c.boundary.push_back(
                    {b.at(0).get<std::string>(), integerFromJson(b.at(1), "boundary degree")});
            }
        raw.push_back(std::move(c));
    }
    return {ring, std::move(raw)};
}

inline CellComplex complexFromJson(const Json& j, bool check = true) {
    auto [ring, raw] = rawComplexFromJson(j);
    return CellComplex::fromRaw(ring, std::move(raw), check);
}

inline Json idealToJson(const MonomialIdeal& I) {
    Json j;
    j["ring"] = ringToJson(I.ring());
    Json gens = Json::array();
    for (const auto& g : I.generators()) gens.push_back(g.str());
    j["generators"] = gens;
    return j;
}

// Parses and minimalizes; reports through `droppedGenerators` how many input
// generators were redundant (the CLI warns about them).
inline MonomialIdeal idealFromJson(const Json& j, size_t* droppedGenerators = nullptr) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("generators"))
        throw ParseError("ideal: expected {\"ring\": ..., \"generators\": [...]}");
    RingPtr ring = ringFromJson(j.at("ring"));
    std::vector<Monomial> gens;
    size_t position = 0;
    for (const auto& g : j.at("generators")) {
        ++position;
        if (!g.is_string()) throw ParseError("ideal: generators must be monomial strings");
        try {
            gens.push_back(parseMonomial(g.get<std::string>(), ring));
        } catch (const ParseError& e) {
            throw ParseError("ideal: generator #" + std::to_string(position) + ": " + e.what());
        }
    }
    if (gens.empty()) throw DomainError("ideal: empty generator list");
    MonomialIdeal I = minimalize(gens);
    if (droppedGenerators) *droppedGenerators = gens.size() - I.numGenerators();
    return I;
}

inline Json pointToJson(const RationalPoint& p) {
    Json j = Json::array();
    for (const auto& c : p.coords) j.push_back(rationalToString(c));
    return j;
}

inline RationalPoint pointFromJson(const Json& j) {
    if (!j.is_array()) throw ParseError("point: expected a coordinate array");
    RationalPoint p;
    for (const auto& c : j) {
        if (c.is_number_integer())
            p.coords.push_back(Rational(static_cast<long>(c.get<long long>())));
        else if (c.is_string())
            p.coords.push_back(parseRational(c.get<std::string>()));
        else
            throw ParseError("point: coordinates are \"p/q\" strings");
    }
    return p;
}

inline Json polyhedronToJson(const Polyhedron& P) {
    Json j;
    Json verts = Json::array(), rays = Json::array();
    for (const auto& v : P.vertices) verts.push_back(pointToJson(v));
    for (const auto& r : P.rays) rays.push_back(pointToJson(r));
    j["vertices"] = verts;
    j["rays"] = rays;
    return j;
}

inline Polyhedron polyhedronFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw ParseError("polyhedron: expected {\"vertices\": [...], \"rays\": [...]}");
    Polyhedron P;
    for (const auto& v : j.at("vertices")) P.vertices.push_back(pointFromJson(v));
    if (j.contains("rays"))
        for (const auto& r : j.at("rays")) P.rays.push_back(pointFromJson(r));
    return P;
}

// Labels file for polyhedral input: a ring plus [coordinates, monomial] pairs.
struct PolyhedralLabels {
    RingPtr ring;
    std::map<RationalPoint, Monomial> byVertex;
};

inline PolyhedralLabels polyhedralLabelsFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("labels"))
        throw ParseError("labels: expected {\"ring\": ..., \"labels\": [[coords, monomial], ...]}");
    PolyhedralLabels out;
    out.ring = ringFromJson(j.at("ring"));
    for (const auto& entry : j.at("labels")) {
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError("labels: entries are [coordinates, \"monomial\"] pairs");
        RationalPoint p = pointFromJson(entry.at(0));
        Monomial m = parseMonomial(entry.at(1).get<std::string>(), out.ring);
        if (!out.byVertex.emplace(p, m).second)
            throw ParseError("labels: duplicate vertex " + p.str());
    }
    return out;
}

// Labels file for relabeling: cell ids to monomial strings, over the
// complex's own ring.
inline std::map<std::string, Monomial> relabelMapFromJson(const Json& j, const RingPtr& ring) {
    if (!j.is_object() || !j.contains("labels") || !j.at("labels").is_object())
        throw ParseError("labels: expected {\"labels\": {\"cellId\": \"monomial\", ...}}");
    std::map<std::string, Monomial> out;
    for (const auto& [id, text] : j.at("labels").items()) {
        if (!text.is_string()) throw ParseError("labels: values must be monomial strings");
        out.emplace(id, parseMonomial(text.get<std::string>(), ring));
    }
    return out;
}

inline Json chainToJson(const ChainComplexData& C) {
    Json j;
    j["reduced"] = C.reduced;
    j["range"] = Json::array({C.lo, C.hi});
    Json ranks = Json::array();
    for (const auto& [d, n] : C.ranks()) ranks.push_back(Json::array({d, n}));
    j["ranks"] = ranks;
    Json diffs = Json::array();
    for (const auto& [d, diff] : C.differentials) {
        (void)d;
        Json jd;
        jd["degree"] = diff.degree;
        jd["rows"] = diff.rows;
        jd["cols"] = diff.cols;
        Json entries = Json::array();
        for (const auto& e : diff.entries)
            entries.push_back(
                Json::array({e.row, e.col, jsonOfInteger(e.coeff), e.monomial.str()}));
        jd["entries"] = entries;
        diffs.push_back(std::move(jd));
    }
    j["differentials"] = diffs;
    return j;
}

inline Json resolutionCheckToJson(const ResolutionCheck& rc, bool minimal) {
    Json j;
    j["isResolution"] = rc.isResolution;
    if (rc.witness) {
        Json w;
        w["multidegree"] = rc.witness->multidegree.str();
        w["homologicalDegree"] = rc.witness->homologicalDegree;
        w["rank"] = rc.witness->rank;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["isMinimal"] = minimal;
    return j;
}

inline Json violationsToJson(const std::vector<Violation>& vs) {
    Json j;
    j["ok"] = vs.empty();
    Json arr = Json::array();
    for (const auto& v : vs) {
        Json jv;
        jv["rule"] = v.rule;
        jv["cells"] = v.cells;
        jv["detail"] = v.detail;
        arr.push_back(std::move(jv));
    }
    j["violations"] = arr;
    return j;
}

inline Json posetToJson(const CellComplex& X) {
    Json j;
    Json ids = Json::array();
    for (const auto& c : X.cells()) ids.push_back(c.id);
    j["cells"] = ids;
    j["matrix"] = facePoset(X);
    return j;
}

}  // namespace cellres
