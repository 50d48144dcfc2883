#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace cellres {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    Integer characteristic = 0;  // the prime p when kind == PrimeField

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && characteristic == o.characteristic;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // wire format: "Q" or "Fp:<p>"
    std::string name() const {
        return kind == FieldKind::Rationals ? std::string("Q")
                                            : "Fp:" + characteristic.get_str();
    }
    // display format used in homology listings: "QQ" or "Z<p>"
    std::string displayName() const {
        return kind == FieldKind::Rationals ? std::string("QQ")
                                            : "Z" + characteristic.get_str();
    }
};

inline FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

inline FieldSpec primeField(const Integer& p) {
    if (!isPrime(p))
        throw DomainError("primeField: characteristic " + p.get_str() + " is not prime");
    return FieldSpec{FieldKind::PrimeField, p};
}

inline FieldSpec parseField(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        Integer p;
        if (p.set_str(text.substr(3), 10) != 0)
            throw ParseError("bad field spec '" + text + "'");
        return primeField(p);
    }
    throw ParseError("bad field spec '" + text + "' (expected Q or Fp:<p>)");
}

// A fine-graded polynomial ring: ordered variable names plus the coefficient
// field.  The variable list may be empty (the only monomial is then 1), which
// is how the sphere/RPn/torus constructors take a bare coefficient field.
struct RingDescriptor {
    std::vector<std::string> variables;
    FieldSpec field;

    bool operator==(const RingDescriptor& o) const {
        return variables == o.variables && field == o.field;
    }

    int indexOf(const std::string& name) const {
        for (size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

inline bool validVariableName(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline RingPtr makeRing(std::vector<std::string> variables, FieldSpec field = rationals()) {
    for (const auto& v : variables)
        if (!validVariableName(v))
            throw DomainError("makeRing: invalid variable name '" + v + "'");
    std::set<std::string> seen(variables.begin(), variables.end());
    if (seen.size() != variables.size())
        throw DomainError("makeRing: duplicate variable names");
    return std::make_shared<RingDescriptor>(RingDescriptor{std::move(variables), std::move(field)});
}

inline bool sameRing(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void requireSameRing(const RingPtr& a, const RingPtr& b, const char* op) {
    if (!sameRing(a, b)) throw DomainError(std::string(op) + ": ring mismatch");
}

// Monomial in a fixed ring, stored as its exponent vector.  Immutable; also
// serves as a multidegree in the fine grading.
class Monomial {
public:
    Monomial(RingPtr ring, std::vector<Integer> exponents)
        : ring_(std::move(ring)), exps_(std::move(exponents)) {
        if (!ring_) throw DomainError("Monomial: null ring");
        if (exps_.size() != ring_->variables.size())
            throw DomainError("Monomial: exponent count does not match ring");
        for (const auto& e : exps_)
            if (e < 0) throw DomainError("Monomial: negative exponent");
    }

    static Monomial one(const RingPtr& ring) {
        if (!ring) throw DomainError("Monomial::one: null ring");
        return Monomial(ring, std::vector<Integer>(ring->variables.size(), 0));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Integer>& exponents() const { return exps_; }
    size_t size() const { return exps_.size(); }

    Integer totalDegree() const {
        Integer d = 0;
        for (const auto& e : exps_) d += e;
        return d;
    }

    bool isOne() const {
        for (const auto& e : exps_)
            if (e != 0) return false;
        return true;
    }

    // "x^2*y", "z^4*w", "1"
    std::string str() const {
        std::ostringstream out;
        bool first = true;
        for (size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!first) out << '*';
            out << ring_->variables[i];
            if (exps_[i] > 1) out << '^' << exps_[i].get_str();
            first = false;
        }
        if (first) return "1";
        return out.str();
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return sameRing(a.ring_, b.ring_) && a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    RingPtr ring_;
    std::vector<Integer> exps_;
};

// Canonical total order: graded, then lexicographic on exponent vectors.
// Every deterministic listing in the library sorts monomials this way.
inline int compareMonomials(const Monomial& a, const Monomial& b) {
    requireSameRing(a.ring(), b.ring(), "compareMonomials");
    Integer da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db ? -1 : 1;
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    return 0;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compareMonomials(a, b) < 0;
    }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    requireSameRing(a.ring(), b.ring(), "divides");
    for (size_t i = 0; i < a.size(); ++i)
        if (a.exponents()[i] > b.exponents()[i]) return false;
    return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    requireSameRing(a.ring(), b.ring(), "lcm");
    std::vector<Integer> e(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(a.ring(), std::move(e));
}

inline Monomial product(const Monomial& a, const Monomial& b) {
    requireSameRing(a.ring(), b.ring(), "product");
    std::vector<Integer> e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = a.exponents()[i] + b.exponents()[i];
    return Monomial(a.ring(), std::move(e));
}

// Exact quotient a/b; requires b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
    if (!divides(b, a)) throw DomainError("quotient: " + b.str() + " does not divide " + a.str());
    std::vector<Integer> e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = a.exponents()[i] - b.exponents()[i];
    return Monomial(a.ring(), std::move(e));
}

inline Monomial lcmOf(const std::vector<Monomial>& ms) {
    if (ms.empty()) throw DomainError("lcmOf: empty list");
    Monomial acc = ms.front();
    for (size_t i = 1; i < ms.size(); ++i) acc = lcm(acc, ms[i]);
    return acc;
}

// A monomial ideal represented by its unique minimal generators, kept in the
// canonical order.  Construct through minimalize().
class MonomialIdeal {
public:
    MonomialIdeal(RingPtr ring, std::vector<Monomial> minimalGenerators)
        : ring_(std::move(ring)), gens_(std::move(minimalGenerators)) {
        if (gens_.empty()) throw DomainError("MonomialIdeal: no generators");
        for (const auto& g : gens_) requireSameRing(g.ring(), ring_, "MonomialIdeal");
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    size_t numGenerators() const { return gens_.size(); }

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

// Divisibility-minimal, canonically sorted generating set.  Idempotent.
inline MonomialIdeal minimalize(const std::vector<Monomial>& gens) {
    if (gens.empty()) throw DomainError("minimalize: empty generator list");
    RingPtr ring = gens.front().ring();
    std::set<Monomial, MonomialLess> distinct;
    for (const auto& g : gens) {
        requireSameRing(g.ring(), ring, "minimalize");
        distinct.insert(g);
    }
    std::vector<Monomial> kept;
    for (const auto& g : distinct) {
        bool redundant = false;
        for (const auto& h : distinct) {
            if (h == g) continue;
            if (divides(h, g)) {
                // ties were removed by the set; strict divisor wins
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal(ring, std::move(kept));
}

// Smallest set containing the inputs and closed under pairwise lcm.  Computed
// by saturating pairwise joins; fine at desk scale (<= ~12 generators).
inline std::vector<Monomial> lcmLattice(const std::vector<Monomial>& monomials) {
    if (monomials.empty()) throw DomainError("lcmLattice: empty input");
    RingPtr ring = monomials.front().ring();
    std::set<Monomial, MonomialLess> lattice;
    for (const auto& m : monomials) {
        requireSameRing(m.ring(), ring, "lcmLattice");
        lattice.insert(m);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Monomial> fresh;
        for (auto i = lattice.begin(); i != lattice.end(); ++i)
            for (auto j = std::next(i); j != lattice.end(); ++j) {
                Monomial m = lcm(*i, *j);
                if (!lattice.count(m)) fresh.push_back(m);
            }
        for (auto& m : fresh) grew |= lattice.insert(m).second;
    }
    return std::vector<Monomial>(lattice.begin(), lattice.end());
}

// Grammar: `1` | factor (`*` factor)*, factor = var (`^` positiveInt)?.
// Whitespace around tokens is tolerated; repeated variables accumulate.
inline Monomial parseMonomial(const std::string& text, const RingPtr& ring) {
    if (!ring) throw DomainError("parseMonomial: null ring");
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        size_t e = s.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return s.substr(b, e - b + 1);
    };
    std::string body = trim(text);
    if (body.empty()) throw ParseError("parseMonomial: empty input");
    if (body == "1") return Monomial::one(ring);

    std::vector<Integer> exps(ring->variables.size(), 0);
    std::string factor;
    std::vector<std::string> factors;
    std::istringstream stream(body);
    while (std::getline(stream, factor, '*')) factors.push_back(trim(factor));
    if (body.back() == '*') factors.push_back("");

    for (const auto& f : factors) {
        if (f.empty()) throw ParseError("parseMonomial: malformed input '" + text + "'");
        std::string var = f, expText = "";
        size_t caret = f.find('^');
        if (caret != std::string::npos) {
            var = trim(f.substr(0, caret));
            expText = trim(f.substr(caret + 1));
        }
        int idx = ring->indexOf(var);
        if (idx < 0) throw ParseError("parseMonomial: unknown variable '" + var + "'");
        Integer e = 1;
        if (caret != std::string::npos) {
            bool digits = !expText.empty();
            for (char c : expText)
                if (c < '0' || c > '9') digits = false;
            if (!digits) throw ParseError("parseMonomial: malformed exponent in '" + f + "'");
            e.set_str(expText, 10);
            if (e <= 0) throw ParseError("parseMonomial: non-positive exponent in '" + f + "'");
        }
        exps[idx] += e;
    }
    return Monomial(ring, std::move(exps));
}

}  // namespace cellres
