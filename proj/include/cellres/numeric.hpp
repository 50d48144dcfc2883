#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cellres {

// Arbitrary-precision integers and rationals, GMP-backed.  Exponent vectors,
// attaching degrees and all polyhedral coordinates use these; no floating
// point appears anywhere in the library.
using Integer = mpz_class;
using Rational = mpq_class;

// Violated precondition or mathematical invariant (CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text or JSON (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer power(const Integer& base, const Integer& exponent) {
    if (exponent < 0) throw DomainError("power: negative exponent");
    if (!exponent.fits_ulong_p()) throw DomainError("power: exponent too large");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return r;
}

inline bool isPrime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline int signOf(const Integer& z) { return sgn(z); }

// Accepts "p", "-p", "p/q"; rejects anything else (including q == 0).
inline Rational parseRational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::string::size_type slash = text.find('/');
    auto digitsOk = [](const std::string& s) {
        if (s.empty()) return false;
        std::string::size_type i = (s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!digitsOk(num) || !digitsOk(den))
        throw ParseError("bad rational literal '" + text + "'");
    Rational q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rationalToString(const Rational& q) { return q.get_str(); }

}  // namespace cellres
