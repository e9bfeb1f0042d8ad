#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nok/errors.hpp"

namespace nok {

// Exact arbitrary-precision rational. GMP keeps the canonical form we need:
// positive denominator, coprime numerator/denominator.
using Rational = mpq_class;

using QVec = std::vector<Rational>;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw zero_denominator("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw precondition_error("empty rational literal");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw precondition_error("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw zero_denominator("rational literal '" + s + "' has zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational acc(1);
    Rational b = base;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Rational dot(const QVec& a, const QVec& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline bool lex_less(const QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

} // namespace nok
