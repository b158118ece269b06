#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corank2 {

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

// Canonical form "num/den"; "/den" omitted when den = 1. Canonicalizes a
// copy first: mpq_class(a, b) does not reduce on construction.
inline std::string rat_to_string(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) {
        s += '/';
        s += r.get_den().get_str();
    }
    return s;
}

// Accepts "-?digits" or "-?digits/digits" with a nonzero denominator.
inline Rational rat_from_string(const std::string& s) {
    const auto fail = [&s]() -> Rational {
        throw std::invalid_argument("bad rational literal: \"" + s + "\"");
    };
    const std::size_t slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    const auto integer_ok = [](const std::string& t, bool allow_sign) {
        std::size_t p = 0;
        if (allow_sign && p < t.size() && t[p] == '-') ++p;
        if (p == t.size()) return false;
        for (; p < t.size(); ++p)
            if (t[p] < '0' || t[p] > '9') return false;
        return true;
    };
    if (!integer_ok(num, true) || !integer_ok(den, false)) return fail();
    Rational q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) return fail();
    q.canonicalize();
    return q;
}

// Generalized binomial: 0 when b < 0, else a(a-1)...(a-b+1)/b!.
inline Rational binom(const Rational& a, long b) {
    if (b < 0) return Rational(0);
    Rational prod(1);
    mpz_class fact(1);
    for (long j = 0; j < b; ++j) {
        prod *= a - j;
        fact *= j + 1;
    }
    return prod / Rational(fact);
}

inline Rational binom(long a, long b) { return binom(Rational(a), b); }

inline int rat_sign(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return abs(q); }

}  // namespace corank2
