#pragma once

#include <corank2/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace corank2 {

// Univariate polynomial over the rationals, coefficients lowest-degree first,
// trailing zeros trimmed. The zero polynomial has degree -1.
struct UniPoly {
    std::vector<Rational> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    const Rational& leading() const {
        if (c.empty()) throw std::invalid_argument("leading: zero polynomial");
        return c.back();
    }

    Rational eval(const Rational& x) const {
        Rational v(0);
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    bool operator==(const UniPoly& o) const { return c == o.c; }
};

inline UniPoly poly_add(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return UniPoly(std::move(r));
}

inline UniPoly poly_scale(const UniPoly& a, const Rational& s) {
    std::vector<Rational> r(a.c);
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

inline UniPoly poly_sub(const UniPoly& a, const UniPoly& b) {
    return poly_add(a, poly_scale(b, Rational(-1)));
}

inline UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return UniPoly(std::move(r));
}

inline UniPoly poly_derivative(const UniPoly& a) {
    if (a.c.size() <= 1) return UniPoly();
    std::vector<Rational> r(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
}

// Quotient and remainder of exact polynomial division.
inline std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    UniPoly rem = a;
    if (rem.degree() < b.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(rem.c.size() - b.c.size() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Rational f = rem.leading() / b.leading();
        q[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
        rem.trim();
    }
    return {UniPoly(std::move(q)), rem};
}

inline UniPoly poly_monic(const UniPoly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, 1 / a.leading());
}

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// Same roots, all simple: a / gcd(a, a').
inline UniPoly square_free_part(const UniPoly& a) {
    if (a.is_zero()) return a;
    const UniPoly g = poly_gcd(a, poly_derivative(a));
    return poly_monic(poly_divmod(a, g).first);
}

// Interval endpoint for real-root counting.
struct SturmBound {
    enum Kind { NegInfinity, Finite, PosInfinity } kind = Finite;
    Rational value = Rational(0);

    static SturmBound neg_infinity() { return {NegInfinity, Rational(0)}; }
    static SturmBound pos_infinity() { return {PosInfinity, Rational(0)}; }
    static SturmBound at(const Rational& x) { return {Finite, x}; }
};

namespace detail {

inline int sturm_sign_at(const UniPoly& p, const SturmBound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case SturmBound::Finite:
            return rat_sign(p.eval(b.value));
        case SturmBound::PosInfinity:
            return rat_sign(p.leading());
        case SturmBound::NegInfinity:
        default:
            return p.degree() % 2 == 0 ? rat_sign(p.leading()) : -rat_sign(p.leading());
    }
}

inline std::size_t sturm_variations(const std::vector<UniPoly>& seq, const SturmBound& b) {
    std::size_t v = 0;
    int prev = 0;
    for (const auto& p : seq) {
        const int s = sturm_sign_at(p, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace detail

// Number of distinct real roots of `p` in the half-open interval (lo, hi].
// Works through the Sturm sequence of the square-free part, so multiple roots
// count once. Throws on the zero polynomial.
inline std::size_t sturm_real_root_count(const UniPoly& p, const SturmBound& lo,
                                         const SturmBound& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
    const UniPoly f = square_free_part(p);
    if (f.degree() <= 0) return 0;
    std::vector<UniPoly> seq{f, poly_derivative(f)};
    while (!seq.back().is_zero()) {
        UniPoly r = poly_divmod(seq[seq.size() - 2], seq.back()).second;
        seq.push_back(poly_scale(r, Rational(-1)));
    }
    seq.pop_back();
    const std::size_t vlo = detail::sturm_variations(seq, lo);
    const std::size_t vhi = detail::sturm_variations(seq, hi);
    return vlo >= vhi ? vlo - vhi : 0;
}

inline std::size_t sturm_real_root_count(const UniPoly& p) {
    return sturm_real_root_count(p, SturmBound::neg_infinity(), SturmBound::pos_infinity());
}

}  // namespace corank2
