#pragma once

#include <corank2/liealg.hpp>
#include <corank2/matrix.hpp>
#include <corank2/poly.hpp>
#include <corank2/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace corank2 {

// Pencil of skew forms A*(p) = p1 A1 + p2 A2 on a (2k+1)-dimensional space.
struct SkewPencil {
    std::size_t k = 0;
    RatMatrix A1, A2;
};

inline SkewPencil make_pencil(std::size_t k, RatMatrix a1, RatMatrix a2) {
    const std::size_t n = 2 * k + 1;
    if (a1.rows != n || a1.cols != n || a2.rows != n || a2.cols != n)
        throw std::invalid_argument("pencil matrices must be (2k+1) x (2k+1)");
    if (!is_skew(a1) || !is_skew(a2))
        throw std::invalid_argument("pencil matrices must be skew-symmetric");
    return {k, std::move(a1), std::move(a2)};
}

inline RatMatrix eval(const SkewPencil& p, const Rational& p1, const Rational& p2) {
    const std::size_t n = 2 * p.k + 1;
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = p1 * p.A1.at(i, j) + p2 * p.A2.at(i, j);
    return m;
}

// Vector whose entries are binary forms of the given degree:
// F(p1, p2) = sum_j coeffs[j] * p1^(d-j) * p2^j.
struct BinaryFormVector {
    std::size_t degree = 0;
    std::size_t ambient_dim = 0;
    std::vector<RatVector> coeffs;  // degree + 1 vectors of length ambient_dim

    bool is_zero() const {
        for (const auto& v : coeffs)
            for (const auto& x : v)
                if (x != 0) return false;
        return true;
    }

    RatVector value(const Rational& p1, const Rational& p2) const {
        RatVector out = zero_vector(ambient_dim);
        Rational w1(1);
        for (std::size_t j = 0; j <= degree; ++j) {
            // weight p1^(d-j) p2^j accumulated from the highest p1 power down
            Rational weight = w1;
            for (std::size_t t = 0; t + j < degree; ++t) weight *= p1;
            for (std::size_t i = 0; i < ambient_dim; ++i) out[i] += weight * coeffs[j][i];
            w1 *= p2;
        }
        return out;
    }
};

// Kernel curve X_p with coordinate i equal to (-1)^i times the sub-Pfaffian of
// A*(p) with row and column i removed; degree-k forms recovered exactly from
// the k+1 evaluations at p = (1, t), t = 0..k.
inline BinaryFormVector xp_polynomial(const SkewPencil& p) {
    const std::size_t n = 2 * p.k + 1;
    std::vector<RatVector> samples;
    for (std::size_t t = 0; t <= p.k; ++t) {
        const RatMatrix m = eval(p, 1, Rational(static_cast<long>(t)));
        RatVector v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = sub_pfaffian(m, i);
            if (i % 2 == 1) v[i] = -v[i];
        }
        samples.push_back(std::move(v));
    }
    RatMatrix vand(p.k + 1, p.k + 1);
    for (std::size_t r = 0; r <= p.k; ++r) {
        Rational pw(1);
        for (std::size_t c = 0; c <= p.k; ++c) {
            vand.at(r, c) = pw;
            pw *= Rational(static_cast<long>(r));
        }
    }
    const RatMatrix vinv = invert_matrix(vand);
    BinaryFormVector x;
    x.degree = p.k;
    x.ambient_dim = n;
    x.coeffs.assign(p.k + 1, zero_vector(n));
    for (std::size_t j = 0; j <= p.k; ++j)
        for (std::size_t r = 0; r <= p.k; ++r) {
            if (vinv.at(j, r) == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                x.coeffs[j][i] += vinv.at(j, r) * samples[r][i];
        }
    return x;
}

// A*(p) X(p) = 0 as a polynomial identity: the convolution
// A1 b_m + A2 b_{m-1} must vanish for m = 0..degree+1.
inline bool kernel_identity_holds(const SkewPencil& p, const BinaryFormVector& x) {
    const std::size_t n = 2 * p.k + 1;
    if (x.ambient_dim != n) throw std::invalid_argument("ambient dimension mismatch");
    for (std::size_t m = 0; m <= x.degree + 1; ++m) {
        RatVector acc = zero_vector(n);
        if (m <= x.degree) {
            const RatVector t = mat_vec(p.A1, x.coeffs[m]);
            for (std::size_t i = 0; i < n; ++i) acc[i] += t[i];
        }
        if (m >= 1) {
            const RatVector t = mat_vec(p.A2, x.coeffs[m - 1]);
            for (std::size_t i = 0; i < n; ++i) acc[i] += t[i];
        }
        for (const auto& v : acc)
            if (v != 0) return false;
    }
    return true;
}

// Smallest degree d admitting a nonzero polynomial kernel
// B(p) = sum b_m p1^(d-m) p2^m: A1 b_0 = 0, A1 b_m + A2 b_{m-1} = 0, A2 b_d = 0.
// For a skew pencil on 2k+1 dimensions the index is at most k.
inline std::size_t kronecker_index(const SkewPencil& p) {
    const std::size_t n = 2 * p.k + 1;
    for (std::size_t d = 0; d <= p.k; ++d) {
        RatMatrix sys((d + 2) * n, (d + 1) * n);
        for (std::size_t m = 0; m <= d + 1; ++m)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    if (m <= d && p.A1.at(r, c) != 0) sys.at(m * n + r, m * n + c) = p.A1.at(r, c);
                    if (m >= 1 && p.A2.at(r, c) != 0)
                        sys.at(m * n + r, (m - 1) * n + c) += p.A2.at(r, c);
                }
        if (rank_of(sys) < (d + 1) * n) return d;
    }
    throw std::logic_error("skew pencil with no polynomial kernel of degree <= k");
}

struct G1Report {
    bool g1_holds = false;                      // coefficient span of X_p has full rank k+1
    std::size_t tilde_d_dim = 0;                // rank of the (k+1) x (2k+1) coefficient matrix
    bool real_kernel_everywhere_1dim = false;   // X_p has no real projective zero
    bool degenerate = false;                    // X_p vanishes identically
};

inline G1Report g1_check(const SkewPencil& p) {
    const std::size_t n = 2 * p.k + 1;
    const BinaryFormVector x = xp_polynomial(p);
    G1Report rep;
    rep.degenerate = x.is_zero();

    RatMatrix coeff(p.k + 1, n);
    for (std::size_t j = 0; j <= p.k; ++j)
        for (std::size_t i = 0; i < n; ++i) coeff.at(j, i) = x.coeffs[j][i];
    rep.tilde_d_dim = rank_of(coeff);
    rep.g1_holds = !rep.degenerate && rep.tilde_d_dim == p.k + 1;

    if (!rep.degenerate) {
        // Chart p2 = 1: G_i(s) = sum_j b_j[i] s^(k-j); the leftover point
        // [1:0] is a common zero iff every form is divisible by p2, i.e. the
        // b_0 coefficient vector vanishes.
        UniPoly g({Rational(0)});
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> cs(p.k + 1);
            for (std::size_t j = 0; j <= p.k; ++j) cs[p.k - j] = x.coeffs[j][i];
            UniPoly gi(cs);
            if (gi.is_zero()) continue;
            g = g.is_zero() ? gi : poly_gcd(g, gi);
        }
        bool infinity_zero = true;
        for (const auto& v : x.coeffs[0])
            if (v != 0) infinity_zero = false;
        const bool finite_zero = g.degree() > 0 && sturm_real_root_count(g) > 0;
        rep.real_kernel_everywhere_1dim = !finite_zero && !infinity_zero;
    }
    return rep;
}

// Pencil of a type-(k, w) symbol: pairings [x_i, y_{k-i}] = z and
// [x_{i+1}, y_{k-i}] = n in the basis x_0..x_k, y_1..y_k.
inline SkewPencil symbol_pencil(std::size_t k) {
    if (k < 1) throw std::invalid_argument("symbol_pencil: k must be >= 1");
    const std::size_t n = 2 * k + 1;
    RatMatrix a1(n, n), a2(n, n);
    for (std::size_t i = 0; i + 1 <= k; ++i) {
        const std::size_t yi = 2 * k - i;  // y_{k-i} at index k + (k-i)
        a1.at(i, yi) = 1;
        a1.at(yi, i) = -1;
        a2.at(i + 1, yi) = 1;
        a2.at(yi, i + 1) = -1;
    }
    return {k, std::move(a1), std::move(a2)};
}

// Reads the pencil off a 2-step bi-graded algebra with dim g^{-2} = 2 and
// odd-dimensional g^{-1}: A1, A2 are the two coordinates of the g^{-1} bracket.
inline SkewPencil pencil_of_symbol(const GradedLieAlgebra& a) {
    std::vector<std::size_t> g1, g2;
    for (std::size_t i = 0; i < a.dim; ++i) {
        const long d = a.basis[i].bidegree.second;
        if (d == -1)
            g1.push_back(i);
        else if (d == -2)
            g2.push_back(i);
        else
            throw std::invalid_argument("pencil_of_symbol expects a 2-step algebra");
    }
    if (g2.size() != 2)
        throw std::invalid_argument("pencil_of_symbol: g^{-2} must have dimension 2");
    if (g1.size() % 2 == 0 || g1.empty())
        throw std::invalid_argument("pencil_of_symbol: g^{-1} must be odd-dimensional");
    const std::size_t n = g1.size();
    const std::size_t k = (n - 1) / 2;
    if (k < 1) throw std::invalid_argument("pencil_of_symbol: g^{-1} too small");
    RatMatrix a1(n, n), a2(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            for (const auto& t : a.bracket(g1[r], g1[c])) {
                if (t.k == g2[0])
                    a1.at(r, c) = t.c;
                else if (t.k == g2[1])
                    a2.at(r, c) = t.c;
                else
                    throw std::invalid_argument("pencil_of_symbol: bracket leaves g^{-2}");
                a1.at(c, r) = -a1.at(r, c);
                a2.at(c, r) = -a2.at(r, c);
            }
    for (const std::size_t i : g2)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (!a.bracket(i, j).empty())
                throw std::invalid_argument("pencil_of_symbol: g^{-2} must be central");
    return {k, std::move(a1), std::move(a2)};
}

}  // namespace corank2
