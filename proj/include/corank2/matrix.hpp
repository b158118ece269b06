#pragma once

#include <corank2/rational.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace corank2 {

// Dense exact matrix, row-major.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}

    Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const RatMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

using RatVector = std::vector<Rational>;

inline RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    if (v.size() != m.cols) throw std::invalid_argument("mat_vec: size mismatch");
    RatVector r(m.rows, Rational(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: size mismatch");
    RatMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

inline RatMatrix transpose(const RatMatrix& m) {
    RatMatrix r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

inline RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows == 0) return b;
    if (b.rows == 0) return a;
    if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
    RatMatrix r(a.rows + b.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
    return r;
}

// Reduced row echelon form in place; deterministic pivots (leftmost nonzero
// column, then smallest row index). Returns the pivot columns.
inline std::vector<std::size_t> rref_inplace(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        const Rational inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

namespace detail {

// Fraction-free (Bareiss) echelon over integer rows obtained by clearing each
// row's denominators. Intermediate entries stay minors of the scaled matrix.
struct BareissEchelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivot_cols;
    int swap_sign = 1;
    Rational scale = Rational(1);  // product of the per-row integerizing factors
};

inline BareissEchelon bareiss_echelon(const RatMatrix& m) {
    BareissEchelon e;
    e.rows.assign(m.rows, std::vector<mpz_class>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        mpz_class g(0);
        for (std::size_t j = 0; j < m.cols; ++j) {
            e.rows[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.rows[i][j].get_mpz_t());
        }
        if (g > 1)
            for (std::size_t j = 0; j < m.cols; ++j) e.rows[i][j] /= g;
        if (g == 0) g = 1;
        e.scale *= Rational(l, g);
    }
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && e.rows[sel][c] == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r) {
            std::swap(e.rows[sel], e.rows[r]);
            e.swap_sign = -e.swap_sign;
        }
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            for (std::size_t j = c + 1; j < m.cols; ++j) {
                mpz_class t = e.rows[r][c] * e.rows[i][j] - e.rows[i][c] * e.rows[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.rows[i][j] = t;
            }
            e.rows[i][c] = 0;
        }
        prev = e.rows[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace detail

inline std::size_t rank_of(const RatMatrix& m) {
    return detail::bareiss_echelon(m).pivot_cols.size();
}

inline Rational det(const RatMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    if (m.rows == 0) return Rational(1);
    const auto e = detail::bareiss_echelon(m);
    if (e.pivot_cols.size() < m.rows) return Rational(0);
    Rational d(e.rows[m.rows - 1][m.cols - 1]);
    d *= e.swap_sign;
    return d / e.scale;
}

// Deterministic reduced-echelon nullspace basis: one vector per free column in
// increasing column order, with value 1 at that free column.
inline std::vector<RatVector> nullspace(const RatMatrix& m) {
    const auto e = detail::bareiss_echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v = zero_vector(m.cols);
        v[f] = 1;
        for (std::size_t t = e.pivot_cols.size(); t-- > 0;) {
            const std::size_t pc = e.pivot_cols[t];
            Rational s(0);
            for (std::size_t c = pc + 1; c < m.cols; ++c)
                if (e.rows[t][c] != 0 && v[c] != 0) s += Rational(e.rows[t][c]) * v[c];
            v[pc] = -s / Rational(e.rows[t][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One exact solution of m·x = b with all free variables set to 0, or nothing
// when the system is inconsistent.
inline bool solve_particular(const RatMatrix& m, const RatVector& b, RatVector& out) {
    if (b.size() != m.rows) throw std::invalid_argument("solve_particular: size mismatch");
    RatMatrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    const auto pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return false;
    out = zero_vector(m.cols);
    for (std::size_t t = 0; t < pivots.size(); ++t) out[pivots[t]] = aug.at(t, m.cols);
    return true;
}

inline RatMatrix invert_matrix(const RatMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("invert_matrix: matrix not square");
    const std::size_t n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const std::vector<std::size_t> pivots = rref_inplace(aug);
    // A singular left block pushes pivots into the identity half.
    if (pivots.size() < n || (n > 0 && pivots.back() >= n))
        throw std::invalid_argument("invert_matrix: singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

inline bool is_skew(const RatMatrix& m) {
    if (m.rows != m.cols) return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i; j < m.cols; ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    return true;
}

namespace detail {

inline Rational pfaffian_expand(const RatMatrix& m) {
    const std::size_t n = m.rows;
    if (n == 0) return Rational(1);
    Rational pf(0);
    for (std::size_t j = 1; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RatMatrix sub(n - 2, n - 2);
        std::vector<std::size_t> keep;
        for (std::size_t t = 1; t < n; ++t)
            if (t != j) keep.push_back(t);
        for (std::size_t a = 0; a + 2 < n; ++a)
            for (std::size_t b = 0; b + 2 < n; ++b) sub.at(a, b) = m.at(keep[a], keep[b]);
        const Rational term = m.at(0, j) * pfaffian_expand(sub);
        if (j % 2 == 1)
            pf += term;
        else
            pf -= term;
    }
    return pf;
}

// Congruence elimination E·A·E^T with det(E) = 1 keeps the Pfaffian; each
// 2x2 step contributes the pivot M[t][t+1].
inline Rational pfaffian_eliminate(RatMatrix m) {
    const std::size_t n = m.rows;
    Rational pf(1);
    for (std::size_t t = 0; t + 1 < n; t += 2) {
        std::size_t j = t + 1;
        while (j < n && m.at(t, j) == 0) ++j;
        if (j == n) return Rational(0);
        if (j != t + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(t + 1, c), m.at(j, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(m.at(r, t + 1), m.at(r, j));
            pf = -pf;
        }
        const Rational p = m.at(t, t + 1);
        for (std::size_t i = t + 2; i < n; ++i) {
            const Rational lam = -m.at(t, i) / p;  // zero out row t beyond t+1
            if (lam != 0) {
                for (std::size_t c = 0; c < n; ++c) m.at(i, c) += lam * m.at(t + 1, c);
                for (std::size_t r = 0; r < n; ++r) m.at(r, i) += lam * m.at(r, t + 1);
            }
            const Rational mu = m.at(t + 1, i) / p;  // zero out row t+1 beyond t+1
            if (mu != 0) {
                for (std::size_t c = 0; c < n; ++c) m.at(i, c) += mu * m.at(t, c);
                for (std::size_t r = 0; r < n; ++r) m.at(r, i) += mu * m.at(r, t);
            }
        }
        pf *= p;
    }
    return pf;
}

}  // namespace detail

// Exact Pfaffian; pfaffian(m)^2 = det(m). Requires skew-symmetric even size.
inline Rational pfaffian(const RatMatrix& m) {
    if (m.rows != m.cols || m.rows % 2 != 0)
        throw std::invalid_argument("pfaffian: matrix must be skew of even size");
    if (!is_skew(m)) throw std::invalid_argument("pfaffian: matrix not skew-symmetric");
    if (m.rows <= 12) return detail::pfaffian_expand(m);
    return detail::pfaffian_eliminate(m);
}

// Pfaffian of m with row/column `cut` removed (m skew of odd size).
inline Rational sub_pfaffian(const RatMatrix& m, std::size_t cut) {
    RatMatrix sub(m.rows - 1, m.cols - 1);
    std::vector<std::size_t> keep;
    for (std::size_t t = 0; t < m.rows; ++t)
        if (t != cut) keep.push_back(t);
    for (std::size_t a = 0; a + 1 < m.rows; ++a)
        for (std::size_t b = 0; b + 1 < m.cols; ++b) sub.at(a, b) = m.at(keep[a], keep[b]);
    return pfaffian(sub);
}

// Incremental exact row reduction for large sparse systems. Rows are sparse
// (index, value) lists sorted by index; stored rows are normalized to a
// leading 1 and keyed by their pivot index.
class SparseEchelon {
  public:
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

    // Reduces the row against the current echelon; returns true when the row
    // was independent and absorbed.
    bool add(SparseRow row) {
        while (!row.empty()) {
            const auto it = rows_.find(row.front().first);
            if (it == rows_.end()) {
                const Rational inv = 1 / row.front().second;
                for (auto& [idx, val] : row) val *= inv;
                rows_.emplace(row.front().first, std::move(row));
                return true;
            }
            row = axpy(row, -row.front().second, it->second);
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

    // Dense matrix of the echelon rows over `n` columns, in pivot order.
    RatMatrix densify(std::size_t n) const {
        RatMatrix m(rows_.size(), n);
        std::size_t r = 0;
        for (const auto& [piv, row] : rows_) {
            (void)piv;
            for (const auto& [idx, val] : row) m.at(r, idx) = val;
            ++r;
        }
        return m;
    }

  private:
    static SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, s * b[j].second);
                ++j;
            } else {
                Rational v = a[i].second + s * b[j].second;
                if (v != 0) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::map<std::size_t, SparseRow> rows_;
};

}  // namespace corank2
