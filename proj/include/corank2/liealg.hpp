#pragma once

#include <corank2/matrix.hpp>
#include <corank2/rational.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace corank2 {

using Bidegree = std::pair<long, long>;

inline Bidegree operator+(const Bidegree& a, const Bidegree& b) {
    return {a.first + b.first, a.second + b.second};
}

struct Term {
    std::size_t k = 0;  // basis index
    Rational c;

    bool operator==(const Term& o) const { return k == o.k && c == o.c; }
};

struct BasisElement {
    std::string label;
    Bidegree bidegree{0, 0};
};

// Graded or bi-graded Lie algebra given by sparse structure constants.
// Brackets are stored for i < j only; the reversed and diagonal lookups are
// synthesized. Single-graded algebras use bidegree (d, d).
struct GradedLieAlgebra {
    std::size_t dim = 0;
    std::vector<BasisElement> basis;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> brackets;

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].label == label) return i;
        throw std::invalid_argument("no basis element labeled \"" + label + "\"");
    }

    void set_bracket(std::size_t i, std::size_t j, std::vector<Term> terms) {
        if (i == j) throw std::invalid_argument("set_bracket: equal indices");
        if (i > j) {
            std::swap(i, j);
            for (auto& t : terms) t.c = -t.c;
        }
        std::map<std::size_t, Rational> merged;
        for (const auto& t : terms) merged[t.k] += t.c;
        std::vector<Term> norm;
        for (const auto& [idx, val] : merged)
            if (val != 0) norm.push_back({idx, val});
        if (norm.empty())
            brackets.erase({i, j});
        else
            brackets[{i, j}] = std::move(norm);
    }

    std::vector<Term> bracket(std::size_t i, std::size_t j) const {
        if (i == j) return {};
        const bool flip = i > j;
        const auto it = brackets.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
        if (it == brackets.end()) return {};
        std::vector<Term> out = it->second;
        if (flip)
            for (auto& t : out) t.c = -t.c;
        return out;
    }

    RatVector bracket_vectors(const RatVector& u, const RatVector& v) const {
        if (u.size() != dim || v.size() != dim)
            throw std::invalid_argument("bracket_vectors: size mismatch");
        RatVector r = zero_vector(dim);
        for (const auto& [ij, terms] : brackets) {
            const Rational f = u[ij.first] * v[ij.second] - u[ij.second] * v[ij.first];
            if (f == 0) continue;
            for (const auto& t : terms) r[t.k] += f * t.c;
        }
        return r;
    }

    bool bidegrees_additive() const {
        for (const auto& [ij, terms] : brackets) {
            const Bidegree sum = basis[ij.first].bidegree + basis[ij.second].bidegree;
            for (const auto& t : terms)
                if (basis[t.k].bidegree != sum) return false;
        }
        return true;
    }
};

struct JacobiReport {
    Rational max_abs_numerator = Rational(0);
    std::array<std::size_t, 3> witness{0, 0, 0};

    bool holds() const { return max_abs_numerator == 0; }
};

// Exact cyclic-sum check over all basis triples. The residual magnitude is the
// largest coefficient numerator in absolute value; the witness is the first
// triple attaining it.
inline JacobiReport jacobi_residual(const GradedLieAlgebra& a) {
    JacobiReport rep;
    RatVector ei, ej, el;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j) {
            ei = zero_vector(a.dim);
            ei[i] = 1;
            ej = zero_vector(a.dim);
            ej[j] = 1;
            const RatVector bij = a.bracket_vectors(ei, ej);
            for (std::size_t l = j + 1; l < a.dim; ++l) {
                el = zero_vector(a.dim);
                el[l] = 1;
                RatVector res = a.bracket_vectors(el, bij);
                const RatVector bjl = a.bracket_vectors(ej, el);
                const RatVector bli = a.bracket_vectors(el, ei);
                const RatVector t1 = a.bracket_vectors(ei, bjl);
                const RatVector t2 = a.bracket_vectors(ej, bli);
                for (std::size_t m = 0; m < a.dim; ++m) res[m] += t1[m] + t2[m];
                for (const auto& v : res) {
                    Rational mag(abs(v.get_num()));
                    if (mag > rep.max_abs_numerator) {
                        rep.max_abs_numerator = mag;
                        rep.witness = {i, j, l};
                    }
                }
            }
        }
    return rep;
}

// Subspace of an algebra's underlying vector space, normalized to a reduced
// echelon basis so equality is coefficient-wise.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), rows_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<RatVector>& vecs) {
        RatMatrix m(vecs.size(), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            if (vecs[i].size() != ambient) throw std::invalid_argument("span: size mismatch");
            for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vecs[i][j];
        }
        Subspace s(ambient);
        const auto pivots = rref_inplace(m);
        s.rows_ = RatMatrix(pivots.size(), ambient);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) s.rows_.at(i, j) = m.at(i, j);
        s.pivots_ = pivots;
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.rows; }

    bool contains(const RatVector& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("contains: size mismatch");
        RatVector r = v;
        for (std::size_t i = 0; i < rows_.rows; ++i) {
            const Rational f = r[pivots_[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * rows_.at(i, j);
        }
        for (const auto& x : r)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        for (const auto& v : o.basis())
            if (!contains(v)) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("sum: ambient mismatch");
        std::vector<RatVector> vecs = basis();
        for (const auto& v : o.basis()) vecs.push_back(v);
        return span(ambient_, vecs);
    }

    std::vector<RatVector> basis() const {
        std::vector<RatVector> out;
        for (std::size_t i = 0; i < rows_.rows; ++i) {
            RatVector v(ambient_);
            for (std::size_t j = 0; j < ambient_; ++j) v[j] = rows_.at(i, j);
            out.push_back(std::move(v));
        }
        return out;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

  private:
    std::size_t ambient_;
    RatMatrix rows_;
    std::vector<std::size_t> pivots_;
};

inline Subspace bracket_space(const GradedLieAlgebra& a, const Subspace& s, const Subspace& t) {
    std::vector<RatVector> vecs;
    for (const auto& u : s.basis())
        for (const auto& v : t.basis()) vecs.push_back(a.bracket_vectors(u, v));
    return Subspace::span(a.dim, vecs);
}

// Growth vector of D^1 = d, D^{j+1} = D^j + [d, D^j]; strictly increasing
// dimensions until stabilization.
inline std::vector<std::size_t> weak_derived_flag(const GradedLieAlgebra& a, const Subspace& d) {
    std::vector<std::size_t> dims{d.dim()};
    Subspace cur = d;
    for (;;) {
        Subspace next = cur.sum(bracket_space(a, d, cur));
        if (next.dim() == cur.dim()) break;
        dims.push_back(next.dim());
        cur = next;
    }
    return dims;
}

inline bool square_check(const GradedLieAlgebra& a, const Subspace& sub, const Subspace& target) {
    return sub.sum(bracket_space(a, sub, sub)) == target;
}

struct DerivationSpace {
    std::size_t dimension = 0;
    std::vector<RatMatrix> basis;  // dim x dim matrices
};

// Derivations preserving the second bi-degree (the Tanaka degree): block maps
// D with D[x,y] = [Dx,y] + [x,Dy], solved exactly.
inline DerivationSpace degree_zero_derivations(const GradedLieAlgebra& a) {
    const std::size_t n = a.dim;
    // Unknowns: allowed matrix entries (r, c) with matching second bi-degree.
    std::vector<std::vector<long>> unknown_at(n, std::vector<long>(n, -1));
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (a.basis[r].bidegree.second == a.basis[c].bidegree.second) {
                unknown_at[r][c] = static_cast<long>(unknowns.size());
                unknowns.emplace_back(r, c);
            }

    std::vector<std::vector<std::vector<Term>>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        table[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) table[i][j] = a.bracket(i, j);
    }

    SparseEchelon ech;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // Coefficient rows over unknowns, one per output coordinate m:
            // sum_r B(r,j,m) D_{r,i} + sum_r B(i,r,m) D_{r,j} - sum_t c_t D_{m,k_t} = 0.
            std::map<std::size_t, std::map<std::size_t, Rational>> rows;
            for (std::size_t r = 0; r < n; ++r) {
                if (unknown_at[r][i] >= 0)
                    for (const auto& t : table[r][j])
                        rows[t.k][static_cast<std::size_t>(unknown_at[r][i])] += t.c;
                if (unknown_at[r][j] >= 0)
                    for (const auto& t : table[i][r])
                        rows[t.k][static_cast<std::size_t>(unknown_at[r][j])] += t.c;
            }
            for (const auto& t : table[i][j])
                for (std::size_t m = 0; m < n; ++m)
                    if (unknown_at[m][t.k] >= 0)
                        rows[m][static_cast<std::size_t>(unknown_at[m][t.k])] -= t.c;
            for (auto& [m, row] : rows) {
                (void)m;
                SparseEchelon::SparseRow sr;
                for (const auto& [idx, val] : row)
                    if (val != 0) sr.emplace_back(idx, val);
                if (!sr.empty()) ech.add(std::move(sr));
            }
        }

    const auto null_basis = nullspace(ech.densify(unknowns.size()));
    DerivationSpace out;
    out.dimension = null_basis.size();
    for (const auto& v : null_basis) {
        RatMatrix d(n, n);
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            d.at(unknowns[u].first, unknowns[u].second) = v[u];
        out.basis.push_back(std::move(d));
    }
    return out;
}

namespace detail {

inline GradedLieAlgebra nilpotent_model_shell(std::size_t k, long w,
                                              const std::map<std::pair<std::size_t, std::size_t>,
                                                             Rational>& c,
                                              bool table_n_signs) {
    // Basis x_0..x_k, y_1..y_k, z, n with the type-(k,w) bi-grading.
    GradedLieAlgebra m;
    m.dim = 2 * k + 3;
    for (std::size_t j = 0; j <= k; ++j)
        m.basis.push_back({"x" + std::to_string(j), {-static_cast<long>(j), -1}});
    for (std::size_t j = 1; j <= k; ++j)
        m.basis.push_back({"y" + std::to_string(j), {-(w + static_cast<long>(j) - 1), -2}});
    m.basis.push_back({"z", {-(w + static_cast<long>(k) - 1), -3}});
    m.basis.push_back({"n", {-(w + static_cast<long>(k)), -3}});
    const auto x = [](std::size_t j) { return j; };
    const auto y = [k](std::size_t j) { return k + j; };  // y_j at k + j
    const std::size_t z = 2 * k + 1, nn = 2 * k + 2;

    for (const auto& [ij, val] : c) {
        const long target = static_cast<long>(ij.first + ij.second) - w + 1;
        if (val == 0) continue;
        if (target < 1 || target > static_cast<long>(k))
            throw std::invalid_argument("c entry outside the y range");
        m.set_bracket(x(ij.first), x(ij.second),
                      {{y(static_cast<std::size_t>(target)), val}});
    }
    for (std::size_t i = 0; i + 1 <= k; ++i) {
        const Rational zs = (i % 2 == 0) ? 1 : -1;
        m.set_bracket(x(i), y(k - i), {{z, zs}});
        // n-pairing [x_{i+1}, y_{k-i}]: the frame convention gives
        // (-1)^i (i+1) n; the k=3/4/6 tables use the global flip n -> -n.
        Rational ns = zs * Rational(static_cast<long>(i) + 1);
        if (table_n_signs) ns = -ns;
        m.set_bracket(x(i + 1), y(k - i), {{nn, ns}});
    }
    return m;
}

}  // namespace detail

// Catalog of small closed models: symb(k), m7_3_3, and the golden k=3, 4, 6
// tables. All have Jacobi residual 0 and additive bidegrees.
inline GradedLieAlgebra builtin_model(const std::string& name) {
    const auto fail = [&name]() -> GradedLieAlgebra {
        throw std::invalid_argument("unknown builtin \"" + name +
                                    "\"; valid: symb(k), m7_3_3, k3, k4, k6");
    };
    if (name.rfind("symb(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(5, name.size() - 6);
        if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
            return fail();
        const std::size_t k = std::stoul(inner);
        if (k < 1) return fail();
        GradedLieAlgebra m;
        m.dim = 2 * k + 3;
        for (std::size_t j = 0; j <= k; ++j)
            m.basis.push_back({"x" + std::to_string(j), {-1, -1}});
        for (std::size_t j = 1; j <= k; ++j)
            m.basis.push_back({"y" + std::to_string(j), {-1, -1}});
        m.basis.push_back({"z", {-2, -2}});
        m.basis.push_back({"n", {-2, -2}});
        const std::size_t z = 2 * k + 1, nn = 2 * k + 2;
        for (std::size_t i = 0; i + 1 <= k; ++i) {
            m.set_bracket(i, k + (k - i), {{z, Rational(1)}});       // [x_i, y_{k-i}] = z
            m.set_bracket(i + 1, k + (k - i), {{nn, Rational(1)}});  // [x_{i+1}, y_{k-i}] = n
        }
        return m;
    }
    if (name == "m7_3_3") {
        GradedLieAlgebra m;
        m.dim = 7;
        m.basis = {{"x0", {-1, -1}}, {"x1", {-1, -1}}, {"x2", {-1, -1}}, {"y1", {-2, -2}},
                   {"y2", {-2, -2}}, {"z", {-3, -3}},  {"n", {-3, -3}}};
        m.set_bracket(0, 1, {{3, Rational(1)}});  // [x0,x1] = y1
        m.set_bracket(0, 2, {{4, Rational(1)}});  // [x0,x2] = y2
        m.set_bracket(0, 4, {{5, Rational(1)}});  // [x0,y2] = z
        m.set_bracket(1, 3, {{5, Rational(1)}});  // [x1,y1] = z
        m.set_bracket(1, 4, {{6, Rational(1)}});  // [x1,y2] = n
        m.set_bracket(2, 3, {{6, Rational(1)}});  // [x2,y1] = n
        return m;
    }
    std::map<std::pair<std::size_t, std::size_t>, Rational> c;
    std::size_t k = 0;
    if (name == "k3") {
        k = 3;
        c = {{{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 3}, {{1, 2}, -2}};
    } else if (name == "k4") {
        k = 4;
        c = {{{0, 1}, 1},          {{0, 2}, 1},          {{0, 3}, Rational(-3, 2)},
             {{0, 4}, -4},         {{1, 2}, Rational(5, 2)}, {{1, 3}, Rational(5, 2)}};
    } else if (name == "k6") {
        k = 6;
        c = {{{0, 1}, Rational(-10, 7)}, {{0, 2}, Rational(-10, 7)}, {{0, 3}, Rational(-3, 7)},
             {{0, 4}, Rational(4, 7)},   {{0, 5}, Rational(25, 7)},  {{0, 6}, Rational(60, 7)},
             {{1, 2}, -1},               {{1, 3}, -1},               {{1, 4}, -3},
             {{1, 5}, -5},               {{2, 3}, 2},                {{2, 4}, 2}};
    } else {
        return fail();
    }
    return detail::nilpotent_model_shell(k, 1, c, /*table_n_signs=*/true);
}

inline std::vector<std::string> builtin_model_names() {
    return {"symb(k)", "m7_3_3", "k3", "k4", "k6"};
}

// Span of the basis elements with second bi-degree -1 (the distribution
// direction); its weak derived flag is the model's growth vector.
inline Subspace degree_minus1_span(const GradedLieAlgebra& a) {
    std::vector<RatVector> vecs;
    for (std::size_t i = 0; i < a.dim; ++i)
        if (a.basis[i].bidegree.second == -1) {
            RatVector v = zero_vector(a.dim);
            v[i] = 1;
            vecs.push_back(std::move(v));
        }
    return Subspace::span(a.dim, vecs);
}

inline std::vector<std::size_t> growth_vector(const GradedLieAlgebra& a) {
    return weak_derived_flag(a, degree_minus1_span(a));
}

}  // namespace corank2
