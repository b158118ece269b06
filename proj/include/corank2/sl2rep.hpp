#pragma once

#include <corank2/bigraded.hpp>
#include <corank2/liealg.hpp>
#include <corank2/matrix.hpp>
#include <corank2/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace corank2 {

// Finite-dimensional sl2 module with a diagonal weight basis:
// h v = weights[v] v, f lowers the weight by 2, e raises it by 2.
struct SL2Module {
    std::string name;
    std::size_t dim = 0;
    RatMatrix e, f, h;
    std::vector<long> weights;
};

// V_k on v_0..v_k: h v_i = (k-2i) v_i, f v_i = v_{i+1}, e v_i = i(k-i+1) v_{i-1}.
inline SL2Module irreducible(std::size_t k) {
    SL2Module m;
    m.name = "V_" + std::to_string(k);
    m.dim = k + 1;
    m.e = RatMatrix(m.dim, m.dim);
    m.f = RatMatrix(m.dim, m.dim);
    m.h = RatMatrix(m.dim, m.dim);
    m.weights.resize(m.dim);
    for (std::size_t i = 0; i <= k; ++i) {
        m.weights[i] = static_cast<long>(k) - 2 * static_cast<long>(i);
        m.h.at(i, i) = m.weights[i];
        if (i + 1 <= k) m.f.at(i + 1, i) = 1;
        if (i >= 1)
            m.e.at(i - 1, i) =
                Rational(static_cast<long>(i) * (static_cast<long>(k - i) + 1));
    }
    return m;
}

inline SL2Module tensor(const SL2Module& a, const SL2Module& b) {
    SL2Module m;
    m.name = a.name + "x" + b.name;
    m.dim = a.dim * b.dim;
    m.e = RatMatrix(m.dim, m.dim);
    m.f = RatMatrix(m.dim, m.dim);
    m.h = RatMatrix(m.dim, m.dim);
    m.weights.resize(m.dim);
    const auto add_op = [&](const RatMatrix& oa, const RatMatrix& ob, RatMatrix& out) {
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) {
                const std::size_t c = i * b.dim + j;
                for (std::size_t r = 0; r < a.dim; ++r)
                    if (oa.at(r, i) != 0) out.at(r * b.dim + j, c) += oa.at(r, i);
                for (std::size_t s = 0; s < b.dim; ++s)
                    if (ob.at(s, j) != 0) out.at(i * b.dim + s, c) += ob.at(s, j);
            }
    };
    add_op(a.e, b.e, m.e);
    add_op(a.f, b.f, m.f);
    add_op(a.h, b.h, m.h);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) m.weights[i * b.dim + j] = a.weights[i] + b.weights[j];
    return m;
}

inline SL2Module wedge2(const SL2Module& a) {
    SL2Module m;
    m.name = "w2(" + a.name + ")";
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pidx;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j) {
            pidx[{i, j}] = pairs.size();
            pairs.emplace_back(i, j);
        }
    m.dim = pairs.size();
    m.e = RatMatrix(m.dim, m.dim);
    m.f = RatMatrix(m.dim, m.dim);
    m.h = RatMatrix(m.dim, m.dim);
    m.weights.resize(m.dim);
    const auto emit = [&](RatMatrix& out, std::size_t c, std::size_t p, std::size_t q,
                          const Rational& v) {
        if (p == q) return;
        if (p < q)
            out.at(pidx[{p, q}], c) += v;
        else
            out.at(pidx[{q, p}], c) -= v;
    };
    const auto add_op = [&](const RatMatrix& op, RatMatrix& out) {
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            const auto [i, j] = pairs[c];
            for (std::size_t r = 0; r < a.dim; ++r) {
                if (op.at(r, i) != 0) emit(out, c, r, j, op.at(r, i));
                if (op.at(r, j) != 0) emit(out, c, i, r, op.at(r, j));
            }
        }
    };
    add_op(a.e, m.e);
    add_op(a.f, m.f);
    add_op(a.h, m.h);
    for (std::size_t c = 0; c < pairs.size(); ++c)
        m.weights[c] = a.weights[pairs[c].first] + a.weights[pairs[c].second];
    return m;
}

inline SL2Module wedge3(const SL2Module& a) {
    SL2Module m;
    m.name = "w3(" + a.name + ")";
    std::vector<std::array<std::size_t, 3>> triples;
    std::map<std::array<std::size_t, 3>, std::size_t> tidx;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            for (std::size_t l = j + 1; l < a.dim; ++l) {
                tidx[{i, j, l}] = triples.size();
                triples.push_back({i, j, l});
            }
    m.dim = triples.size();
    m.e = RatMatrix(m.dim, m.dim);
    m.f = RatMatrix(m.dim, m.dim);
    m.h = RatMatrix(m.dim, m.dim);
    m.weights.resize(m.dim);
    const auto emit = [&](RatMatrix& out, std::size_t c, std::array<std::size_t, 3> t,
                          const Rational& v) {
        // sort with sign
        int sgn = 1;
        if (t[0] > t[1]) {
            std::swap(t[0], t[1]);
            sgn = -sgn;
        }
        if (t[1] > t[2]) {
            std::swap(t[1], t[2]);
            sgn = -sgn;
        }
        if (t[0] > t[1]) {
            std::swap(t[0], t[1]);
            sgn = -sgn;
        }
        if (t[0] == t[1] || t[1] == t[2]) return;
        out.at(tidx[t], c) += (sgn > 0) ? v : -v;
    };
    const auto add_op = [&](const RatMatrix& op, RatMatrix& out) {
        for (std::size_t c = 0; c < triples.size(); ++c) {
            const auto t = triples[c];
            for (std::size_t slot = 0; slot < 3; ++slot)
                for (std::size_t r = 0; r < a.dim; ++r)
                    if (op.at(r, t[slot]) != 0) {
                        auto u = t;
                        u[slot] = r;
                        emit(out, c, u, op.at(r, t[slot]));
                    }
        }
    };
    add_op(a.e, m.e);
    add_op(a.f, m.f);
    add_op(a.h, m.h);
    for (std::size_t c = 0; c < triples.size(); ++c)
        m.weights[c] =
            a.weights[triples[c][0]] + a.weights[triples[c][1]] + a.weights[triples[c][2]];
    return m;
}

struct IsotypicPart {
    long highest_weight = 0;
    std::size_t multiplicity = 0;
};

// Isotypic decomposition by weight counting: mult of V_l is
// dim(weight l) - dim(weight l+2).
inline std::vector<IsotypicPart> decompose(const SL2Module& m) {
    std::map<long, long> cnt;
    for (const long w : m.weights) ++cnt[w];
    std::vector<IsotypicPart> out;
    for (auto it = cnt.rbegin(); it != cnt.rend(); ++it) {
        const long l = it->first;
        if (l < 0) break;
        const long up = cnt.count(l + 2) ? cnt.at(l + 2) : 0;
        const long mult = it->second - up;
        if (mult < 0) throw std::logic_error("weight counts not unimodal");
        if (mult > 0) out.push_back({l, static_cast<std::size_t>(mult)});
    }
    return out;
}

// Number of unordered triples of pairwise distinct odd integers in [-k, k]
// summing to l.
inline std::size_t n_count(std::size_t k, long l) {
    const long kk = static_cast<long>(k);
    std::size_t cnt = 0;
    for (long a = -kk; a <= kk; a += 2)
        for (long b = a + 2; b <= kk; b += 2)
            for (long c = b + 2; c <= kk; c += 2)
                if (a + b + c == l) ++cnt;
    return cnt;
}

inline std::size_t wedge3_multiplicity(std::size_t k, long l) {
    if (k % 2 == 0) throw std::invalid_argument("wedge3_multiplicity: odd k required");
    const std::size_t hi = n_count(k, l), up = n_count(k, l + 2);
    if (up > hi) throw std::logic_error("triple counts not unimodal");
    return hi - up;
}

// Projection onto the multiplicity-one component of highest weight lambda,
// expressed in the f-string basis of that component. Equivariant by
// construction; throws when the multiplicity is not one.
inline RatMatrix cg_projection(const SL2Module& src, long lambda) {
    std::map<long, std::vector<std::size_t>> by_weight;
    for (std::size_t i = 0; i < src.dim; ++i) by_weight[src.weights[i]].push_back(i);
    const auto cnt = [&by_weight](long w) -> long {
        const auto it = by_weight.find(w);
        return it == by_weight.end() ? 0 : static_cast<long>(it->second.size());
    };
    const long target_mult = cnt(lambda) - cnt(lambda + 2);
    if (target_mult != 1)
        throw std::invalid_argument("cg_projection: component of weight " +
                                    std::to_string(lambda) + " has multiplicity " +
                                    std::to_string(target_mult < 0 ? 0 : target_mult));

    RatMatrix t(src.dim, src.dim);
    std::size_t col = 0;
    std::size_t target_start = 0;
    for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
        const long mu = it->first;
        if (mu < 0) break;
        const long mult = cnt(mu) - cnt(mu + 2);
        if (mult <= 0) continue;
        // highest-weight space: kernel of e restricted to the weight space
        const auto& cols = it->second;
        RatMatrix restricted(src.dim, cols.size());
        for (std::size_t ci = 0; ci < cols.size(); ++ci)
            for (std::size_t r = 0; r < src.dim; ++r) restricted.at(r, ci) = src.e.at(r, cols[ci]);
        const auto hw_coords = nullspace(restricted);
        if (hw_coords.size() != static_cast<std::size_t>(mult))
            throw std::logic_error("highest-weight space has unexpected dimension");
        for (const auto& coord : hw_coords) {
            RatVector v = zero_vector(src.dim);
            for (std::size_t ci = 0; ci < cols.size(); ++ci) v[cols[ci]] = coord[ci];
            for (const auto& entry : v)
                if (entry != 0) {
                    const Rational lead = entry;
                    for (auto& x : v) x /= lead;
                    break;
                }
            if (mu == lambda) target_start = col;
            for (long step = 0; step <= mu; ++step) {
                for (std::size_t r = 0; r < src.dim; ++r) t.at(r, col) = v[r];
                ++col;
                if (step < mu) v = mat_vec(src.f, v);
            }
        }
    }
    if (col != src.dim) throw std::logic_error("adapted basis is not complete");
    const RatMatrix tinv = invert_matrix(t);
    RatMatrix p(static_cast<std::size_t>(lambda) + 1, src.dim);
    for (std::size_t r = 0; r <= static_cast<std::size_t>(lambda); ++r)
        for (std::size_t c = 0; c < src.dim; ++c) p.at(r, c) = tinv.at(target_start + r, c);
    return p;
}

// The (2k+3)-dimensional algebra V_k + V_{k-1} + V_1 with brackets given by
// the projections wedge2(V_k) -> V_{k-1} and V_k x V_{k-1} -> V_1; closes
// exactly when k = 1 mod 4, where wedge3(V_k) has no V_1 component.
inline GradedLieAlgebra build_mk(std::size_t k) {
    if (k % 4 != 1)
        throw std::invalid_argument(
            "build_mk: wedge2(V_k) has a V_{k-1} component only for k = 1 mod 4");
    const SL2Module vk = irreducible(k);
    const SL2Module vk1 = irreducible(k - 1);
    const RatMatrix tau = cg_projection(wedge2(vk), static_cast<long>(k) - 1);
    const RatMatrix sigma = cg_projection(tensor(vk, vk1), 1);
    const long w = (static_cast<long>(k) + 1) / 2;

    GradedLieAlgebra m;
    m.dim = 2 * k + 3;
    for (std::size_t j = 0; j <= k; ++j)
        m.basis.push_back({"x" + std::to_string(j), {-static_cast<long>(j), -1}});
    for (std::size_t j = 0; j < k; ++j)
        m.basis.push_back({"u" + std::to_string(j), {-(w + static_cast<long>(j)), -2}});
    m.basis.push_back({"s0", {-(w + static_cast<long>(k) - 1), -3}});
    m.basis.push_back({"s1", {-(w + static_cast<long>(k)), -3}});

    std::size_t pcol = 0;
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j, ++pcol) {
            std::vector<Term> terms;
            for (std::size_t r = 0; r < k; ++r)
                if (tau.at(r, pcol) != 0) terms.push_back({k + 1 + r, tau.at(r, pcol)});
            if (!terms.empty()) m.set_bracket(i, j, std::move(terms));
        }
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t u = 0; u < k; ++u) {
            const std::size_t tcol = i * k + u;
            std::vector<Term> terms;
            for (std::size_t r = 0; r < 2; ++r)
                if (sigma.at(r, tcol) != 0) terms.push_back({2 * k + 1 + r, sigma.at(r, tcol)});
            if (!terms.empty()) m.set_bracket(i, k + 1 + u, std::move(terms));
        }
    return m;
}

// Reads structure constants back from a build_mk algebra through
// y_1 = [x_0, x_w] = mu u_0, y_{j+1} = f y_j.
inline CMatrix extract_c(const GradedLieAlgebra& m) {
    if (m.dim < 7 || m.dim % 2 == 0)
        throw std::invalid_argument("extract_c: expected an algebra of dimension 2k+3");
    const std::size_t k = (m.dim - 3) / 2;
    const std::size_t w = (k + 1) / 2;
    if (2 * w != k + 1) throw std::invalid_argument("extract_c: k must be odd");
    const std::size_t u0 = m.index_of("u0");
    const auto y1 = m.bracket(m.index_of("x0"), m.index_of("x" + std::to_string(w)));
    if (y1.size() != 1 || y1[0].k != u0 || y1[0].c == 0)
        throw std::runtime_error("extract_c: [x0, xw] does not span the first u line");
    const Rational mu = y1[0].c;

    CMatrix c;
    c.k = k;
    c.w = w;
    for (const auto& [i, j] : support_pairs(k, w)) {
        const auto terms = m.bracket(m.index_of("x" + std::to_string(i)),
                                     m.index_of("x" + std::to_string(j)));
        if (terms.empty()) continue;
        const std::size_t expect = m.index_of("u" + std::to_string(i + j - w));
        if (terms.size() != 1 || terms[0].k != expect)
            throw std::runtime_error("extract_c: bracket leaves its weight line");
        c.set(i, j, terms[0].c / mu);
    }
    return c;
}

}  // namespace corank2
