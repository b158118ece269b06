#pragma once

#include <corank2/liealg.hpp>
#include <corank2/matrix.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace corank2 {

// A frame algebra located by its labels: the string x_0..x_k with raising
// element E, grading pair a, b, and optionally the extra element c.
struct FrameAlgebra {
    GradedLieAlgebra alg;
    std::size_t k = 0;
    std::vector<std::size_t> x;  // x_0..x_k
    std::size_t E = 0, a = 0, b = 0;
    std::optional<std::size_t> c;
};

inline FrameAlgebra frame_algebra(const GradedLieAlgebra& g) {
    FrameAlgebra f;
    f.alg = g;
    while (true) {
        bool found = false;
        for (std::size_t i = 0; i < g.dim; ++i)
            if (g.basis[i].label == "x" + std::to_string(f.x.size())) {
                f.x.push_back(i);
                found = true;
                break;
            }
        if (!found) break;
    }
    if (f.x.size() < 2) throw std::invalid_argument("frame_algebra: no x string");
    f.k = f.x.size() - 1;
    f.E = g.index_of("E");
    f.a = g.index_of("a");
    f.b = g.index_of("b");
    for (std::size_t i = 0; i < g.dim; ++i)
        if (g.basis[i].label == "c") f.c = i;
    return f;
}

inline RatVector unit_vector(std::size_t dim, std::size_t i) {
    RatVector v = zero_vector(dim);
    v[i] = 1;
    return v;
}

struct FlagL {
    std::vector<Subspace> spaces;     // L_0..L_k
    std::vector<std::size_t> dims;
    bool complete = false;            // dims are 2, 3, ..., k+2
};

// L_0 = span{E, x_0}, L_{i+1} = L_i + [E, L_i].
inline FlagL filtration_L(const FrameAlgebra& f) {
    FlagL out;
    const std::size_t n = f.alg.dim;
    const Subspace spanE = Subspace::span(n, {unit_vector(n, f.E)});
    Subspace cur = Subspace::span(n, {unit_vector(n, f.E), unit_vector(n, f.x[0])});
    out.spaces.push_back(cur);
    out.dims.push_back(cur.dim());
    for (std::size_t i = 0; i < f.k; ++i) {
        cur = cur.sum(bracket_space(f.alg, spanE, cur));
        out.spaces.push_back(cur);
        out.dims.push_back(cur.dim());
    }
    out.complete = true;
    for (std::size_t i = 0; i < out.dims.size(); ++i)
        if (out.dims[i] != i + 2) out.complete = false;
    return out;
}

inline Subspace h_space(const FrameAlgebra& f) {
    std::vector<RatVector> vecs{unit_vector(f.alg.dim, f.E)};
    for (const std::size_t xi : f.x) vecs.push_back(unit_vector(f.alg.dim, xi));
    return Subspace::span(f.alg.dim, vecs);
}

// A_r = H + span{[L_s, L_t] : s + t <= r}.
inline Subspace a_space(const FrameAlgebra& f, const FlagL& flag, std::size_t r) {
    Subspace acc = h_space(f);
    for (std::size_t s = 0; s <= f.k && s <= r; ++s)
        for (std::size_t t = s; t <= f.k && s + t <= r; ++t)
            acc = acc.sum(bracket_space(f.alg, flag.spaces[s], flag.spaces[t]));
    return acc;
}

struct WReport {
    std::size_t w = 0;
    std::size_t dim_aw_mod_h = 0;
    Subspace a_w;

    explicit WReport(std::size_t ambient) : a_w(ambient) {}
};

// First weight r at which the bracket filtration leaves H.
inline WReport w_invariant(const FrameAlgebra& f) {
    const FlagL flag = filtration_L(f);
    const Subspace h = h_space(f);
    WReport rep(f.alg.dim);
    for (std::size_t r = 1; r + 1 <= 2 * f.k; ++r) {
        const Subspace ar = a_space(f, flag, r);
        if (ar.dim() > h.dim()) {
            rep.w = r;
            rep.dim_aw_mod_h = ar.dim() - h.dim();
            rep.a_w = ar;
            return rep;
        }
    }
    throw std::runtime_error("integrable sub-distribution: no bracket leaves H");
}

// Smallest i with A_w inside K_i = H + span{G, ad_E G, ..., ad_E^{i-1} G},
// G = [x_0, x_w].
inline std::size_t i_invariant(const FrameAlgebra& f, const WReport& wrep) {
    if (wrep.w >= f.x.size())
        throw std::runtime_error("w exceeds the x string; no pivot bracket [x0, xw]");
    const std::size_t n = f.alg.dim;
    RatVector g = f.alg.bracket_vectors(unit_vector(n, f.x[0]), unit_vector(n, f.x[wrep.w]));
    Subspace cur = h_space(f);
    const RatVector ve = unit_vector(n, f.E);
    for (std::size_t i = 1; i <= f.k + 1; ++i) {
        cur = cur.sum(Subspace::span(n, {g}));
        if (cur.contains(wrep.a_w)) return i;
        g = f.alg.bracket_vectors(ve, g);
    }
    throw std::runtime_error("A_w not reached by the ad_E tower on [x0, xw]");
}

inline std::size_t i_invariant(const FrameAlgebra& f) { return i_invariant(f, w_invariant(f)); }

struct InvariantReport {
    std::size_t k = 0;
    std::size_t w = 0;
    std::size_t i = 0;
    std::vector<std::size_t> flag_l_dims;
    std::size_t dim_aw_mod_h = 0;
};

inline InvariantReport invariant_report(const FrameAlgebra& f) {
    InvariantReport rep;
    rep.k = f.k;
    const FlagL flag = filtration_L(f);
    rep.flag_l_dims = flag.dims;
    const WReport wrep = w_invariant(f);
    rep.w = wrep.w;
    rep.dim_aw_mod_h = wrep.dim_aw_mod_h;
    rep.i = i_invariant(f, wrep);
    return rep;
}

}  // namespace corank2
