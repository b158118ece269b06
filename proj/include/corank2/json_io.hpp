#pragma once

#include <corank2/bigraded.hpp>
#include <corank2/invariants.hpp>
#include <corank2/liealg.hpp>
#include <corank2/pencil.hpp>
#include <corank2/sl2rep.hpp>

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace corank2 {

using json = nlohmann::ordered_json;

inline json rat_to_json(const Rational& r) { return rat_to_string(r); }

inline Rational rat_from_json(const json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

inline json vector_to_json(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

inline RatVector vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    RatVector v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

inline json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RatMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty matrix");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw std::invalid_argument("expected matrix rows as arrays");
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat_from_json(j[r][c]);
    }
    return m;
}

// ---------------------------------------------------------------------------

inline json pencil_to_json(const SkewPencil& p) {
    json j;
    j["k"] = p.k;
    j["A1"] = matrix_to_json(p.A1);
    j["A2"] = matrix_to_json(p.A2);
    return j;
}

inline SkewPencil pencil_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("A1") || !j.contains("A2"))
        throw std::invalid_argument("pencil JSON needs k, A1, A2");
    if (!j["k"].is_number_unsigned() && !j["k"].is_number_integer())
        throw std::invalid_argument("pencil k must be an integer");
    const long k = j["k"].get<long>();
    if (k < 1) throw std::invalid_argument("pencil k must be >= 1");
    return make_pencil(static_cast<std::size_t>(k), matrix_from_json(j["A1"]),
                       matrix_from_json(j["A2"]));
}

// ---------------------------------------------------------------------------

inline json algebra_to_json(const GradedLieAlgebra& a) {
    json j;
    j["dim"] = a.dim;
    json basis = json::array();
    for (const auto& b : a.basis) {
        json e;
        e["label"] = b.label;
        e["bidegree"] = json::array({b.bidegree.first, b.bidegree.second});
        basis.push_back(std::move(e));
    }
    j["basis"] = std::move(basis);
    json brackets = json::array();
    for (const auto& [ij, terms] : a.brackets) {
        json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        json ts = json::array();
        for (const auto& t : terms) {
            json te;
            te["k"] = t.k;
            te["c"] = rat_to_json(t.c);
            ts.push_back(std::move(te));
        }
        e["terms"] = std::move(ts);
        brackets.push_back(std::move(e));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

inline GradedLieAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("basis") || !j.contains("brackets"))
        throw std::invalid_argument("algebra JSON needs dim, basis, brackets");
    GradedLieAlgebra a;
    a.dim = j["dim"].get<std::size_t>();
    if (!j["basis"].is_array() || j["basis"].size() != a.dim)
        throw std::invalid_argument("algebra basis must list dim elements");
    for (const auto& e : j["basis"]) {
        if (!e.contains("label") || !e.contains("bidegree") || !e["bidegree"].is_array() ||
            e["bidegree"].size() != 2)
            throw std::invalid_argument("basis element needs label and bidegree [p, q]");
        a.basis.push_back({e["label"].get<std::string>(),
                           {e["bidegree"][0].get<long>(), e["bidegree"][1].get<long>()}});
    }
    if (!j["brackets"].is_array()) throw std::invalid_argument("brackets must be an array");
    for (const auto& e : j["brackets"]) {
        if (!e.contains("i") || !e.contains("j") || !e.contains("terms"))
            throw std::invalid_argument("bracket entry needs i, j, terms");
        const std::size_t i = e["i"].get<std::size_t>();
        const std::size_t jj = e["j"].get<std::size_t>();
        if (i >= a.dim || jj >= a.dim || i == jj)
            throw std::invalid_argument("bracket indices out of range");
        std::vector<Term> terms;
        for (const auto& t : e["terms"]) {
            const std::size_t k = t["k"].get<std::size_t>();
            if (k >= a.dim) throw std::invalid_argument("bracket target out of range");
            terms.push_back({k, rat_from_json(t["c"])});
        }
        a.set_bracket(i, jj, std::move(terms));
    }
    return a;
}

// ---------------------------------------------------------------------------

inline json cmatrix_to_json(const CMatrix& c) {
    json arr = json::array();
    for (const auto& [i, j] : support_pairs(c.k, c.w)) {
        json e;
        e["i"] = i;
        e["j"] = j;
        e["c"] = rat_to_json(c.get(static_cast<long>(i), static_cast<long>(j)));
        arr.push_back(std::move(e));
    }
    return arr;
}

inline CMatrix cmatrix_from_json(std::size_t k, std::size_t w, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("structure constants must be an array");
    CMatrix c;
    c.k = k;
    c.w = w;
    for (const auto& e : j) {
        if (!e.contains("i") || !e.contains("j") || !e.contains("c"))
            throw std::invalid_argument("structure constant entry needs i, j, c");
        const Rational v = rat_from_json(e["c"]);
        if (v != 0) c.set(e["i"].get<std::size_t>(), e["j"].get<std::size_t>(), v);
    }
    return c;
}

inline json family_to_json(const TypeKWFamily& f) {
    json j;
    j["k"] = f.k;
    j["w"] = f.w;
    j["d"] = f.d;
    j["family_dim"] = f.family_dim;
    if (f.normalized_c)
        j["normalized_c"] = cmatrix_to_json(*f.normalized_c);
    else
        j["normalized_c"] = nullptr;
    json hb = json::array();
    for (const auto& v : f.hom_basis) hb.push_back(vector_to_json(v));
    j["hom_basis"] = std::move(hb);
    return j;
}

inline TypeKWFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("w") || !j.contains("hom_basis"))
        throw std::invalid_argument("family JSON needs k, w, hom_basis");
    TypeKWFamily f;
    f.k = j["k"].get<std::size_t>();
    f.w = j["w"].get<std::size_t>();
    f.d = j.contains("d") ? j["d"].get<long>() : d_kw(f.k, f.w);
    f.family_dim = j.contains("family_dim") ? j["family_dim"].get<long>() : -1;
    for (const auto& v : j["hom_basis"]) f.hom_basis.push_back(vector_from_json(v));
    f.oracle_dim = f.hom_basis.size();
    if (j.contains("normalized_c") && !j["normalized_c"].is_null())
        f.normalized_c = cmatrix_from_json(f.k, f.w, j["normalized_c"]);
    return f;
}

// ---------------------------------------------------------------------------

inline json decomposition_to_json(const std::string& source,
                                  const std::vector<IsotypicPart>& parts) {
    json j;
    j["source"] = source;
    json ps = json::array();
    for (const auto& p : parts) {
        json e;
        e["highest_weight"] = p.highest_weight;
        e["multiplicity"] = p.multiplicity;
        ps.push_back(std::move(e));
    }
    j["parts"] = std::move(ps);
    return j;
}

inline json g1_to_json(const G1Report& r) {
    json j;
    j["g1_holds"] = r.g1_holds;
    j["tilde_d_dim"] = r.tilde_d_dim;
    j["real_kernel_everywhere_1dim"] = r.real_kernel_everywhere_1dim;
    j["degenerate"] = r.degenerate;
    return j;
}

inline json invariants_to_json(const InvariantReport& r) {
    json j;
    j["k"] = r.k;
    j["w"] = r.w;
    j["i"] = r.i;
    j["flagL_dims"] = r.flag_l_dims;
    return j;
}

// Deterministic byte output: compact dump plus trailing newline.
inline std::string dump_json(const json& j) { return j.dump() + "\n"; }

}  // namespace corank2
