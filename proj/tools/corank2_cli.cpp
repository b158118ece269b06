#include <corank2/bigraded.hpp>
#include <corank2/invariants.hpp>
#include <corank2/json_io.hpp>
#include <corank2/liealg.hpp>
#include <corank2/pencil.hpp>
#include <corank2/sl2rep.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using corank2::json;

struct Output {
    bool pretty = false;
    std::string out_path;

    int emit(const json& j, const std::string& pretty_text) const {
        const std::string bytes = pretty ? pretty_text : corank2::dump_json(j);
        std::fputs(bytes.c_str(), stdout);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot open output file " + out_path);
            f << bytes;
        }
        return 0;
    }
};

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path);
    json j;
    f >> j;
    return j;
}

long max_k_guard() {
    if (const char* env = std::getenv("CORANK2_MAX_K")) {
        const std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("CORANK2_MAX_K must be a nonnegative integer");
        return std::stol(s);
    }
    return 14;
}

std::string growth_text(const std::vector<std::size_t>& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(g[i]);
    }
    return s + ")";
}

int run_classify(std::size_t k, const Output& out) {
    json rows = json::array();
    std::ostringstream pretty;
    pretty << "k = " << k << "\n  w    d   family_dim\n";
    for (std::size_t w = 1; w + 1 <= 2 * k; w += 2) {
        const auto fam = corank2::solve_family(k, w);
        json row;
        row["w"] = w;
        row["d"] = fam.d;
        row["family_dim"] = fam.family_dim;
        row["empty"] = (fam.family_dim < 0);
        rows.push_back(std::move(row));
        pretty << "  " << w << "    " << fam.d << "   "
               << (fam.family_dim < 0 ? std::string("empty")
                                      : std::to_string(fam.family_dim))
               << "\n";
    }
    json j;
    j["k"] = k;
    j["rows"] = std::move(rows);
    return out.emit(j, pretty.str());
}

int run_family(std::size_t k, std::size_t w, const Output& out) {
    const auto fam = corank2::solve_family(k, w);
    std::ostringstream pretty;
    pretty << "type (" << k << ", " << w << "): d = " << fam.d
           << ", family_dim = " << fam.family_dim << "\n";
    if (fam.normalized_c) {
        pretty << "normalized structure constants (c_{0," << w << "} = 1):\n";
        for (const auto& [ij, v] : fam.normalized_c->entries)
            pretty << "  c_{" << ij.first << "," << ij.second << "} = "
                   << corank2::rat_to_string(v) << "\n";
    } else {
        pretty << "empty family\n";
    }
    return out.emit(corank2::family_to_json(fam), pretty.str());
}

json algebra_checks(const corank2::GradedLieAlgebra& a, bool& ok) {
    const auto rep = corank2::jacobi_residual(a);
    const bool additive = a.bidegrees_additive();
    const auto growth = corank2::growth_vector(a);
    ok = rep.holds() && additive;
    json j;
    j["dim"] = a.dim;
    j["jacobi_residual_zero"] = rep.holds();
    j["bidegree_additive"] = additive;
    j["growth"] = growth;
    j["verified"] = ok;
    return j;
}

int run_verify_algebra(const corank2::GradedLieAlgebra& a, const std::string& name,
                       const Output& out) {
    bool ok = false;
    json j = algebra_checks(a, ok);
    if (!name.empty()) {
        json named;
        named["name"] = name;
        for (auto& [key, val] : j.items()) named[key] = val;
        j = std::move(named);
    }
    std::ostringstream pretty;
    pretty << (name.empty() ? std::string("algebra") : name) << ": dim " << a.dim
           << ", jacobi " << (j["jacobi_residual_zero"].get<bool>() ? "0" : "nonzero")
           << ", bidegrees " << (j["bidegree_additive"].get<bool>() ? "additive" : "BROKEN")
           << ", growth " << growth_text(j["growth"].get<std::vector<std::size_t>>()) << "\n";
    out.emit(j, pretty.str());
    return ok ? 0 : 1;
}

int run_verify_family(const json& in, const Output& out) {
    const auto stored = corank2::family_from_json(in);
    const auto fresh = corank2::solve_family(stored.k, stored.w);
    json checks;
    checks["d"] = (stored.d == fresh.d);
    checks["solution_space_dim"] = (stored.hom_basis.size() == fresh.oracle_dim);
    bool span_ok = stored.hom_basis.size() == fresh.oracle_dim;
    if (span_ok && !fresh.hom_basis.empty()) {
        const auto space =
            corank2::Subspace::span(fresh.hom_basis[0].size(), fresh.hom_basis);
        for (const auto& v : stored.hom_basis)
            if (v.size() != space.ambient() || !space.contains(v)) span_ok = false;
    }
    checks["solution_space"] = span_ok;
    checks["family_dim"] = (stored.family_dim == fresh.family_dim);
    bool normalized_ok = true;
    if (stored.normalized_c.has_value() != fresh.normalized_c.has_value()) {
        normalized_ok = false;
    } else if (stored.normalized_c) {
        normalized_ok = stored.normalized_c->get(0, static_cast<long>(stored.w)) == 1;
        const corank2::RatVector v = corank2::support_vector_of(*stored.normalized_c);
        const corank2::RatMatrix sys = corank2::jacobi_system(stored.k, stored.w);
        for (std::size_t r = 0; r < sys.rows && normalized_ok; ++r) {
            corank2::Rational acc(0);
            for (std::size_t t = 0; t < sys.cols; ++t) acc += sys.at(r, t) * v[t];
            if (acc != 0) normalized_ok = false;
        }
        if (normalized_ok)
            normalized_ok =
                corank2::compare_projective(*stored.normalized_c, *fresh.normalized_c)
                    .equivalent;
    }
    checks["normalized_point"] = normalized_ok;

    bool ok = normalized_ok && span_ok;
    for (const auto& [key, val] : checks.items()) {
        (void)key;
        if (val.is_boolean() && !val.get<bool>()) ok = false;
    }
    json j;
    j["k"] = stored.k;
    j["w"] = stored.w;
    if (fresh.family_dim < 0) j["empty_family"] = true;
    j["checks"] = std::move(checks);
    j["verified"] = ok;
    std::ostringstream pretty;
    pretty << "family (" << stored.k << ", " << stored.w << "): "
           << (ok ? "verified" : "MISMATCH") << "\n";
    out.emit(j, pretty.str());
    return ok ? 0 : 1;
}

int run_verify(const std::string& in_path, const std::string& builtin, const Output& out) {
    if ((in_path.empty()) == (builtin.empty()))
        throw std::invalid_argument("verify needs exactly one of --in or --builtin");
    if (!builtin.empty())
        return run_verify_algebra(corank2::builtin_model(builtin), builtin, out);
    const json j = read_json_file(in_path);
    if (j.is_object() && j.contains("hom_basis")) return run_verify_family(j, out);
    if (j.is_object() && j.contains("brackets"))
        return run_verify_algebra(corank2::algebra_from_json(j), "", out);
    throw std::invalid_argument("verify: input is neither a family nor an algebra");
}

int run_pencil(const std::string& in_path, long k_flag, const Output& out) {
    if ((in_path.empty()) == (k_flag < 0))
        throw std::invalid_argument("pencil needs exactly one of --in or --k");
    const corank2::SkewPencil p =
        in_path.empty() ? corank2::symbol_pencil(static_cast<std::size_t>(k_flag))
                        : corank2::pencil_from_json(read_json_file(in_path));
    const std::size_t idx = corank2::kronecker_index(p);
    const auto g1 = corank2::g1_check(p);
    json j;
    j["k"] = p.k;
    j["kronecker_index"] = idx;
    j["g1"] = corank2::g1_to_json(g1);
    std::ostringstream pretty;
    pretty << "pencil on " << 2 * p.k + 1 << " dims: kronecker index " << idx << ", g1 "
           << (g1.g1_holds ? "holds" : "fails") << " (rank " << g1.tilde_d_dim << ")\n";
    return out.emit(j, pretty.str());
}

int run_sl2(std::size_t k, long l, const Output& out) {
    json reports = json::array();
    std::ostringstream pretty;
    const auto vk = corank2::irreducible(k);
    const auto report = [&](const corank2::SL2Module& m) {
        const auto parts = corank2::decompose(m);
        reports.push_back(corank2::decomposition_to_json(m.name, parts));
        pretty << m.name << " =";
        for (const auto& p : parts)
            pretty << " V_" << p.highest_weight
                   << (p.multiplicity > 1 ? "^" + std::to_string(p.multiplicity) : "");
        pretty << "\n";
    };
    report(corank2::wedge2(vk));
    if (l >= 0) report(corank2::tensor(vk, corank2::irreducible(static_cast<std::size_t>(l))));
    json j;
    j["k"] = k;
    if (l >= 0) j["l"] = l;
    j["reports"] = std::move(reports);
    return out.emit(j, pretty.str());
}

int run_invariants(std::size_t k, std::size_t w, const Output& out) {
    const auto fam = corank2::solve_family(k, w);
    if (!fam.normalized_c) {
        json j;
        j["k"] = k;
        j["w"] = w;
        j["empty_family"] = true;
        std::ostringstream pretty;
        pretty << "type (" << k << ", " << w << "): empty family\n";
        return out.emit(j, pretty.str());
    }
    const auto frame = corank2::frame_algebra(corank2::assemble_frame(*fam.normalized_c));
    const auto rep = corank2::invariant_report(frame);
    std::ostringstream pretty;
    pretty << "k = " << rep.k << ", w = " << rep.w << ", i = " << rep.i << ", flag L dims ";
    pretty << growth_text(rep.flag_l_dims) << "\n";
    return out.emit(corank2::invariants_to_json(rep), pretty.str());
}

int run_builtin(const std::string& name, const Output& out) {
    const auto a = corank2::builtin_model(name);
    std::ostringstream pretty;
    pretty << name << ": dim " << a.dim << ", " << a.brackets.size()
           << " bracket entries\n";
    return out.emit(corank2::algebra_to_json(a), pretty.str());
}

int run_sweep(std::size_t kmax, const Output& out) {
    if (static_cast<long>(kmax) > max_k_guard())
        throw std::invalid_argument("sweep kmax exceeds CORANK2_MAX_K (" +
                                    std::to_string(max_k_guard()) + ")");
    json rows = json::array();
    std::size_t mismatches = 0;
    std::ostringstream pretty;
    pretty << "  k    w    d   dim   agree\n";
    for (std::size_t k = 3; k <= kmax; ++k)
        for (std::size_t w = 1; w + 1 <= 2 * k; w += 2) {
            const auto fam = corank2::solve_family(k, w);
            const long expected = fam.d + 1 > 0 ? fam.d + 1 : 0;
            const bool agree = static_cast<long>(fam.oracle_dim) == expected &&
                               (fam.d < 0 || fam.family_dim == fam.d);
            if (!agree) ++mismatches;
            json row;
            row["k"] = k;
            row["w"] = w;
            row["d"] = fam.d;
            row["oracle_dim"] = fam.oracle_dim;
            row["agree"] = agree;
            row["extended_frame"] = (k % 4 == 1 && 2 * w == k + 1);
            rows.push_back(std::move(row));
            pretty << "  " << k << "    " << w << "    " << fam.d << "   " << fam.oracle_dim
                   << "   " << (agree ? "yes" : "NO") << "\n";
        }
    json j;
    j["kmax"] = kmax;
    j["rows"] = std::move(rows);
    j["mismatches"] = mismatches;
    pretty << "mismatches: " << mismatches << "\n";
    out.emit(j, pretty.str());
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of corank-2 distributions with maximal first "
                 "Kronecker index"};
    app.require_subcommand(1);

    Output out;
    long k = -1, w = -1, l = -1, kmax = -1;
    std::string in_path, builtin_name;

    const auto add_common = [&out](CLI::App* cmd) {
        cmd->add_flag("--pretty", out.pretty, "human-readable table output");
        cmd->add_option("--out", out.out_path, "also write the output to this file");
    };

    auto* c_classify = app.add_subcommand("classify", "family table for one k");
    c_classify->add_option("--k", k, "string length")->required()->check(CLI::PositiveNumber);
    add_common(c_classify);

    auto* c_family = app.add_subcommand("family", "solve the type-(k, w) family");
    c_family->add_option("--k", k, "string length")->required()->check(CLI::PositiveNumber);
    c_family->add_option("--w", w, "first jump weight")->required()->check(CLI::PositiveNumber);
    add_common(c_family);

    auto* c_verify = app.add_subcommand("verify", "re-check a family or algebra");
    c_verify->add_option("--in", in_path, "family or algebra JSON file");
    c_verify->add_option("--builtin", builtin_name, "builtin model name");
    add_common(c_verify);

    auto* c_pencil = app.add_subcommand("pencil", "kronecker index and kernel curve");
    c_pencil->add_option("--in", in_path, "pencil JSON file");
    c_pencil->add_option("--k", k, "analyze the type-(k, w) symbol pencil")
        ->check(CLI::PositiveNumber);
    add_common(c_pencil);

    auto* c_sl2 = app.add_subcommand("sl2", "decompositions of wedge and tensor modules");
    c_sl2->add_option("--k", k, "module V_k")->required()->check(CLI::PositiveNumber);
    c_sl2->add_option("--l", l, "also decompose V_k x V_l")->check(CLI::NonNegativeNumber);
    add_common(c_sl2);

    auto* c_inv = app.add_subcommand("invariants", "frame invariants of the normalized model");
    c_inv->add_option("--k", k, "string length")->required()->check(CLI::PositiveNumber);
    c_inv->add_option("--w", w, "first jump weight")->required()->check(CLI::PositiveNumber);
    add_common(c_inv);

    auto* c_builtin = app.add_subcommand("builtin", "print a builtin model");
    c_builtin->add_option("--builtin", builtin_name, "model name")->required();
    add_common(c_builtin);

    auto* c_sweep = app.add_subcommand("sweep", "dimension bookkeeping over a k range");
    c_sweep->add_option("--kmax", kmax, "largest k")->required()->check(CLI::PositiveNumber);
    add_common(c_sweep);

    try {
        app.parse(argc, argv);
        if (c_classify->parsed()) return run_classify(static_cast<std::size_t>(k), out);
        if (c_family->parsed())
            return run_family(static_cast<std::size_t>(k), static_cast<std::size_t>(w), out);
        if (c_verify->parsed()) return run_verify(in_path, builtin_name, out);
        if (c_pencil->parsed()) return run_pencil(in_path, k, out);
        if (c_sl2->parsed()) return run_sl2(static_cast<std::size_t>(k), l, out);
        if (c_inv->parsed())
            return run_invariants(static_cast<std::size_t>(k), static_cast<std::size_t>(w), out);
        if (c_builtin->parsed()) return run_builtin(builtin_name, out);
        if (c_sweep->parsed()) return run_sweep(static_cast<std::size_t>(kmax), out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
