#include <catch2/catch_amalgamated.hpp>

#include <corank2/json_io.hpp>

#include <stdexcept>
#include <string>

using namespace corank2;

TEST_CASE("rational JSON forms") {
    CHECK(rat_to_json(Rational(-3, 2)) == json("-3/2"));
    CHECK(rat_to_json(Rational(4)) == json("4"));
    CHECK(rat_from_json(json("5/3")) == Rational(5, 3));
    CHECK(rat_from_json(json(7)) == Rational(7));
    CHECK_THROWS_AS(rat_from_json(json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_json(json("1.5")), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("vector and matrix JSON round trips") {
    const RatVector v{Rational(1), Rational(-2, 3), Rational(0)};
    CHECK(vector_from_json(vector_to_json(v)) == v);
    CHECK_THROWS_AS(vector_from_json(json::object()), std::invalid_argument);

    RatMatrix m(2, 3);
    m.at(0, 1) = Rational(5, 7);
    m.at(1, 2) = Rational(-4);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1, 2], [3]])")), std::invalid_argument);
}

TEST_CASE("pencil JSON round trip") {
    const SkewPencil p = symbol_pencil(2);
    const SkewPencil q = pencil_from_json(pencil_to_json(p));
    CHECK(q.k == p.k);
    CHECK(q.A1 == p.A1);
    CHECK(q.A2 == p.A2);

    CHECK_THROWS_AS(pencil_from_json(json::parse(R"({"k": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(pencil_from_json(json::parse(R"({"k": 0, "A1": [[0]], "A2": [[0]]})")),
                    std::invalid_argument);
    // non-skew matrices are rejected
    CHECK_THROWS_AS(
        pencil_from_json(json::parse(
            R"({"k": 1, "A1": [[1,0,0],[0,0,0],[0,0,0]], "A2": [[0,0,0],[0,0,0],[0,0,0]]})")),
        std::invalid_argument);
}

TEST_CASE("algebra JSON round trip") {
    const GradedLieAlgebra a = builtin_model("k3");
    const json j = algebra_to_json(a);
    const GradedLieAlgebra b = algebra_from_json(j);
    CHECK(b.dim == a.dim);
    REQUIRE(b.basis.size() == a.basis.size());
    for (std::size_t i = 0; i < a.dim; ++i) {
        CHECK(b.basis[i].label == a.basis[i].label);
        CHECK(b.basis[i].bidegree == a.basis[i].bidegree);
    }
    CHECK(b.brackets == a.brackets);

    // deterministic byte output
    CHECK(dump_json(algebra_to_json(a)) == dump_json(algebra_to_json(builtin_model("k3"))));
}

TEST_CASE("malformed algebra JSON") {
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2})")), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(json::parse(
                        R"({"dim": 2, "basis": [{"label": "e", "bidegree": [0, 0]}],
                            "brackets": []})")),
                    std::invalid_argument);
    const std::string base = R"({"dim": 2,
        "basis": [{"label": "e0", "bidegree": [0, 0]}, {"label": "e1", "bidegree": [0, 0]}],)";
    CHECK_THROWS_AS(
        algebra_from_json(json::parse(
            base + R"("brackets": [{"i": 0, "j": 5, "terms": []}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        algebra_from_json(json::parse(
            base + R"("brackets": [{"i": 1, "j": 1, "terms": []}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        algebra_from_json(json::parse(
            base + R"("brackets": [{"i": 0, "j": 1, "terms": [{"k": 7, "c": "1"}]}]})")),
        std::invalid_argument);
}

TEST_CASE("family JSON round trip") {
    const TypeKWFamily f = solve_family(3, 1);
    const TypeKWFamily g = family_from_json(family_to_json(f));
    CHECK(g.k == f.k);
    CHECK(g.w == f.w);
    CHECK(g.d == f.d);
    CHECK(g.family_dim == f.family_dim);
    CHECK(g.oracle_dim == f.oracle_dim);
    REQUIRE(g.hom_basis.size() == f.hom_basis.size());
    CHECK(g.hom_basis[0] == f.hom_basis[0]);
    REQUIRE(g.normalized_c.has_value());
    CHECK(support_vector_of(*g.normalized_c) == support_vector_of(*f.normalized_c));

    const TypeKWFamily empty = family_from_json(family_to_json(solve_family(2, 1)));
    CHECK(empty.family_dim == -1);
    CHECK_FALSE(empty.normalized_c.has_value());

    const TypeKWFamily pos = family_from_json(family_to_json(solve_family(7, 1)));
    CHECK(pos.hom_basis.size() == 2);
    CHECK(pos.family_dim == 1);

    CHECK_THROWS_AS(family_from_json(json::parse(R"({"k": 3})")), std::invalid_argument);
}

TEST_CASE("structure constant serialization lists the whole support") {
    CMatrix c;
    c.k = 4;
    c.w = 1;
    c.set(0, 1, Rational(1));
    const json arr = cmatrix_to_json(c);
    CHECK(arr.size() == support_pairs(4, 1).size());
    // entries never set are serialized explicitly as zero
    bool found = false;
    for (const auto& e : arr)
        if (e["i"] == 1 && e["j"] == 3) {
            found = true;
            CHECK(e["c"] == json("0"));
        }
    CHECK(found);
    const CMatrix back = cmatrix_from_json(4, 1, arr);
    CHECK(support_vector_of(back) == support_vector_of(c));
}

TEST_CASE("report serializers") {
    const G1Report g1 = g1_check(symbol_pencil(2));
    const json j = g1_to_json(g1);
    CHECK(j["g1_holds"] == json(true));
    CHECK(j["tilde_d_dim"] == json(3));
    CHECK(j["degenerate"] == json(false));

    InvariantReport rep;
    rep.k = 3;
    rep.w = 1;
    rep.i = 1;
    rep.flag_l_dims = {2, 3, 4, 5};
    const json ji = invariants_to_json(rep);
    CHECK(ji["flagL_dims"] == json::array({2, 3, 4, 5}));

    const std::string dumped = dump_json(json::object({{"a", 1}}));
    CHECK(dumped == "{\"a\":1}\n");
}
