#include <catch2/catch_amalgamated.hpp>

#include <corank2/bigraded.hpp>
#include <corank2/invariants.hpp>

#include <stdexcept>
#include <string>
#include <vector>

using namespace corank2;

namespace {

FrameAlgebra frame_of(std::size_t k, std::size_t w) {
    const TypeKWFamily fam = solve_family(k, w);
    REQUIRE(fam.normalized_c.has_value());
    return frame_algebra(assemble_frame(*fam.normalized_c));
}

}  // namespace

TEST_CASE("frame location by labels") {
    const FrameAlgebra f = frame_of(3, 1);
    CHECK(f.k == 3);
    CHECK(f.x == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(f.alg.basis[f.E].label == "E");
    CHECK(f.alg.basis[f.a].label == "a");
    CHECK(f.alg.basis[f.b].label == "b");
    CHECK_FALSE(f.c.has_value());

    const FrameAlgebra g = frame_of(5, 3);
    REQUIRE(g.c.has_value());
    CHECK(g.alg.basis[*g.c].label == "c");

    CHECK_THROWS_AS(frame_algebra(builtin_model("k3")), std::invalid_argument);
}

TEST_CASE("filtration by powers of the raising element") {
    const FrameAlgebra f = frame_of(3, 1);
    const FlagL flag = filtration_L(f);
    CHECK(flag.dims == std::vector<std::size_t>{2, 3, 4, 5});
    CHECK(flag.complete);
    for (std::size_t i = 0; i <= 3; ++i) {
        CHECK(flag.spaces[i].contains(unit_vector(f.alg.dim, f.E)));
        for (std::size_t j = 0; j <= i; ++j)
            CHECK(flag.spaces[i].contains(unit_vector(f.alg.dim, f.x[j])));
    }
    CHECK(h_space(f).dim() == 5);
}

TEST_CASE("full invariant report on the k = 3 point") {
    const InvariantReport rep = invariant_report(frame_of(3, 1));
    CHECK(rep.k == 3);
    CHECK(rep.w == 1);
    CHECK(rep.i == 1);
    CHECK(rep.dim_aw_mod_h == 1);
    CHECK(rep.flag_l_dims == std::vector<std::size_t>{2, 3, 4, 5});
}

TEST_CASE("weight invariant matches the lowest nonzero anti-diagonal") {
    CHECK(invariant_report(frame_of(4, 1)).w == 1);
    CHECK(invariant_report(frame_of(6, 1)).w == 1);
    CHECK(invariant_report(frame_of(5, 3)).w == 3);
    CHECK(invariant_report(frame_of(8, 3)).w == 3);
}

TEST_CASE("depth invariant is 1 on the solved families") {
    for (auto [k, w] : {std::pair<std::size_t, std::size_t>{4, 1}, {6, 1}, {5, 3}, {8, 3}}) {
        INFO("k = " << k << ", w = " << w);
        const FrameAlgebra f = frame_of(k, w);
        const WReport wrep = w_invariant(f);
        CHECK(wrep.dim_aw_mod_h == 1);
        CHECK(i_invariant(f, wrep) == 1);
        CHECK(i_invariant(f) == 1);
    }
}

TEST_CASE("vanishing structure constants give no invariant") {
    CMatrix zero;
    zero.k = 3;
    zero.w = 1;
    const FrameAlgebra f = frame_algebra(assemble_frame(zero));
    try {
        w_invariant(f);
        FAIL("expected the integrable case to be rejected");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("integrable") != std::string::npos);
    }
}
