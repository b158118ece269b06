#include <catch2/catch_amalgamated.hpp>

#include <corank2/rational.hpp>

#include <stdexcept>

using namespace corank2;

TEST_CASE("rational string round trips") {
    CHECK(rat_to_string(Rational(0)) == "0");
    CHECK(rat_to_string(Rational(7)) == "7");
    CHECK(rat_to_string(Rational(-3, 2)) == "-3/2");
    CHECK(rat_to_string(Rational(4, 6)) == "2/3");

    for (const char* s : {"0", "7", "-3/2", "2/3", "123456789012345678901234567891/7"}) {
        CHECK(rat_to_string(rat_from_string(s)) == s);
    }
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1 "), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("/2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("2/"), std::invalid_argument);
}

TEST_CASE("integer binomials") {
    CHECK(binom(5, 2) == Rational(10));
    CHECK(binom(7, 0) == Rational(1));
    CHECK(binom(7, 7) == Rational(1));
    CHECK(binom(7, -1) == Rational(0));
    CHECK(binom(3, 5) == Rational(0));
    CHECK(binom(0, 0) == Rational(1));
}

TEST_CASE("rational upper-argument binomials") {
    CHECK(binom(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binom(Rational(-1), 3) == Rational(-1));
    CHECK(binom(Rational(5), 2) == Rational(10));
    CHECK(binom(Rational(1, 2), 0) == Rational(1));
    CHECK(binom(Rational(1, 2), -2) == Rational(0));
}

TEST_CASE("Pascal recurrence") {
    for (long n = 0; n <= 12; ++n) {
        for (long k = 1; k <= n; ++k) {
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
        }
    }
    // the recurrence also holds for rational upper argument
    const Rational a(7, 3);
    for (long k = 1; k <= 6; ++k) {
        CHECK(binom(a, k) == binom(a - 1, k - 1) + binom(a - 1, k));
    }
}

TEST_CASE("sign and absolute value") {
    CHECK(rat_sign(Rational(-5, 3)) == -1);
    CHECK(rat_sign(Rational(0)) == 0);
    CHECK(rat_sign(Rational(2)) == 1);
    CHECK(rat_abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(rat_abs(Rational(5, 3)) == Rational(5, 3));
}
