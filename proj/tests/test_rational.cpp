#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "padicteich/rational.hpp"

using padicteich::rational;

TEST_CASE("rational arithmetic reduces and normalizes", "[rational]") {
    REQUIRE(rational(6, 8) == rational(3, 4));
    REQUIRE(rational(3, -4) == rational(-3, 4));
    REQUIRE(rational(1, 4) + rational(1, 6) == rational(5, 12));
    REQUIRE(rational(1, 4) - rational(1, 6) == rational(1, 12));
    REQUIRE(rational(3, 4) * rational(2, 9) == rational(1, 6));
    REQUIRE(rational(3, 4) / rational(9, 2) == rational(1, 6));
    REQUIRE(-rational(1, 3) == rational(-1, 3));
}

TEST_CASE("rational comparison and printing", "[rational]") {
    REQUIRE(rational(1, 3) < rational(1, 2));
    REQUIRE(rational(-1, 2) < rational(1, 3));
    REQUIRE(rational(5, 6).str() == "5/6");
    REQUIRE(rational(-2).str() == "-2");
    REQUIRE(rational(4, 2).str() == "2");
}

TEST_CASE("rational error paths", "[rational]") {
    REQUIRE_THROWS_AS(rational(1, 0), padicteich::division_by_zero);
    REQUIRE_THROWS_AS(rational(1) / rational(0), padicteich::division_by_zero);
}

TEST_CASE("rational p-power helper", "[rational]") {
    REQUIRE(rational::pow_int(5, 3) == rational(125));
    REQUIRE(rational::pow_int(5, -2) == rational(1, 25));
    REQUIRE(rational::pow_int(5, 0) == rational(1));
}

TEST_CASE("rational random sum/product identities", "[rational][property]") {
    std::mt19937_64 rng(20240801);
    for (int i = 0; i < 200; ++i) {
        auto draw = [&]() {
            std::int64_t n = static_cast<std::int64_t>(rng() % 2001) - 1000;
            std::int64_t d = static_cast<std::int64_t>(rng() % 999) + 1;
            return rational(n, d);
        };
        rational a = draw(), b = draw(), c = draw();
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}
