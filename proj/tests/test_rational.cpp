#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gnp/rational.hpp"

using gnp::Int;
using gnp::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);

    // denominator is always positive
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(3, -6).num() == -1);

    // zero is 0/1
    CHECK(Rational(0, 5).num() == 0);
    CHECK(Rational(0, 5).den() == 1);

    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational ordering and sign") {
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3).sign() == 1);
    CHECK(Rational(-7, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(5).is_integer());
    CHECK(!Rational(5, 3).is_integer());
}

TEST_CASE("rational arithmetic is exact") {
    // property: (a+b)-b == a and (a*b)/b == a, including huge operands
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    Int big = 1;
    for (int i = 0; i < 5; ++i) big *= 1000000007L;

    for (int trial = 0; trial < 200; ++trial) {
        Rational a(Int(num(rng)) * big + num(rng), Int(den(rng)) * big + den(rng));
        Rational b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("rational division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("17/20257") == Rational(17, 20257));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(!Rational::parse("1/0").has_value());
    CHECK(!Rational::parse("abc").has_value());
    CHECK(!Rational::parse("").has_value());

    CHECK(Rational(-61, 49).str() == "-61/49");
    CHECK(Rational(42).str() == "42");
}

TEST_CASE("rational div_pow2") {
    CHECK(Rational(1, 3).div_pow2(2) == Rational(1, 12));
    CHECK(Rational(5).div_pow2(0) == Rational(5));
    CHECK(Rational(1).div_pow2(64) * Rational(Int(1) << 64) == Rational(1));
}

TEST_CASE("binomial against a Pascal-triangle oracle") {
    // oracle: build rows by addition only
    std::vector<std::vector<Int>> pascal{{1}};
    for (int r = 1; r <= 30; ++r) {
        std::vector<Int> row(r + 1, Int(1));
        for (int k = 1; k < r; ++k) row[k] = pascal[r - 1][k - 1] + pascal[r - 1][k];
        pascal.push_back(row);
    }
    for (long r = 0; r <= 30; ++r)
        for (long k = 0; k <= r; ++k) CHECK(gnp::binomial(r, k) == pascal[r][k]);

    CHECK(gnp::binomial(5, 2) == 10);
    CHECK(gnp::binomial(7, 0) == 1);
    CHECK(gnp::binomial(3, -1) == 0);
    CHECK(gnp::binomial(3, 4) == 0);
    CHECK_THROWS_AS(gnp::binomial(-1, 0), std::invalid_argument);
}
