#include "novikov/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using novikov::BigInt;
using novikov::Rational;
using novikov::factorial;

TEST_CASE("rationals normalize and reduce") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3) == Rational(2));
    CHECK(Rational(1, -2).sign() < 0);
    CHECK(Rational(-3, -6) == Rational(1, 2));
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 7) / Rational(2, 21) == Rational(3, 2));
    // A sum that floating point cannot represent exactly.
    Rational tenth(1, 10);
    Rational sum(0);
    for (int i = 0; i < 10; ++i) {
        sum += tenth;
    }
    CHECK(sum == Rational(1));
    CHECK(sum.is_one());
}

TEST_CASE("rational predicates and formatting") {
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 9).is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(-5, 3).str() == "-5/3");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(4).abs().str() == "4");
    CHECK(Rational(-4).abs().str() == "4");
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("factorials are exact big integers") {
    CHECK(factorial(0) == BigInt(1));
    CHECK(factorial(1) == BigInt(1));
    CHECK(factorial(5) == BigInt(120));
    // 20! overflows 64-bit signed arithmetic by a factor of ~250.
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
    // The exact division used by exponential series coefficients.
    CHECK(Rational(BigInt(1), factorial(20)) * Rational(factorial(20)) == Rational(1));
}
