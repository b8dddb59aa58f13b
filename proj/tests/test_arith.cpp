#include <doctest.h>

#include "blockforge/arith.hpp"

using namespace blockforge;

TEST_CASE("ipow and overflow")
{
    CHECK(ipow(3, 0) == 1);
    CHECK(ipow(3, 10) == 59049);
    CHECK(ipow(2, 100) == checked_mul(ipow(2, 50), ipow(2, 50)));
    CHECK_THROWS_AS(ipow(10, 60), std::overflow_error);
    CHECK_THROWS_AS(ipow(2, -1), std::invalid_argument);
}

TEST_CASE("int128 printing")
{
    CHECK(to_string(int128(0)) == "0");
    CHECK(to_string(int128(-59049)) == "-59049");
    CHECK(to_string(ipow(10, 20)) == "100000000000000000000");
}

TEST_CASE("primality by trial division")
{
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(999983));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
    CHECK(!is_prime(999981));
}

TEST_CASE("rational arithmetic stays exact")
{
    Rational r(8, 3);
    CHECK((r / Rational(2)).floor() == 1);
    CHECK((r * Rational(3)).as_integer() == 8);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational::power(3, -1) == Rational(1, 3));
    CHECK((Rational(1, 3) + Rational(2, 3)).as_integer() == 1);
    CHECK_THROWS_AS(Rational(8, 3).as_integer(), consistency_error);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("multiplicative orders and primitive roots")
{
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(8, 9) == 2);
    CHECK(least_primitive_root(3, 2) == 2);
    CHECK(least_primitive_root(5, 2) == 2);
    CHECK(least_primitive_root(7, 2) == 3);
    CHECK(powmod(least_primitive_root(11, 2), 110, 121) == 1);
    CHECK(multiplicative_order(least_primitive_root(11, 2), 121) == 110);
}
