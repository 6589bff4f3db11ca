#include <catch2/catch_amalgamated.hpp>

#include <hilex/numeric.hpp>

using namespace hilex;

TEST_CASE("double factorial")
{
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(8) == 384);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("mobius values")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(49) == 0);
    CHECK_THROWS_AS(mobius(0), std::domain_error);
}

TEST_CASE("mobius divisor sums vanish away from 1")
{
    for (int n = 1; n <= 60; ++n) {
        int s = 0;
        for (int d : divisors(n)) {
            s += mobius(d);
        }
        INFO("n = " << n);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("rational formatting round-trips")
{
    CHECK(to_string(Rational(3, 8)) == "3/8");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("-3/8") == Rational(-3, 8));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(to_integer(Rational(6, 3)) == 2);
    CHECK_THROWS(to_integer(Rational(1, 2)));
}
