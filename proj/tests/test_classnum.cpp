#include "x0star/classnum.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

using namespace x0star;
using namespace x0star::classnum;
using arith::i64;
using arith::SquarefreeLevel;

TEST_CASE("class number examples")
{
    CHECK(class_number(Discriminant(-3)) == 1);
    CHECK(class_number(Discriminant(-4)) == 1);
    CHECK(class_number(Discriminant(-23)) == 3);
    CHECK(class_number(Discriminant(-20)) == 2);
    CHECK_THROWS_AS(Discriminant(5), std::invalid_argument);
    CHECK_THROWS_AS(Discriminant(-6), std::invalid_argument);
}

TEST_CASE("property: class numbers match the exhaustive reduction oracle for |D| <= 500")
{
    for (i64 D = -3; D >= -500; --D) {
        const i64 r = ((D % 4) + 4) % 4;
        if (r != 0 && r != 1)
            continue;
        INFO("D = " << D);
        REQUIRE(class_number_uncached(Discriminant(D)) == oracles::class_number(D));
    }
}

TEST_CASE("property: h(-4d) versus h(-d) for d = 3 mod 4")
{
    for (i64 d = 7; d <= 1000; d += 4) {
        if (!arith::is_squarefree(d))
            continue;
        const i64 h4 = class_number(Discriminant(-4 * d));
        const i64 h1 = class_number(Discriminant(-d));
        INFO("d = " << d);
        if (d % 8 == 7)
            REQUIRE(h4 == h1);
        else
            REQUIRE(h4 == 3 * h1);
    }
}

TEST_CASE("property: class number upper bound")
{
    for (i64 D = -7; D >= -12012; --D) {
        const i64 r = ((D % 4) + 4) % 4;
        if (r != 0 && r != 1)
            continue;
        const double a = static_cast<double>(-D);
        REQUIRE(static_cast<double>(class_number(Discriminant(D))) <= std::sqrt(a) * std::log(a) / M_PI);
    }
}

TEST_CASE("table sweep agrees with direct enumeration")
{
    const ClassNumberTable table(5000);
    for (i64 D = -3; D >= -5000; --D) {
        const i64 r = ((D % 4) + 4) % 4;
        if (r != 0 && r != 1)
            continue;
        REQUIRE(table(D) == class_number_uncached(Discriminant(D)));
    }
}

TEST_CASE("nu_self examples")
{
    CHECK(nu_self(5, false) == 2);
    CHECK(nu_self(7, false) == 2);
    CHECK(nu_self(7, true) == 4);
    CHECK_THROWS(nu_self(3, false));
}

TEST_CASE("nu dispatch examples")
{
    CHECK(nu(SquarefreeLevel(10), 2).count == 2);
    CHECK(nu(SquarefreeLevel(15), 3).count == 0);
    // (-5/11) = -1 gives a zero local factor
    CHECK(nu(SquarefreeLevel(55), 5).count == 0);
    CHECK_THROWS(nu(SquarefreeLevel(15), 7));
    CHECK_THROWS(nu(SquarefreeLevel(15), 1));
}

TEST_CASE("cache is shared and mergeable")
{
    ClassNumberCache cache;
    CHECK(cache.get(Discriminant(-23)) == 3);
    CHECK(cache.size() == 1);
    ClassNumberCache other;
    other.merge(cache.snapshot());
    CHECK(other.size() == 1);
    other.clear();
    CHECK(other.size() == 0);
}
