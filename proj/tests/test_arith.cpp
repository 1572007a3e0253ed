#include "x0star/arith.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace x0star::arith;

TEST_CASE("moebius examples")
{
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
}

TEST_CASE("dedekind psi examples")
{
    CHECK(dedekind_psi(SquarefreeLevel(1)) == 1);
    CHECK(dedekind_psi(SquarefreeLevel(97)) == 98);
    CHECK(dedekind_psi(SquarefreeLevel(645)) == 1056);
}

TEST_CASE("kronecker at odd primes")
{
    CHECK(kronecker_at_prime(1, 5) == 1);
    CHECK(kronecker_at_prime(1, 3) == -1);
    CHECK(kronecker_at_prime(3, 3) == 0);
    CHECK(kronecker_at_prime(2, 5) == -1);
    CHECK(kronecker_at_prime(-1, 7) == 1);
}

TEST_CASE("divisors and 3-adic valuation")
{
    CHECK(divisors(6) == std::vector<i64>{1, 2, 3, 6});
    CHECK(three_adic_valuation(645) == 1);
    CHECK(three_adic_valuation(97) == 0);
    CHECK(three_adic_valuation(81 * 2) == 4);
}

TEST_CASE("square-free level rejects non square-free input")
{
    CHECK_THROWS_AS(SquarefreeLevel(12), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeLevel(0), std::invalid_argument);
    const SquarefreeLevel n(645);
    CHECK(n.primes() == std::vector<i64>{3, 5, 43});
    CHECK(n.omega() == 3);
    CHECK(n.divisors().size() == 8);
}

TEST_CASE("property: moebius sums over divisors")
{
    for (i64 n = 1; n <= 10000; ++n) {
        int s = 0;
        for (i64 d : divisors(n))
            s += moebius(d);
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("property: psi is multiplicative and psi(p) = p + 1")
{
    for (i64 p : primes_up_to(2000))
        REQUIRE(dedekind_psi(SquarefreeLevel(p)) == p + 1);
    for (i64 a = 1; a <= 120; ++a) {
        if (!is_squarefree(a))
            continue;
        for (i64 b = 1; b <= 120; ++b) {
            if (!is_squarefree(b) || std::gcd(a, b) != 1)
                continue;
            REQUIRE(dedekind_psi(SquarefreeLevel(a * b)) ==
                    dedekind_psi(SquarefreeLevel(a)) * dedekind_psi(SquarefreeLevel(b)));
        }
    }
}

TEST_CASE("property: kronecker squared detects divisibility")
{
    for (i64 p : primes_up_to(200)) {
        if (p == 2)
            continue;
        for (i64 d = -300; d <= 300; ++d) {
            const int k = kronecker_at_prime(d, p);
            REQUIRE((k * k == 1) == (d % p != 0));
        }
    }
}

TEST_CASE("kronecker agrees with brute-force squares")
{
    for (i64 p : {3, 5, 7, 11, 13, 43, 101}) {
        for (i64 d = 1; d < 3 * p; ++d) {
            const i64 r = ((-d) % p + p) % p;
            if (r == 0)
                continue;
            bool square = false;
            for (i64 x = 1; x < p; ++x)
                square = square || (x * x % p == r);
            REQUIRE(kronecker_at_prime(d, p) == (square ? 1 : -1));
        }
    }
}
