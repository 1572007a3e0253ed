#pragma once

#include "x0star/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

// Brute-force references shared by the unit tests and the acceptance run.
namespace oracles {

using x0star::arith::i64;

inline std::tuple<i64, i64, i64> reduce_form(i64 a, i64 b, i64 c)
{
    while (true) {
        if (b > a) {
            c += a - b;
            b -= 2 * a;
            continue;
        }
        if (b <= -a) {
            c += a + b;
            b += 2 * a;
            continue;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (a == c && b < 0)
            b = -b;
        return {a, b, c};
    }
}

// Enumerates every primitive positive-definite form with bounded
// coefficients, reduces each by the classical algorithm and counts the
// distinct reduced representatives.
inline i64 class_number(i64 D)
{
    const i64 bound = -D;
    std::set<std::tuple<i64, i64, i64>> reps;
    for (i64 a = 1; a <= bound; ++a)
        for (i64 b = -bound; b <= bound; ++b) {
            const i64 num = b * b - D;
            if (num % (4 * a))
                continue;
            const i64 c = num / (4 * a);
            if (c < 1 || c > bound)
                continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1)
                continue;
            reps.insert(reduce_form(a, b, c));
        }
    return static_cast<i64>(reps.size());
}

// Genus of X_0(N) by Riemann-Hurwitz over PSL2(Z), with elliptic points and
// cusps counted from congruence solutions. Throws std::logic_error when the
// count is not integral.
inline i64 genus_x0(i64 N)
{
    i64 index = N;
    for (i64 p : x0star::arith::prime_factors(N))
        index = index / p * (p + 1);
    i64 e2 = 0, e3 = 0;
    for (i64 x = 0; x < N; ++x) {
        if ((x * x + 1) % N == 0)
            ++e2;
        if ((x * x + x + 1) % N == 0)
            ++e3;
    }
    i64 cusps = 0;
    for (i64 d : x0star::arith::divisors(N)) {
        const i64 g = std::gcd(d, N / d);
        i64 phi = g;
        for (i64 p : x0star::arith::prime_factors(g))
            phi = phi / p * (p - 1);
        cusps += phi;
    }
    const i64 twelve = 12 + index - 3 * e2 - 4 * e3 - 6 * cusps;
    if (twelve % 12)
        throw std::logic_error("non-integral genus count");
    return twelve / 12;
}

} // namespace oracles
