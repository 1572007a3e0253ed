#include "x0star/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace x0star::arith {

namespace {

struct Factor {
    i64 p;
    int e;
};

std::vector<Factor> factorize(i64 n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
    std::vector<Factor> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

} // namespace

SquarefreeLevel::SquarefreeLevel(i64 n) : value_(n)
{
    if (n < 1)
        throw std::invalid_argument("level must be positive, got " + std::to_string(n));
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            throw std::invalid_argument("level " + std::to_string(n) + " is not square-free");
        primes_.push_back(p);
    }
}

std::vector<i64> SquarefreeLevel::divisors() const
{
    std::vector<i64> out{1};
    for (i64 p : primes_) {
        const auto k = out.size();
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(out[i] * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(i64 n)
{
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

bool is_squarefree(i64 n) { return n >= 1 && moebius(n) != 0; }

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

std::vector<i64> primes_up_to(i64 bound)
{
    std::vector<i64> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (i64 i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (i64 j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

std::vector<i64> prime_factors(i64 n)
{
    std::vector<i64> out;
    for (auto f : factorize(n))
        out.push_back(f.p);
    return out;
}

std::vector<i64> divisors(i64 n)
{
    std::vector<i64> out{1};
    for (auto [p, e] : factorize(n)) {
        const auto k = out.size();
        i64 pk = 1;
        for (int j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < k; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int three_adic_valuation(i64 n)
{
    if (n == 0)
        throw std::invalid_argument("three_adic_valuation(0)");
    int v = 0;
    while (n % 3 == 0) {
        n /= 3;
        ++v;
    }
    return v;
}

i64 dedekind_psi(const SquarefreeLevel& n)
{
    i64 r = 1;
    for (i64 p : n.primes())
        r *= p + 1;
    return r;
}

int kronecker_at_prime(i64 d, i64 p)
{
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("kronecker_at_prime: p must be an odd prime");
    i64 a = ((-d) % p + p) % p;
    if (a == 0)
        return 0;
    // Euler's criterion.
    i64 r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1)
            r = static_cast<i64>((__int128)r * b % p);
        b = static_cast<i64>((__int128)b * b % p);
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

i64 ipow(i64 base, int exp)
{
    i64 r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace x0star::arith
