#pragma once

#include <cstdint>
#include <vector>

namespace x0star::arith {

using i64 = std::int64_t;

// Positive square-free integer together with its prime factorization.
class SquarefreeLevel {
public:
    // Throws std::invalid_argument unless n >= 1 is square-free.
    explicit SquarefreeLevel(i64 n);

    i64 value() const { return value_; }
    const std::vector<i64>& primes() const { return primes_; }
    int omega() const { return static_cast<int>(primes_.size()); }
    bool is_odd() const { return value_ % 2 != 0; }
    bool divisible_by(i64 p) const { return value_ % p == 0; }

    // Sorted ascending, including 1 and value().
    std::vector<i64> divisors() const;

    friend bool operator==(const SquarefreeLevel&, const SquarefreeLevel&) = default;
    friend auto operator<=>(const SquarefreeLevel& a, const SquarefreeLevel& b) { return a.value_ <=> b.value_; }

private:
    i64 value_;
    std::vector<i64> primes_;
};

int moebius(i64 n);
bool is_squarefree(i64 n);
bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 bound);
// Distinct prime factors, ascending; trial division.
std::vector<i64> prime_factors(i64 n);
std::vector<i64> divisors(i64 n);
int three_adic_valuation(i64 n);
i64 dedekind_psi(const SquarefreeLevel& n);

// Legendre symbol (-d / p) for an odd prime p; 0 when p | d.
int kronecker_at_prime(i64 d, i64 p);

i64 ipow(i64 base, int exp);

} // namespace x0star::arith
