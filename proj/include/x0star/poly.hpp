#pragma once

#include "x0star/fp.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

// Dense univariate polynomials, coefficients ascending by degree. The zero
// polynomial is the empty vector.
namespace x0star::poly {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;
using FpPoly = std::vector<Fp>;

template <class T>
bool is_zero_coeff(const T& c)
{
    if constexpr (std::is_same_v<T, Fp>)
        return c.is_zero();
    else
        return c == 0;
}

template <class T>
void trim(std::vector<T>& a)
{
    while (!a.empty() && is_zero_coeff(a.back()))
        a.pop_back();
}

template <class T>
int degree(const std::vector<T>& a)
{
    return static_cast<int>(a.size()) - 1;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zpow(const ZPoly& a, unsigned e);
QPoly to_q(const ZPoly& a);

QPoly qmul(const QPoly& a, const QPoly& b);
QPoly qsub(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
mpq_class eval(const QPoly& a, const mpq_class& x);
// Quotient and remainder; b must be nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
QPoly make_monic(QPoly a);
// Number of distinct complex roots of a nonzero polynomial.
int distinct_root_count(const QPoly& a);
bool is_squarefree(const QPoly& a);
// Distinct real roots in the half-open interval (lo, hi], by Sturm sequences.
int real_root_count(const QPoly& a, const mpq_class& lo, const mpq_class& hi);
// True when every complex root t of c is real with t^2 <= bound.
bool roots_real_within(const ZPoly& c, const mpq_class& bound);
// Res(a, b) for nonzero a, b over Q.
mpq_class resultant(const QPoly& a, const QPoly& b);

// Lagrange interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_gcd(FpPoly a, FpPoly b);
bool fp_is_squarefree(const FpPoly& a);

std::string to_string(const ZPoly& a, const std::string& var = "x");
std::string to_string(const QPoly& a, const std::string& var = "x");

} // namespace x0star::poly
