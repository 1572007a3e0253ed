#pragma once

#include "x0star/nfdata.hpp"
#include "x0star/poly.hpp"

#include <gmpxx.h>

#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace x0star::frobenius {

using arith::i64;
using nfdata::NewformOrbit;

struct FrobeniusData {
    std::vector<std::string> orbit_set; // orbit ids
    i64 p = 0;
    poly::ZPoly charpoly;               // degree 2 * sum of dims
    std::vector<mpz_class> power_sums;  // s_1 .. s_k
};

// prod over the roots a of ap_charpoly of (x^2 - a x + p), i.e. the resultant
// Res_y(ap_charpoly(y), x^2 - y x + p), expanded through the coefficients.
poly::ZPoly orbit_frob_charpoly(const poly::ZPoly& ap_charpoly, i64 p);

// Product over the orbit set; 1 for the empty set. Throws MissingData when an
// orbit lacks a_p data at p or p divides an orbit level.
poly::ZPoly frob_charpoly(const std::vector<NewformOrbit>& orbits, i64 p);

// s_1 .. s_k of the roots of a monic integer polynomial (Newton's identities).
std::vector<mpz_class> power_sums(const poly::ZPoly& monic, int k);

// p^n + 1 - s_n for the curve whose Jacobian factors are the given orbits.
mpz_class point_count(const std::vector<NewformOrbit>& orbits, i64 p, int n);
// Counts over F_{p^1} .. F_{p^k}.
std::vector<mpz_class> point_counts(const std::vector<NewformOrbit>& orbits, i64 p, int k);

FrobeniusData frobenius_data(const std::vector<NewformOrbit>& orbits, i64 p, int k);

// Number of degree-n places from the counts N_1 .. N_n: (sum_{d|n} mu(n/d) N_d) / n.
// Throws Contradiction when the division is not exact.
mpz_class degree_places(const std::vector<mpz_class>& counts, int n);

// x^{2g} P(p/x) = p^g P(x)
bool satisfies_functional_equation(const poly::ZPoly& P, i64 p);
// The c with P(x) = x^d c(x + p/x). Throws std::invalid_argument when P
// has no such form.
poly::ZPoly trace_polynomial(const poly::ZPoly& P, i64 p);
// Every root has absolute value sqrt(p). Exact: checked on the trace
// polynomial with Sturm sequences.
bool passes_weil(const poly::ZPoly& P, i64 p);

// Per-orbit charpoly memo keyed by (orbit id, p). Thread-safe.
class FrobeniusCache {
public:
    poly::ZPoly get(const NewformOrbit& orbit, i64 p);
    std::size_t size() const;
    std::map<std::pair<std::string, i64>, poly::ZPoly> snapshot() const;
    void merge(const std::map<std::pair<std::string, i64>, poly::ZPoly>& entries);
    void clear();

private:
    mutable std::shared_mutex mu_;
    std::map<std::pair<std::string, i64>, poly::ZPoly> table_;
};

FrobeniusCache& default_cache();

} // namespace x0star::frobenius
