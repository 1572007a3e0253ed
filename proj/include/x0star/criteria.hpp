#pragma once

#include "x0star/arith.hpp"
#include "x0star/nfdata.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace x0star::criteria {

using arith::i64;
using nfdata::NewformOrbit;

struct ExclusionVerdict {
    i64 level = 0;
    std::string criterion; // "lemma1", "big-factor", "free-parity", "dominance"
    nlohmann::json params = nlohmann::json::object();
    bool excluded = false;
    nlohmann::json witness = nlohmann::json::object();

    nlohmann::json to_json() const;
};

// Primes and exponents tried when a caller does not name them.
struct Schedule {
    std::vector<i64> primes{2, 3, 5, 7, 11, 13};
    int max_exponent = 6;
    int k_max = 20;
};

// Parity of degree-n places: ((sum_{d|n} mu(n/d) N_d) / n) mod 2.
int place_parity(const std::vector<mpz_class>& counts, int n);

// An involution over F_p fixes every odd-degree place that it does not pair
// off, so sum_{n<=k} (2n+1) P(2n+1) > 2g+2 rules it out. `orbits` is the
// full star set of N. Throws std::invalid_argument when p | N or g <= 2.
ExclusionVerdict lemma1_parity(const std::vector<NewformOrbit>& orbits, i64 N, i64 p, int k_max = 20);
ExclusionVerdict lemma1_parity(const nfdata::DataSource& src, i64 N, i64 p, int k_max = 20);

// Recomputes an excluded lemma1 verdict from scratch.
bool reverify(const ExclusionVerdict& v, const nfdata::DataSource& src);

// Each orbit lies wholly in the plus or the minus part of an involution, so
// the quotient genus is a sum of orbit dimensions inside the odd-level window
// [max(min_quotient_genus, (g-5)/2), (g+1)/2]. Excluded when no such sum
// exists; a factor of dimension > (g+5)/2 always causes this. The default
// lower end 2 assumes X is neither hyperelliptic nor bielliptic. Odd N only.
ExclusionVerdict big_factor(const std::vector<NewformOrbit>& orbits, i64 N, int min_quotient_genus = 2);

// Subset sums of the orbit dimensions, ascending.
std::vector<int> dimension_sums(const std::vector<NewformOrbit>& orbits);

// For odd N with g*(2N) = 2g*(N) - 1 the involution of X0*(2N) is fixed-point
// free, so its point count over F_{p^k} must be even. Throws
// std::invalid_argument when the genus relation fails or p | 2N.
ExclusionVerdict free_involution_parity(const nfdata::DataSource& src, i64 N, i64 p, int k);

// Excluded when |X(F_{p^n})| > 2 |X_u(F_{p^n})| for a tested (p, n), where
// X_u has Jacobian the candidate orbits.
ExclusionVerdict dominance(const std::vector<NewformOrbit>& full, const std::vector<NewformOrbit>& candidate, i64 N,
                           i64 p, int n);
ExclusionVerdict dominance(const std::vector<NewformOrbit>& full, const std::vector<NewformOrbit>& candidate, i64 N,
                           const Schedule& schedule = {});

// What the caller has established about M = N/p before the filter applies.
struct RestrictPrerequisites {
    bool aut_trivial = false;       // Aut(X0*(M)) is trivial
    bool nonhyperelliptic = false;  // X0*(M) over F_p is not hyperelliptic
};

struct RestrictResult {
    enum class Status { inapplicable, excluded, forced };
    Status status = Status::inapplicable;
    i64 level = 0;
    i64 p = 0;
    std::string reason;
    std::vector<int> forced_blocks; // indices into the star orbit list of N
    int forced_dim = 0;

    nlohmann::json to_json() const;
};

// The quotient of an involution must contain the whole Jacobian of
// X0*(N/p): every orbit whose level divides N/p is forced into the plus
// part, and g*(N/p) <= (g*(N)+1)/2 is required.
RestrictResult restrict_filter(const std::vector<NewformOrbit>& orbits, i64 N, i64 p, const RestrictPrerequisites& pre);

} // namespace x0star::criteria
