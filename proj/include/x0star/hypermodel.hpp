#pragma once

#include "x0star/criteria.hpp"
#include "x0star/nfdata.hpp"
#include "x0star/poly.hpp"
#include "x0star/qseries.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Hyperelliptic models y^2 = P(x) read off from q-expansions of differentials.
namespace x0star::hypermodel {

using qseries::ZSeries;

struct HyperellipticModel {
    std::int64_t p = 0; // 0 for Q
    poly::QPoly P;      // over F_p the coefficients are residues in [0, p)
    int genus = 0;
    bool weierstrass_at_infinity = false; // deg P = 2g + 1
    std::size_t verified_terms = 0;      // q-coefficients of y^2 - P(x) checked to vanish

    std::string format() const; // "X^6 + 8*X^4 + ..."
    nlohmann::json to_json() const;
};

struct HypTest {
    bool hyperelliptic = false;
    std::optional<HyperellipticModel> model;
    std::vector<int> leading_exponents; // of the echelonized basis mod p
    std::string reason;                 // why not, when not

    nlohmann::json to_json() const;
};

// With f_1, .., f_g the basis mod p echelonized so that f_i = q^{e_i} + ...,
// the curve is hyperelliptic over F_p exactly when (e_i) is (1, .., g) or
// (1, 3, .., 2g-1) and x = f_{g-1}/f_g, y = q (dx/dq) / f_g satisfy
// y^2 = P(x) for a squarefree P of degree 2g+2 or 2g+1 respectively.
// Throws std::invalid_argument for p = 2 and InsufficientPrecision when the
// series do not determine P.
HypTest hyp_test_modp(const std::vector<ZSeries>& basis, std::int64_t p);

// Necessary condition for a hyperelliptic curve over F_q: at most 2q + 2
// rational points.
bool count_allows_hyperelliptic(const std::vector<nfdata::NewformOrbit>& orbits, std::int64_t p, int n);

struct Mod2Screen {
    std::vector<std::int64_t> candidates;
    std::map<std::int64_t, std::pair<int, std::string>> dropped_by_count; // N -> (m, A_{N,m})
    std::vector<std::int64_t> dropped_by_parity;
    std::vector<std::int64_t> survivors;

    nlohmann::json to_json() const;
};

// Odd levels that may be hyperelliptic over F_2: the Ogg-bound candidates,
// minus those with |X(F_{2^m})| > 2(2^m + 1) for some m <= max_m, minus
// those the odd-place parity test shows to have no involution over F_2.
Mod2Screen mod2_hyperelliptic_screen(const nfdata::DataSource& src, int max_m = 2);

// Y^2 = P(X) with X = u/v and Y = q (dX/dq) / v over Q. P has degree at most
// six and the identity is checked on every available coefficient, which must
// number at least 8g + 8 for the ambient genus g. Throws Contradiction when
// no such P exists and InsufficientPrecision when the series are too short.
HyperellipticModel genus2_quotient_model(const qseries::QSeries& u, const qseries::QSeries& v, int ambient_genus);
HyperellipticModel genus2_quotient_model(const ZSeries& u, const ZSeries& v, int ambient_genus);

// The pair (u, v) used for the quotient model of a genus-2 eigenspace. For a
// single two-dimensional orbit with echelon rows e1 = q + O(q^3) and
// e2 = q^2 + ..., u is half the orbit trace of the newform,
// e1 + (tr a_2 / 2) e2, and v = e2. For two one-dimensional blocks, the two
// lifted newforms in basis order.
std::pair<qseries::QSeries, qseries::QSeries> quotient_pair(const nfdata::StarBasis& basis,
                                                            const std::vector<int>& plus_blocks);

// Leading exponents mod p, ascending, after saturating the integral span of
// the basis at p.
std::vector<int> gap_sequence(const std::vector<ZSeries>& basis, std::int64_t p);

} // namespace x0star::hypermodel
