#pragma once

#include "x0star/criteria.hpp"
#include "x0star/linalg.hpp"
#include "x0star/nfdata.hpp"
#include "x0star/qseries.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

// Canonical-embedding linear algebra: spaces of forms vanishing on a basis
// of differentials, diagonal sign patterns compatible with them, and the
// choice of the +1 eigenspace.
namespace x0star::petri {

using Exponents = std::vector<int>;
using qseries::ZSeries;

// Degree-d exponent vectors in g variables, graded lexicographic with
// x1 > x2 > ... (x1^2, x1 x2, ..., x2^2, ...).
std::vector<Exponents> monomials(int g, int degree);

// A degree-i form in canonical differentials that vanishes at the cusp to
// order > i(2g-1) in q is zero, so i(2g-1)+1 coefficients (exponents
// 0 .. i(2g-1)) certify it.
std::size_t certified_precision(int g, int degree);

// dim H^0(iK) = (2i-1)(g-1) for i >= 2.
int pluricanonical_dim(int g, int degree);

struct QuadricSpace {
    int g = 0;
    int degree = 2;
    std::vector<Exponents> monomials;
    linalg::QMatrix basis;    // reduced echelon rows, columns follow `monomials`
    linalg::QMatrix ns_basis; // degree 2 only: forms free of square monomials
    std::size_t precision = 0;

    int dim() const { return static_cast<int>(basis.size()); }
    // Primitive integer multiple, e.g. "x2*x4 - x3*x4 - 2*x1*x5 + x2*x5 + x3*x5"
    std::string format(const std::vector<mpq_class>& form) const;
    nlohmann::json to_json() const;
};

// Row m holds the series of the m-th monomial, exponents < prec.
linalg::ZMatrix monomial_series(const std::vector<ZSeries>& forms, int degree, std::size_t prec);

// Exact space of degree-i forms vanishing on `forms`, compared through
// certified_precision(certify_genus, i) coefficients. Throws
// InsufficientPrecision when a series is shorter than that.
QuadricSpace vanishing_forms(const std::vector<ZSeries>& forms, int degree, int certify_genus);
QuadricSpace vanishing_forms(const nfdata::StarBasis& basis, int degree);

QuadricSpace nonsquare_subspace(const QuadricSpace& L2);

// Q(eps x) for a form given over `monos`.
std::vector<mpq_class> apply_signs(const std::vector<Exponents>& monos, const std::vector<mpq_class>& form,
                                   const std::vector<int>& eps);

// Block-constant diagonal sign change, up to a global sign. The minus side
// is the one not containing block 0.
struct SignPattern {
    std::vector<int> epsilons; // per basis position, +1 on the side of block 0
    std::vector<int> minus_blocks;
    std::vector<int> plus_blocks;
    int minus_dim = 0;
    int plus_dim = 0;

    nlohmann::json to_json() const;
};

// Admissible quotient genera: (g-5)/2 .. (g+1)/2 for odd levels, 2 .. (g+1)/2
// otherwise; the lower end is at least 2.
std::pair<int, int> quotient_window(int g, bool odd_level);

struct SearchOptions {
    int window_lo = 2;
    int window_hi = 0;
    std::vector<int> forced_blocks; // must lie on the +1 side
    bool check_cubics = true;       // also require stability of the cubics
};

struct SearchStats {
    int degree = 2;
    int dim = 0;          // dim of the primary space (L2, or L4 when g = 3)
    int dim_ns = -1;      // dim of L2^ns when computed exactly
    int patterns_tested = 0;
    int modular_survivors = 0;
    std::int64_t prime = 0;

    nlohmann::json to_json() const;
};

struct SearchResult {
    std::vector<SignPattern> patterns;
    SearchStats stats;
};

// Screens every admissible pattern modulo a prime where the kernel rank is
// certified, then confirms survivors over Q.
SearchResult sign_pattern_search(const nfdata::StarBasis& basis, const SearchOptions& options);
// Same result, one pattern at a time; reference for the parallel search.
SearchResult sign_pattern_search_serial(const nfdata::StarBasis& basis, const SearchOptions& options);

// Points of the canonical curve on the coordinate subspace where every
// variable outside `keep` vanishes, counted over an algebraic closure without
// multiplicity. Supports up to three kept variables; throws
// std::invalid_argument beyond that and Contradiction when the intersection
// is not finite.
int subspace_point_count(const std::vector<QuadricSpace>& ideal, const std::vector<int>& keep);

struct Orientation {
    std::vector<int> plus_blocks;
    int g_u = 0;
    int fixed_points = 0; // 2g + 2 - 4 g_u
    bool rejected = false;
    std::string reason;
    nlohmann::json evidence = nlohmann::json::object();
};

struct Resolution {
    enum class Status { resolved, unresolved, contradiction };
    Status status = Status::unresolved;
    int chosen = -1; // index into orientations
    std::vector<Orientation> orientations;
    nlohmann::json counts = nlohmann::json::object();

    const Orientation& winner() const { return orientations.at(static_cast<std::size_t>(chosen)); }
    nlohmann::json to_json() const;
};

// Decides which side of a surviving pattern is the +1 eigenspace: first by
// dominance of point counts, then by counting fixed points on the two
// eigenspaces. A fixed point kills every invariant differential, so it lies
// on {x_plus = 0}.
Resolution resolve_sign(const nfdata::StarBasis& basis, const SignPattern& pattern, const SearchOptions& options,
                        const criteria::Schedule& schedule = {});

struct ProbeResult {
    int g_u = 0;
    int degree = 2;
    int expected = 0;
    int computed = 0;
    bool consistent = false;

    nlohmann::json to_json() const;
};

// Whether the given differentials can be the pullback of a non-hyperelliptic
// quotient: dim L2 must be (g_u-2)(g_u-3)/2, or dim L4 = 1 when g_u = 3.
// Certified against the ambient genus.
ProbeResult quotient_petri_probe(const std::vector<ZSeries>& lifted, int ambient_genus);

// Series of the given blocks of a star basis, in basis order.
std::vector<ZSeries> block_series(const nfdata::StarBasis& basis, const std::vector<int>& blocks);

} // namespace x0star::petri
