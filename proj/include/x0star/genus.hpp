#pragma once

#include "x0star/arith.hpp"
#include "x0star/classnum.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace x0star::genus {

using arith::i64;
using arith::SquarefreeLevel;

struct GenusPair {
    i64 level;
    i64 g;      // genus of X_0(N)
    i64 g_star; // genus of X_0^*(N)
};

// Genus of X_0(N), N > 1 square-free. Odd and even N use separate closed forms.
i64 genus_x0(const SquarefreeLevel& N);

// Genus of X_0(N)/B(N), N > 1 square-free.
i64 genus_x0_star(const SquarefreeLevel& N);
i64 genus_x0_star(const SquarefreeLevel& N, const classnum::ClassNumberTable& table);

GenusPair genus_pair(const SquarefreeLevel& N);

// g*_{2N} - 2 g*_N for odd square-free N > 1.
i64 delta_2n(const SquarefreeLevel& N);
i64 delta_2n(const SquarefreeLevel& N, const classnum::ClassNumberTable& table);

// One row of a level scan over odd N: g*_N and g*_{2N}.
struct DeltaRow {
    i64 n;
    i64 g_star;
    i64 g_star_2n;
    i64 delta() const { return g_star_2n - 2 * g_star; }
};

// All odd square-free 1 < N <= max_n. The parallel version distributes levels
// over OpenMP threads; the serial one is kept as its reference.
std::vector<DeltaRow> scan_delta(i64 max_n);
std::vector<DeltaRow> scan_delta_serial(i64 max_n);

// Scan over an explicit level list with class numbers from a table.
std::vector<DeltaRow> scan_delta(const std::vector<i64>& levels, const classnum::ClassNumberTable& table);

// Levels with g*_N > 2 split by delta in {-1, 0, 1, 2}; index = delta + 1.
struct Prop4Lists {
    std::array<std::vector<i64>, 4> by_delta;
    // Levels settled by the per-level bound versus computed exactly.
    std::size_t certified = 0;
    std::size_t computed = 0;
    const std::vector<i64>& with_delta(int delta) const { return by_delta.at(delta + 1); }
};

// Sharper per-level test: an upper bound for 2^{n+1} (g*_{2N} - 2 g*_N + 1)
// using the exact local symbol products, exact class numbers for |D| up to the
// table bound, and h(D) <= |D|^{1/2} log|D| / pi beyond it. True means the
// bound is negative, so delta <= -2.
bool delta_certified_below(const SquarefreeLevel& N, const classnum::ClassNumberTable& table);

// Certified evaluation of the sufficient inequality that forces
// g*_{2N} - 2 g*_N + 1 < 0 for the odd primes P of N. Returns true only when
// an outward-rounded rational enclosure of the left side lies below zero.
bool prop4_search_bound(const std::vector<i64>& primes);

// Upper and lower rational enclosures of the left side, as doubles, for
// reporting; width is below 1e-6.
std::array<double, 2> prop4_search_enclosure(const std::vector<i64>& primes);

// Every odd square-free N whose primes fail prop4_search_bound, enumerated via
// the componentwise prime order; all other N are certified and need no check.
std::vector<i64> prop4_search_domain();

// Classifies the levels in `levels` with g*_N > 2 by delta.
Prop4Lists prop4_classify(const std::vector<i64>& levels);

// Classifies the whole certified domain. Slow; intended for the CLI.
Prop4Lists prop4_classify();

// Odd square-free N >= 3 with psi(N) <= 2^omega(N) * 348.
std::vector<i64> gonality_candidates_raw();
// Same, without primes and levels of g*_N <= 3.
std::vector<i64> gonality_candidates();
// Odd square-free N with psi(N) <= 2^omega(N) * 108 and g*_N > 2.
std::vector<i64> hyp2_candidates();

} // namespace x0star::genus
