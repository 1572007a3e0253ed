#include "x0star/genus.hpp"

#include "x0star/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace x0star::genus {

namespace {

// 12 * g for the two closed forms; exact integers.
i64 genus_x0_impl(const SquarefreeLevel& N)
{
    if (N.value() <= 1)
        throw std::invalid_argument("genus_x0: level must exceed 1");
    if (N.is_odd()) {
        const int n = N.omega();
        bool has_3mod4 = false, has_2mod3 = false;
        for (i64 p : N.primes()) {
            has_3mod4 |= (p % 4 == 3);
            has_2mod3 |= (p % 3 == 2);
        }
        const i64 nu2 = has_3mod4 ? 0 : (i64{1} << n);
        const i64 nu3 = has_2mod3 ? 0 : (i64{1} << (n - arith::three_adic_valuation(N.value())));
        const i64 twelve_g = 12 + arith::dedekind_psi(N) - 3 * nu2 - 4 * nu3 - 6 * (i64{1} << n);
        if (twelve_g % 12)
            throw Contradiction("genus_x0: non-integral genus at " + std::to_string(N.value()));
        return twelve_g / 12;
    }
    const SquarefreeLevel odd(N.value() / 2);
    const int n = odd.omega();
    bool has_3mod4 = false;
    for (i64 p : odd.primes())
        has_3mod4 |= (p % 4 == 3);
    const i64 nu2 = has_3mod4 ? 0 : (i64{1} << n);
    const i64 four_g = 4 + arith::dedekind_psi(odd) - nu2 - 4 * (i64{1} << n);
    if (four_g % 4)
        throw Contradiction("genus_x0: non-integral genus at " + std::to_string(N.value()));
    return four_g / 4;
}

template <class Nu>
i64 genus_star_impl(const SquarefreeLevel& N, Nu&& nu)
{
    const i64 g = genus_x0_impl(N);
    const int n = N.omega();
    i64 fixed = 0;
    for (i64 d : N.divisors())
        if (d > 1)
            fixed += nu(d);
    // 2^{n+1} g* = 2^{n+1} + 2 (g - 1) - sum nu
    const i64 scaled = (i64{1} << (n + 1)) + 2 * (g - 1) - fixed;
    if (scaled % (i64{1} << (n + 1)) || scaled < 0)
        throw Contradiction("genus_x0_star: invalid genus at " + std::to_string(N.value()));
    return scaled >> (n + 1);
}

void require_odd(const SquarefreeLevel& N)
{
    if (!N.is_odd() || N.value() <= 1)
        throw std::invalid_argument("expected odd level > 1, got " + std::to_string(N.value()));
}

} // namespace

i64 genus_x0(const SquarefreeLevel& N) { return genus_x0_impl(N); }

i64 genus_x0_star(const SquarefreeLevel& N)
{
    return genus_star_impl(N, [&](i64 d) { return classnum::nu(N, d).count; });
}

i64 genus_x0_star(const SquarefreeLevel& N, const classnum::ClassNumberTable& table)
{
    return genus_star_impl(N, [&](i64 d) { return classnum::nu_with(N, d, table); });
}

GenusPair genus_pair(const SquarefreeLevel& N) { return {N.value(), genus_x0(N), genus_x0_star(N)}; }

i64 delta_2n(const SquarefreeLevel& N)
{
    require_odd(N);
    return genus_x0_star(SquarefreeLevel(2 * N.value())) - 2 * genus_x0_star(N);
}

i64 delta_2n(const SquarefreeLevel& N, const classnum::ClassNumberTable& table)
{
    require_odd(N);
    return genus_x0_star(SquarefreeLevel(2 * N.value()), table) - 2 * genus_x0_star(N, table);
}

namespace {

std::vector<i64> odd_squarefree_upto(i64 max_n)
{
    std::vector<i64> out;
    for (i64 n = 3; n <= max_n; n += 2)
        if (arith::is_squarefree(n))
            out.push_back(n);
    return out;
}

DeltaRow delta_row(i64 n)
{
    const SquarefreeLevel N(n);
    return {n, genus_x0_star(N), genus_x0_star(SquarefreeLevel(2 * n))};
}

} // namespace

std::vector<DeltaRow> scan_delta_serial(i64 max_n)
{
    std::vector<DeltaRow> rows;
    for (i64 n : odd_squarefree_upto(max_n))
        rows.push_back(delta_row(n));
    return rows;
}

std::vector<DeltaRow> scan_delta(i64 max_n)
{
    const auto levels = odd_squarefree_upto(max_n);
    std::vector<DeltaRow> rows(levels.size());
    const auto count = static_cast<long>(levels.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i)
        rows[i] = delta_row(levels[i]);
    return rows;
}

std::vector<DeltaRow> scan_delta(const std::vector<i64>& levels, const classnum::ClassNumberTable& table)
{
    std::vector<DeltaRow> rows(levels.size());
    const auto count = static_cast<long>(levels.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
        const SquarefreeLevel N(levels[i]);
        rows[i] = {levels[i], genus_x0_star(N, table), genus_x0_star(SquarefreeLevel(2 * levels[i]), table)};
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Certified inequality.

namespace {

struct Interval {
    mpq_class lo, hi;
};

// floor(x^(1/k)) for nonnegative integer x.
mpz_class iroot(const mpz_class& x, unsigned long k)
{
    mpz_class r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

// Enclosure of p^(num/den) with den in {2, 4}, scaled by 2^bits.
Interval power_enclosure(i64 p, unsigned num, unsigned den, unsigned bits)
{
    mpz_class scale = 1;
    scale <<= bits;
    mpz_class x;
    mpz_pow_ui(x.get_mpz_t(), mpz_class(p).get_mpz_t(), num);
    mpz_class scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), den);
    const mpz_class lo = iroot(x * scale_pow, den);
    Interval out{mpq_class(lo, scale), mpq_class(lo + 1, scale)};
    out.lo.canonicalize();
    out.hi.canonicalize();
    return out;
}

// Rational enclosure of pi.
const Interval& pi_enclosure()
{
    static const Interval pi{mpq_class("314159265358979/100000000000000"),
                             mpq_class("314159265358980/100000000000000")};
    return pi;
}

Interval lhs_enclosure(const std::vector<i64>& primes, unsigned bits)
{
    mpq_class prod34_lo = 1, prod34_hi = 1, prod12_lo = 1, prod12_hi = 1;
    for (i64 p : primes) {
        const auto r34 = power_enclosure(p, 3, 4, bits);
        const auto r12 = power_enclosure(p, 1, 2, bits);
        const mpq_class denom = p + 1;
        prod34_lo *= (2 + r34.lo) / denom;
        prod34_hi *= (2 + r34.hi) / denom;
        prod12_lo *= (2 + r12.lo) / denom;
        prod12_hi *= (2 + r12.hi) / denom;
    }
    const auto& pi = pi_enclosure();
    const mpq_class c_lo = mpq_class(10) / (3 * pi.hi);
    const mpq_class c_hi = mpq_class(10) / (3 * pi.lo);
    const mpq_class twelfth(1, 12);
    return {c_lo * (prod34_lo + 3 * prod12_lo) - twelfth, c_hi * (prod34_hi + 3 * prod12_hi) - twelfth};
}

void check_primes(const std::vector<i64>& primes)
{
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] % 2 == 0 || !arith::is_prime(primes[i]))
            throw std::invalid_argument("prop4_search_bound: expects odd primes");
        for (std::size_t j = 0; j < i; ++j)
            if (primes[j] == primes[i])
                throw std::invalid_argument("prop4_search_bound: repeated prime");
    }
}

} // namespace

bool prop4_search_bound(const std::vector<i64>& primes)
{
    check_primes(primes);
    for (unsigned bits = 48; bits <= 192; bits *= 2) {
        const auto e = lhs_enclosure(primes, bits);
        if (e.hi < 0)
            return true;
        if (e.lo >= 0)
            return false;
    }
    return false;
}

std::array<double, 2> prop4_search_enclosure(const std::vector<i64>& primes)
{
    check_primes(primes);
    const auto e = lhs_enclosure(primes, 48);
    return {e.lo.get_d(), e.hi.get_d()};
}

std::vector<i64> prop4_search_domain()
{
    std::vector<i64> primes = arith::primes_up_to(200000);
    primes.erase(primes.begin()); // drop 2
    std::vector<i64> out;
    std::vector<i64> tuple;
    std::function<void(std::size_t, i64)> extend = [&](std::size_t start, i64 n) {
        for (std::size_t i = start; i < primes.size(); ++i) {
            tuple.push_back(primes[i]);
            const bool certified = prop4_search_bound(tuple);
            if (!certified) {
                out.push_back(n * primes[i]);
                extend(i + 1, n * primes[i]);
            }
            tuple.pop_back();
            // Larger primes at this position are componentwise larger.
            if (certified)
                return;
        }
        throw std::logic_error("prop4_search_domain: prime table exhausted");
    };
    extend(0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Rational upper bound for h(D), exact inside the table.
mpq_class class_number_upper(i64 D, const classnum::ClassNumberTable& table)
{
    if (-D <= table.bound())
        return table(D);
    const double a = static_cast<double>(-D);
    // sqrt is correctly rounded and log is within an ulp; the relative and
    // absolute padding dominates both errors.
    const double b = std::sqrt(a) * std::log(a) / 3.14159265358979;
    return mpq_class(b * (1 + 1e-9) + 1e-6);
}

i64 symbol_product(i64 a, const SquarefreeLevel& N, i64 d)
{
    i64 r = 1;
    for (i64 p : N.primes())
        if (d % p)
            r *= 1 + arith::kronecker_at_prime(a, p);
    return r;
}

} // namespace

bool delta_certified_below(const SquarefreeLevel& N, const classnum::ClassNumberTable& table)
{
    require_odd(N);
    const int n = N.omega();
    bool has_3mod4 = false, has_2mod3 = false;
    for (i64 p : N.primes()) {
        has_3mod4 |= (p % 4 == 3);
        has_2mod3 |= (p % 3 == 2);
    }
    const i64 nu2 = has_3mod4 ? 0 : (i64{1} << n);
    const i64 nu3 = has_2mod3 ? 0 : (i64{1} << (n - arith::three_adic_valuation(N.value())));
    const i64 nu_2n_2 = symbol_product(1, N, 1) + symbol_product(2, N, 1);
    mpq_class bound = mpq_class(-arith::dedekind_psi(N), 12) + mpq_class(3 * nu2, 4) + mpq_class(4 * nu3, 3) -
                      mpq_class(nu_2n_2, 2) + (i64{1} << n);
    for (i64 d : N.divisors()) {
        if (d == 1)
            continue;
        const i64 local = symbol_product(d, N, d);
        if (local == 0)
            continue;
        // 2 nu(N,d) - nu(2N,d)/2; the nonpositive -nu(2N,2d)/2 term is dropped.
        mpq_class term;
        if (d == 3)
            term = 3;
        else if (d % 4 == 1)
            term = mpq_class(3, 2) * class_number_upper(-4 * d, table);
        else if (d % 8 == 7)
            term = 2 * class_number_upper(-d, table);
        else
            term = 5 * class_number_upper(-d, table);
        bound += local * term;
    }
    return bound < 0;
}

Prop4Lists prop4_classify(const std::vector<i64>& levels)
{
    const classnum::ClassNumberTable table(100000);
    const auto count = static_cast<long>(levels.size());
    // 0: certified below, 1: computed exactly
    std::vector<char> how(levels.size(), 0);
    std::vector<DeltaRow> rows(levels.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) {
        const SquarefreeLevel N(levels[i]);
        if (delta_certified_below(N, table))
            continue;
        how[i] = 1;
        const SquarefreeLevel N2(2 * levels[i]);
        if (8 * levels[i] <= table.bound())
            rows[i] = {levels[i], genus_x0_star(N, table), genus_x0_star(N2, table)};
        else
            rows[i] = {levels[i], genus_x0_star(N), genus_x0_star(N2)};
    }
    Prop4Lists lists;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!how[i]) {
            ++lists.certified;
            continue;
        }
        ++lists.computed;
        const auto& row = rows[i];
        if (row.g_star <= 2)
            continue;
        const i64 d = row.delta();
        if (d > 2)
            throw Contradiction("delta exceeds 2 at N=" + std::to_string(row.n));
        if (d >= -1)
            lists.by_delta[static_cast<std::size_t>(d + 1)].push_back(row.n);
    }
    for (auto& l : lists.by_delta)
        std::sort(l.begin(), l.end());
    return lists;
}

Prop4Lists prop4_classify() { return prop4_classify(prop4_search_domain()); }

std::vector<i64> gonality_candidates_raw()
{
    // psi(N) > N, and every odd square-free N > 10^5 exceeds 2^omega(N) * 348.
    std::vector<i64> out;
    for (i64 n = 3; n <= 100000; n += 2) {
        if (!arith::is_squarefree(n))
            continue;
        const SquarefreeLevel N(n);
        if (arith::dedekind_psi(N) <= (i64{1} << N.omega()) * 348)
            out.push_back(n);
    }
    return out;
}

std::vector<i64> gonality_candidates()
{
    std::vector<i64> out;
    for (i64 n : gonality_candidates_raw())
        if (!arith::is_prime(n) && genus_x0_star(SquarefreeLevel(n)) > 3)
            out.push_back(n);
    return out;
}

std::vector<i64> hyp2_candidates()
{
    std::vector<i64> out;
    for (i64 n = 3; n <= 100000; n += 2) {
        if (!arith::is_squarefree(n))
            continue;
        const SquarefreeLevel N(n);
        if (arith::dedekind_psi(N) <= (i64{1} << N.omega()) * 108 && genus_x0_star(N) > 2)
            out.push_back(n);
    }
    return out;
}

} // namespace x0star::genus
