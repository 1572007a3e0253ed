#include "x0star/frobenius.hpp"

#include "x0star/errors.hpp"


#include <cmath>
#include <mutex>

namespace x0star::frobenius {

poly::ZPoly orbit_frob_charpoly(const poly::ZPoly& cp, i64 p)
{
    const int n = poly::degree(cp);
    if (n < 0 || cp.back() != 1)
        throw std::invalid_argument("orbit_frob_charpoly: a_p charpoly must be monic");
    // prod (x^2 + p - a_i x) = sum_k (-1)^k e_k x^k (x^2 + p)^{n-k}, and
    // (-1)^k e_k is the coefficient c_{n-k} of the monic charpoly.
    const poly::ZPoly quad{p, 0, 1};
    poly::ZPoly out;
    for (int k = 0; k <= n; ++k) {
        const mpz_class& c = cp[static_cast<std::size_t>(n - k)];
        if (c == 0)
            continue;
        poly::ZPoly term = poly::zpow(quad, static_cast<unsigned>(n - k));
        term.insert(term.begin(), static_cast<std::size_t>(k), mpz_class(0));
        for (auto& t : term)
            t *= c;
        out = poly::zadd(out, term);
    }
    return out;
}

poly::ZPoly FrobeniusCache::get(const NewformOrbit& orbit, i64 p)
{
    const auto key = std::make_pair(orbit.id(), p);
    {
        std::shared_lock lock(mu_);
        if (auto it = table_.find(key); it != table_.end())
            return it->second;
    }
    if (orbit.level % p == 0)
        throw MissingData("orbit " + orbit.id() + " has bad reduction at p=" + std::to_string(p));
    poly::ZPoly cp = orbit_frob_charpoly(orbit.charpoly_at(p), p);
    std::unique_lock lock(mu_);
    table_.emplace(key, cp);
    return cp;
}

std::size_t FrobeniusCache::size() const
{
    std::shared_lock lock(mu_);
    return table_.size();
}

std::map<std::pair<std::string, i64>, poly::ZPoly> FrobeniusCache::snapshot() const
{
    std::shared_lock lock(mu_);
    return table_;
}

void FrobeniusCache::merge(const std::map<std::pair<std::string, i64>, poly::ZPoly>& entries)
{
    std::unique_lock lock(mu_);
    for (const auto& [k, v] : entries)
        table_.emplace(k, v);
}

void FrobeniusCache::clear()
{
    std::unique_lock lock(mu_);
    table_.clear();
}

FrobeniusCache& default_cache()
{
    static FrobeniusCache cache;
    return cache;
}

poly::ZPoly frob_charpoly(const std::vector<NewformOrbit>& orbits, i64 p)
{
    poly::ZPoly out{1};
    for (const auto& o : orbits)
        out = poly::zmul(out, default_cache().get(o, p));
    return out;
}

std::vector<mpz_class> power_sums(const poly::ZPoly& P, int k)
{
    const int m = poly::degree(P);
    if (m < 0 || P.back() != 1)
        throw std::invalid_argument("power_sums: polynomial must be monic");
    // e_i = (-1)^i P_{m-i}
    std::vector<mpz_class> e(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i)
        e[static_cast<std::size_t>(i)] = (i % 2 ? -1 : 1) * P[static_cast<std::size_t>(m - i)];
    std::vector<mpz_class> s(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 1; j <= k; ++j) {
        mpz_class acc = 0;
        for (int i = 1; i < j && i <= m; ++i) {
            const mpz_class t = e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
            acc += (i % 2 ? t : -t);
        }
        if (j <= m) {
            const mpz_class t = j * e[static_cast<std::size_t>(j)];
            acc += (j % 2 ? t : -t);
        }
        s[static_cast<std::size_t>(j)] = acc;
    }
    s.erase(s.begin());
    return s;
}

std::vector<mpz_class> point_counts(const std::vector<NewformOrbit>& orbits, i64 p, int k)
{
    std::vector<mpz_class> total(static_cast<std::size_t>(k), 0);
    for (const auto& o : orbits) {
        const auto s = power_sums(default_cache().get(o, p), k);
        for (int n = 0; n < k; ++n)
            total[static_cast<std::size_t>(n)] += s[static_cast<std::size_t>(n)];
    }
    std::vector<mpz_class> out(static_cast<std::size_t>(k));
    mpz_class q = 1;
    for (int n = 0; n < k; ++n) {
        q *= p;
        out[static_cast<std::size_t>(n)] = q + 1 - total[static_cast<std::size_t>(n)];
    }
    return out;
}

mpz_class point_count(const std::vector<NewformOrbit>& orbits, i64 p, int n)
{
    if (n < 1)
        throw std::invalid_argument("point_count: n must be positive");
    return point_counts(orbits, p, n).back();
}

FrobeniusData frobenius_data(const std::vector<NewformOrbit>& orbits, i64 p, int k)
{
    FrobeniusData d;
    for (const auto& o : orbits)
        d.orbit_set.push_back(o.id());
    d.p = p;
    d.charpoly = frob_charpoly(orbits, p);
    d.power_sums = power_sums(d.charpoly, k);
    return d;
}

mpz_class degree_places(const std::vector<mpz_class>& counts, int n)
{
    if (n < 1 || static_cast<std::size_t>(n) > counts.size())
        throw std::invalid_argument("degree_places: need counts through n");
    mpz_class acc = 0;
    for (i64 d : arith::divisors(n))
        acc += arith::moebius(n / d) * counts[static_cast<std::size_t>(d - 1)];
    if (acc % n != 0)
        throw Contradiction("degree_places: non-integral place count");
    return acc / n;
}

bool satisfies_functional_equation(const poly::ZPoly& P, i64 p)
{
    const int m = poly::degree(P);
    if (m < 0 || m % 2)
        return false;
    const int g = m / 2;
    for (int j = 0; j <= g; ++j) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(g - j));
        if (P[static_cast<std::size_t>(j)] != pw * P[static_cast<std::size_t>(m - j)])
            return false;
    }
    return true;
}

poly::ZPoly trace_polynomial(const poly::ZPoly& P, i64 p)
{
    const int deg = poly::degree(P);
    if (deg < 0 || deg % 2)
        throw std::invalid_argument("trace_polynomial: odd degree");
    const int d = deg / 2;
    // peel x^{d-k} (x^2 + p)^k off the top, k = d .. 0
    poly::ZPoly rest = P;
    poly::ZPoly c(static_cast<std::size_t>(d) + 1);
    const poly::ZPoly quad{mpz_class(p), 0, 1};
    for (int k = d; k >= 0; --k) {
        rest.resize(static_cast<std::size_t>(deg) + 1);
        const mpz_class lead = rest[static_cast<std::size_t>(d + k)];
        c[static_cast<std::size_t>(k)] = lead;
        if (lead == 0)
            continue;
        poly::ZPoly term = poly::zpow(quad, static_cast<unsigned>(k));
        term.insert(term.begin(), static_cast<std::size_t>(d - k), mpz_class(0));
        for (std::size_t i = 0; i < term.size(); ++i)
            rest[i] -= lead * term[i];
    }
    poly::trim(rest);
    if (!rest.empty())
        throw std::invalid_argument("trace_polynomial: not of the form x^d c(x + p/x)");
    poly::trim(c);
    return c;
}

bool passes_weil(const poly::ZPoly& P, i64 p)
{
    if (!satisfies_functional_equation(P, p))
        return false;
    return poly::roots_real_within(trace_polynomial(P, p), mpq_class(4 * p));
}

} // namespace x0star::frobenius
