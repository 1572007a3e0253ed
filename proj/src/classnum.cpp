#include "x0star/classnum.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace x0star::classnum {

Discriminant::Discriminant(i64 value) : value_(value)
{
    const i64 r = ((value % 4) + 4) % 4;
    if (value >= 0 || (r != 0 && r != 1))
        throw std::invalid_argument("invalid imaginary quadratic discriminant " + std::to_string(value));
}

i64 class_number_uncached(Discriminant disc)
{
    const i64 D = disc.value();
    const i64 absD = -D;
    i64 h = 0;
    for (i64 b = absD & 1; 3 * b * b <= absD; b += 2) {
        const i64 m = (b * b - D) / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= m; ++a) {
            if (m % a)
                continue;
            const i64 c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            h += (b == 0 || a == b || a == c) ? 1 : 2;
        }
    }
    return h;
}

i64 ClassNumberCache::get(Discriminant D)
{
    {
        std::shared_lock lock(mu_);
        if (auto it = table_.find(D.value()); it != table_.end())
            return it->second;
    }
    const i64 h = class_number_uncached(D);
    std::unique_lock lock(mu_);
    table_.emplace(D.value(), h);
    return h;
}

std::size_t ClassNumberCache::size() const
{
    std::shared_lock lock(mu_);
    return table_.size();
}

std::map<i64, i64> ClassNumberCache::snapshot() const
{
    std::shared_lock lock(mu_);
    return {table_.begin(), table_.end()};
}

void ClassNumberCache::merge(const std::map<i64, i64>& entries)
{
    std::unique_lock lock(mu_);
    for (auto [D, h] : entries)
        table_.emplace(D, h);
}

void ClassNumberCache::clear()
{
    std::unique_lock lock(mu_);
    table_.clear();
}

ClassNumberCache& default_cache()
{
    static ClassNumberCache cache;
    return cache;
}

i64 class_number(Discriminant D) { return default_cache().get(D); }

ClassNumberTable::ClassNumberTable(i64 bound) : bound_(bound), h_(static_cast<std::size_t>(bound) + 1, 0)
{
    // Reduced forms: |b| <= a <= c, b >= 0 if |b| == a or a == c.
    for (i64 a = 1; 3 * a * a <= bound; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            const i64 b2 = b * b;
            for (i64 c = a;; ++c) {
                const i64 absD = 4 * a * c - b2;
                if (absD > bound)
                    break;
                if (c == a && b < 0)
                    continue;
                if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1)
                    continue;
                ++h_[absD];
            }
        }
    }
}

i64 ClassNumberTable::operator()(i64 D) const
{
    Discriminant checked(D);
    if (-D > bound_)
        throw std::out_of_range("class number table bound " + std::to_string(bound_) + " exceeded by " +
                                std::to_string(D));
    return h_[static_cast<std::size_t>(-checked.value())];
}

namespace {

template <class H>
i64 nu_self_impl(i64 d, bool twisted, H&& h)
{
    if (d < 5)
        throw std::invalid_argument("nu_self requires d >= 5, got " + std::to_string(d));
    if (!arith::is_squarefree(d))
        throw std::invalid_argument("nu_self requires square-free d");
    if (d % 2 == 0 && twisted)
        throw std::invalid_argument("nu_self: twisted count needs odd d");
    i64 r = h(-4 * d);
    if (d % 4 == 3)
        r += (twisted ? 3 : 1) * h(-d);
    return r;
}

i64 local_product(i64 a, const std::vector<i64>& primes)
{
    i64 r = 1;
    for (i64 p : primes)
        r *= 1 + arith::kronecker_at_prime(a, p);
    return r;
}

template <class H>
i64 nu_impl(const arith::SquarefreeLevel& M, i64 d, H&& h)
{
    if (d <= 1 || M.value() % d != 0)
        throw std::invalid_argument("nu: need d > 1 dividing M (M=" + std::to_string(M.value()) +
                                    ", d=" + std::to_string(d) + ")");
    // Odd primes of M not dividing d.
    std::vector<i64> rest;
    for (i64 p : M.primes())
        if (p != 2 && d % p != 0)
            rest.push_back(p);

    if (d == 2)
        return local_product(1, rest) + local_product(2, rest);
    if (d == 3)
        return 2 * local_product(3, rest);
    if (d % 2 == 1)
        return local_product(d, rest) * nu_self_impl(d, !M.is_odd(), h);
    // w_{2d'} on X_0(2N): the local symbol is taken against -2d'.
    return local_product(d, rest) * nu_self_impl(d, false, h);
}

} // namespace

i64 nu_self(i64 d, bool twisted)
{
    return nu_self_impl(d, twisted, [](i64 D) { return class_number(Discriminant(D)); });
}

FixedPointCount nu(const arith::SquarefreeLevel& M, i64 d)
{
    return {M.value(), d, nu_impl(M, d, [](i64 D) { return class_number(Discriminant(D)); })};
}

i64 nu_with(const arith::SquarefreeLevel& M, i64 d, const ClassNumberTable& table)
{
    return nu_impl(M, d, [&](i64 D) { return table(D); });
}

} // namespace x0star::classnum
