#pragma once

#include "x0star/errors.hpp"
#include "x0star/fp.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace x0star::qseries {

// Truncated power series: c[k] is the coefficient of q^k, known for k < size().
using ZSeries = std::vector<mpz_class>;
using QSeries = std::vector<mpq_class>;

// Product truncated to O(q^prec).
ZSeries mul(const ZSeries& a, const ZSeries& b, std::size_t prec);
// f(q^d) truncated to O(q^prec); throws InsufficientPrecision if f is too short.
ZSeries substitute_power(const ZSeries& f, std::int64_t d, std::size_t prec);
// Index of the first nonzero coefficient, or -1.
int valuation(const ZSeries& f);

template <class F>
F field_from_int(const F& like, long v)
{
    if constexpr (std::is_same_v<F, Fp>)
        return Fp(v, like.p);
    else
        return F(v);
}

template <class F>
bool field_is_zero(const F& x)
{
    if constexpr (std::is_same_v<F, Fp>)
        return x.is_zero();
    else
        return x == 0;
}

// Laurent series q^val * sum c[k] q^k with relative precision c.size(); the
// series is known modulo q^{val + c.size()}. A series with empty c stands for
// O(q^val).
template <class F>
struct Laurent {
    int val = 0;
    std::vector<F> c;

    int abs_precision() const { return val + static_cast<int>(c.size()); }
    bool known_zero() const { return c.empty(); }

    // Coefficient of q^e; e must be below the absolute precision.
    F at(int e, const F& zero) const
    {
        if (e >= abs_precision())
            throw InsufficientPrecision("Laurent coefficient beyond precision");
        if (e < val)
            return zero;
        return c[static_cast<std::size_t>(e - val)];
    }

    void normalize()
    {
        std::size_t lead = 0;
        while (lead < c.size() && field_is_zero(c[lead]))
            ++lead;
        val += static_cast<int>(lead);
        c.erase(c.begin(), c.begin() + static_cast<long>(lead));
    }

    static Laurent from_series(const std::vector<F>& s)
    {
        Laurent out{0, s};
        out.normalize();
        return out;
    }
};

template <class F>
Laurent<F> operator*(const Laurent<F>& a, const Laurent<F>& b)
{
    const std::size_t n = std::min(a.c.size(), b.c.size());
    Laurent<F> out{a.val + b.val, {}};
    if (n == 0)
        return out;
    const F zero = field_from_int(a.c[0], 0);
    out.c.assign(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        if (field_is_zero(a.c[i]))
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            out.c[i + j] += a.c[i] * b.c[j];
    }
    out.normalize();
    return out;
}

template <class F>
Laurent<F> inverse(const Laurent<F>& a)
{
    if (a.c.empty())
        throw InsufficientPrecision("inverse of a series with no known nonzero term");
    const std::size_t n = a.c.size();
    const F inv0 = field_from_int(a.c[0], 1) / a.c[0];
    std::vector<F> r(n, field_from_int(a.c[0], 0));
    r[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        F s = field_from_int(a.c[0], 0);
        for (std::size_t j = 1; j <= k; ++j)
            s += a.c[j] * r[k - j];
        r[k] = -(s * inv0);
    }
    return {-a.val, std::move(r)};
}

template <class F>
Laurent<F> operator/(const Laurent<F>& a, const Laurent<F>& b)
{
    return a * inverse(b);
}

template <class F>
Laurent<F> add_scaled(const Laurent<F>& a, const Laurent<F>& b, const F& s)
{
    const int prec = std::min(a.abs_precision(), b.abs_precision());
    const int lo = std::min(a.val, b.val);
    Laurent<F> out{lo, {}};
    if (prec <= lo)
        return Laurent<F>{prec, {}};
    const F zero = field_from_int(s, 0);
    out.c.assign(static_cast<std::size_t>(prec - lo), zero);
    for (int e = lo; e < prec; ++e) {
        F v = zero;
        if (e >= a.val)
            v += a.c[static_cast<std::size_t>(e - a.val)];
        if (e >= b.val)
            v += s * b.c[static_cast<std::size_t>(e - b.val)];
        out.c[static_cast<std::size_t>(e - lo)] = v;
    }
    out.normalize();
    return out;
}

// q d/dq
template <class F>
Laurent<F> theta(const Laurent<F>& a)
{
    Laurent<F> out = a;
    for (std::size_t k = 0; k < out.c.size(); ++k)
        out.c[k] *= field_from_int(out.c[k], static_cast<long>(a.val) + static_cast<long>(k));
    out.normalize();
    return out;
}

} // namespace x0star::qseries
