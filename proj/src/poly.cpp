#include "x0star/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace x0star::poly {

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b)
{
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] += b[i];
    trim(c);
    return c;
}

ZPoly zpow(const ZPoly& a, unsigned e)
{
    ZPoly r{1};
    for (unsigned i = 0; i < e; ++i)
        r = zmul(r, a);
    return r;
}

QPoly to_q(const ZPoly& a)
{
    QPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    return out;
}

QPoly qmul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

QPoly qsub(const QPoly& a, const QPoly& b)
{
    QPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] -= b[i];
    trim(c);
    return c;
}

QPoly derivative(const QPoly& a)
{
    if (a.size() <= 1)
        return {};
    QPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        d[i - 1] = a[i] * static_cast<long>(i);
    trim(d);
    return d;
}

mpq_class eval(const QPoly& a, const mpq_class& x)
{
    mpq_class r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        r = r * x + *it;
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    if (b.empty())
        throw std::domain_error("poly::divmod by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    const mpq_class lead = b.back();
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const mpq_class f = r.back() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= f * b[i];
        r.pop_back();
        trim(r);
    }
    trim(q);
}

QPoly make_monic(QPoly a)
{
    trim(a);
    if (a.empty())
        return a;
    const mpq_class lead = a.back();
    for (auto& c : a)
        c /= lead;
    return a;
}

QPoly gcd(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

int distinct_root_count(const QPoly& a)
{
    QPoly t = a;
    trim(t);
    if (t.empty())
        throw std::domain_error("distinct_root_count of zero polynomial");
    return degree(t) - degree(gcd(t, derivative(t)));
}

bool is_squarefree(const QPoly& a) { return degree(gcd(a, derivative(a))) == 0; }

namespace {

int sign_changes(const std::vector<QPoly>& chain, const mpq_class& x)
{
    int changes = 0, last = 0;
    for (const auto& f : chain) {
        const int s = sgn(eval(f, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int real_root_count(const QPoly& a, const mpq_class& lo, const mpq_class& hi)
{
    QPoly f = a;
    trim(f);
    if (f.empty())
        throw std::domain_error("real_root_count of zero polynomial");
    std::vector<QPoly> chain{f, derivative(f)};
    while (degree(chain.back()) > 0) {
        QPoly q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        chain.push_back(std::move(r));
    }
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

bool roots_real_within(const ZPoly& c, const mpq_class& bound)
{
    const int d = degree(c);
    if (d < 1)
        return true;
    // c(t) c(-t) = E(t^2); roots of c are real with t^2 <= bound exactly
    // when every root of E is real and lies in [0, bound].
    ZPoly neg = c;
    for (std::size_t i = 1; i < neg.size(); i += 2)
        neg[i] = -neg[i];
    const ZPoly prod = zmul(c, neg);
    QPoly E(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        E[static_cast<std::size_t>(k)] = mpq_class(prod[static_cast<std::size_t>(2 * k)]);
    const int distinct = distinct_root_count(E);
    int inside = real_root_count(E, 0, bound);
    if (eval(E, mpq_class(0)) == 0)
        ++inside;
    return inside == distinct;
}

mpq_class resultant(const QPoly& a0, const QPoly& b0)
{
    QPoly a = a0, b = b0;
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    mpq_class acc = 1;
    while (true) {
        const int m = degree(a), n = degree(b);
        if (n == 0) {
            mpq_class p = 1;
            for (int i = 0; i < m; ++i)
                p *= b[0];
            return acc * p;
        }
        if (m < n) {
            if ((m * n) % 2)
                acc = -acc;
            std::swap(a, b);
            continue;
        }
        QPoly q, r;
        divmod(a, b, q, r);
        if (r.empty())
            return 0;
        // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        const int rd = degree(r);
        if ((m * n) % 2)
            acc = -acc;
        for (int i = 0; i < m - rd; ++i)
            acc *= b.back();
        a = std::move(b);
        b = std::move(r);
    }
}

QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys)
{
    QPoly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QPoly basis{1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j)
                continue;
            basis = qmul(basis, QPoly{-xs[j], 1});
            denom *= xs[i] - xs[j];
        }
        const mpq_class f = ys[i] / denom;
        if (out.size() < basis.size())
            out.resize(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            out[k] += f * basis[k];
    }
    trim(out);
    return out;
}

FpPoly fp_derivative(const FpPoly& a)
{
    if (a.size() <= 1)
        return {};
    FpPoly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(a[i] * Fp(static_cast<std::int64_t>(i), a[i].p));
    trim(d);
    return d;
}

FpPoly fp_gcd(FpPoly a, FpPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = a;
        const Fp lead_inv = b.back().inv();
        while (r.size() >= b.size()) {
            const std::size_t shift = r.size() - b.size();
            const Fp f = r.back() * lead_inv;
            for (std::size_t i = 0; i < b.size(); ++i)
                r[shift + i] -= f * b[i];
            r.pop_back();
            trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Fp inv = a.back().inv();
        for (auto& c : a)
            c *= inv;
    }
    return a;
}

bool fp_is_squarefree(const FpPoly& a) { return degree(fp_gcd(a, fp_derivative(a))) == 0; }

namespace {

template <class C>
std::string render(const std::vector<C>& a, const std::string& var)
{
    std::ostringstream os;
    bool first = true;
    for (int i = degree(a); i >= 0; --i) {
        C c = a[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (c != 1 || i == 0)
            os << c;
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return first ? "0" : os.str();
}

} // namespace

std::string to_string(const ZPoly& a, const std::string& var) { return render(a, var); }
std::string to_string(const QPoly& a, const std::string& var) { return render(a, var); }

} // namespace x0star::poly
