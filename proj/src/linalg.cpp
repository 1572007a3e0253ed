#include "x0star/linalg.hpp"

#include <stdexcept>
#include <type_traits>

namespace x0star::linalg {

namespace {

template <class T>
bool zero(const T& x)
{
    if constexpr (std::is_same_v<T, Fp>)
        return x.is_zero();
    else
        return x == 0;
}

// Gauss-Jordan elimination shared by the exact and modular paths.
template <class T>
void gauss_jordan(std::vector<std::vector<T>>& m, std::vector<int>& pivots)
{
    pivots.clear();
    if (m.empty())
        return;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && zero(m[piv][c]))
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[r]);
        if constexpr (std::is_same_v<T, Fp>) {
            const Fp f = m[r][c].inv();
            for (auto& x : m[r])
                x *= f;
        } else {
            const T inv = T(1) / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || zero(m[i][c]))
                continue;
            const T f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!zero(m[r][k]))
                    m[i][k] -= f * m[r][k];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
}

} // namespace

Echelon rref(QMatrix m)
{
    Echelon e;
    gauss_jordan(m, e.pivots);
    e.rows = std::move(m);
    return e;
}

std::size_t rank(const QMatrix& m) { return rref(m).rows.size(); }

namespace {

template <class T>
std::vector<std::vector<T>> kernel_impl(std::vector<std::vector<T>> m, std::size_t cols, const T& zero_v,
                                        const T& one_v)
{
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("kernel: ragged matrix");
    std::vector<int> pivots;
    gauss_jordan(m, pivots);
    std::vector<int> is_pivot(cols, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        is_pivot[static_cast<std::size_t>(pivots[r])] = static_cast<int>(r);
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f] >= 0)
            continue;
        std::vector<T> v(cols, zero_v);
        v[f] = one_v;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = zero_v - m[r][f];
        basis.push_back(std::move(v));
    }
    gauss_jordan(basis, pivots);
    return basis;
}

} // namespace

QMatrix kernel(const QMatrix& m, std::size_t cols) { return kernel_impl<mpq_class>(m, cols, 0, 1); }

FpMatrix kernel_mod_p(const FpMatrix& m, std::size_t cols, std::int64_t p)
{
    return kernel_impl<Fp>(m, cols, Fp(0, p), Fp(1, p));
}

QMatrix to_q(const ZMatrix& m)
{
    QMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

ZMatrix primitive_rows(const QMatrix& m)
{
    ZMatrix out;
    for (const auto& row : m) {
        mpz_class den = 1;
        for (const auto& x : row)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> ints(row.size());
        mpz_class g = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            ints[i] = row[i].get_num() * (den / row[i].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
        }
        if (g == 0)
            continue;
        int sign = 1;
        for (const auto& x : ints)
            if (x != 0) {
                sign = x > 0 ? 1 : -1;
                break;
            }
        for (auto& x : ints)
            x = sign * x / g;
        out.push_back(std::move(ints));
    }
    return out;
}

FpMatrix reduce_mod_p(const ZMatrix& m, std::int64_t p)
{
    FpMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& x : m[i]) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
            out[i].emplace_back(r.get_si(), p);
        }
    }
    return out;
}

FpEchelon rref_mod_p(FpMatrix m)
{
    FpEchelon e;
    gauss_jordan(m, e.pivots);
    e.rows = std::move(m);
    return e;
}

std::size_t rank_mod_p(const ZMatrix& m, std::int64_t p) { return rref_mod_p(reduce_mod_p(m, p)).rows.size(); }

} // namespace x0star::linalg
