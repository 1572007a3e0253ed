#include "x0star/hypermodel.hpp"

#include "x0star/errors.hpp"
#include "x0star/frobenius.hpp"
#include "x0star/genus.hpp"
#include "x0star/linalg.hpp"
#include "x0star/petri.hpp"

#include <sstream>
#include <stdexcept>

namespace x0star::hypermodel {

namespace {

template <class F>
struct Fit {
    bool consistent = false;
    bool unique = false;
    std::vector<F> coeffs; // c_0 .. c_deg
    std::size_t equations = 0;
};

// Solves y^2 = sum c_k x^k on every coefficient known for all terms.
template <class F>
Fit<F> fit_relation(const qseries::Laurent<F>& x, const qseries::Laurent<F>& y, int deg, const F& one)
{
    using L = qseries::Laurent<F>;
    const F zero = qseries::field_from_int(one, 0);
    const L y2 = y * y;
    std::vector<L> pw{L{0, {one}}};
    for (int k = 1; k <= deg; ++k)
        pw.push_back(k == 1 ? x : pw.back() * x);

    int lo = y2.val, hi = y2.abs_precision();
    for (int k = 1; k <= deg; ++k) {
        lo = std::min(lo, pw[static_cast<std::size_t>(k)].val);
        hi = std::min(hi, pw[static_cast<std::size_t>(k)].abs_precision());
    }
    lo = std::min(lo, 0);
    pw[0].c.assign(static_cast<std::size_t>(std::max(hi, 1)), zero);
    pw[0].c[0] = one;

    Fit<F> fit;
    if (hi <= lo)
        return fit;
    fit.equations = static_cast<std::size_t>(hi - lo);
    const std::size_t n = static_cast<std::size_t>(deg) + 1;
    std::vector<std::vector<F>> a;
    for (int e = lo; e < hi; ++e) {
        std::vector<F> row;
        for (const auto& t : pw)
            row.push_back(t.at(e, zero));
        row.push_back(y2.at(e, zero));
        a.push_back(std::move(row));
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c <= n && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && qseries::field_is_zero(a[piv][c]))
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[r], a[piv]);
        const F inv = one / a[r][c];
        for (auto& x_ : a[r])
            x_ *= inv;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && !qseries::field_is_zero(a[i][c])) {
                const F f = a[i][c];
                for (std::size_t j = c; j <= n; ++j)
                    a[i][j] -= f * a[r][j];
            }
        pivots.push_back(c);
        ++r;
    }
    fit.consistent = pivots.empty() || pivots.back() != n;
    fit.unique = fit.consistent && pivots.size() == n;
    if (fit.unique) {
        fit.coeffs.assign(n, zero);
        for (std::size_t i = 0; i < n; ++i)
            fit.coeffs[pivots[i]] = a[i][n];
    }
    return fit;
}

qseries::Laurent<Fp> to_fp(const linalg::FpMatrix::value_type& row)
{
    return qseries::Laurent<Fp>::from_series(row);
}

// Replaces the rows by a basis of the integral series in their span at p, so
// that the reduction mod p has full rank: while some combination sum c_i f_i
// vanishes mod p, swap one of the f_i for that combination divided by p.
std::vector<ZSeries> saturate_at(std::vector<ZSeries> rows, std::int64_t p)
{
    const std::size_t g = rows.size();
    std::size_t len = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        len = std::min(len, r.size());
    for (std::size_t round = 0;; ++round) {
        const auto red = linalg::reduce_mod_p(rows, p);
        linalg::FpMatrix t(len, std::vector<Fp>(g, Fp(0, p)));
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t e = 0; e < len; ++e)
                t[e][i] = red[i][e];
        const auto ker = linalg::kernel_mod_p(t, g, p);
        if (ker.empty())
            return rows;
        bool all_zero = true;
        for (const auto& r : rows)
            for (std::size_t e = 0; e < len && all_zero; ++e)
                all_zero = r[e] == 0;
        if (all_zero || round > 64 * g)
            throw InsufficientPrecision("cannot saturate the basis at " + std::to_string(p));
        const auto& c = ker.front();
        std::size_t lead = 0;
        while (c[lead].is_zero())
            ++lead;
        ZSeries combo(len, 0);
        for (std::size_t i = 0; i < g; ++i)
            if (!c[i].is_zero())
                for (std::size_t e = 0; e < len; ++e)
                    combo[e] += c[i].v * rows[i][e];
        for (auto& x : combo) {
            if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)))
                throw Contradiction("saturation step is not integral");
            x /= p;
        }
        rows[lead] = std::move(combo);
    }
}

std::string term(const mpq_class& c, int k, bool first)
{
    std::ostringstream os;
    const mpq_class a = abs(c);
    if (first)
        os << (c < 0 ? "-" : "");
    else
        os << (c < 0 ? " - " : " + ");
    if (k == 0 || a != 1)
        os << a.get_str() << (k > 0 ? "*" : "");
    if (k >= 1)
        os << "X";
    if (k > 1)
        os << "^" << k;
    return os.str();
}

} // namespace

std::string HyperellipticModel::format() const
{
    std::string s;
    for (int k = poly::degree(P); k >= 0; --k)
        if (P[static_cast<std::size_t>(k)] != 0)
            s += term(P[static_cast<std::size_t>(k)], k, s.empty());
    return s.empty() ? "0" : s;
}

nlohmann::json HyperellipticModel::to_json() const
{
    std::vector<std::string> coeffs;
    for (const auto& c : P)
        coeffs.push_back(c.get_str());
    return {{"field", p == 0 ? "Q" : "F_" + std::to_string(p)},
            {"P", format()},
            {"coefficients", coeffs},
            {"genus", genus},
            {"weierstrass_at_infinity", weierstrass_at_infinity},
            {"verified_terms", verified_terms}};
}

nlohmann::json HypTest::to_json() const
{
    nlohmann::json j = {{"hyperelliptic", hyperelliptic}, {"leading_exponents", leading_exponents}};
    if (model)
        j["model"] = model->to_json();
    if (!reason.empty())
        j["reason"] = reason;
    return j;
}

std::vector<int> gap_sequence(const std::vector<ZSeries>& basis, std::int64_t p)
{
    return linalg::rref_mod_p(linalg::reduce_mod_p(saturate_at(basis, p), p)).pivots;
}

HypTest hyp_test_modp(const std::vector<ZSeries>& basis, std::int64_t p)
{
    if (p == 2)
        throw std::invalid_argument("hyp_test_modp: characteristic 2 is not supported");
    if (p < 3)
        throw std::invalid_argument("hyp_test_modp: p must be an odd prime");
    const int g = static_cast<int>(basis.size());
    if (g < 2)
        throw std::invalid_argument("hyp_test_modp: genus must be at least 2");

    const auto ech = linalg::rref_mod_p(linalg::reduce_mod_p(saturate_at(basis, p), p));
    HypTest out;
    out.leading_exponents = ech.pivots;
    if (static_cast<int>(ech.rows.size()) < g)
        throw InsufficientPrecision("basis has rank " + std::to_string(ech.rows.size()) + " < " + std::to_string(g) +
                                    " mod " + std::to_string(p) + " on the known coefficients");

    bool consecutive = true, odd = true;
    for (int i = 0; i < g; ++i) {
        consecutive = consecutive && ech.pivots[static_cast<std::size_t>(i)] == i + 1;
        odd = odd && ech.pivots[static_cast<std::size_t>(i)] == 2 * i + 1;
    }
    if (!consecutive && !odd) {
        out.reason = "gap sequence";
        return out;
    }

    const Fp one(1, p);
    const auto fg = to_fp(ech.rows[static_cast<std::size_t>(g - 1)]);
    const auto x = to_fp(ech.rows[static_cast<std::size_t>(g - 2)]) / fg;
    const auto y = qseries::theta(x) / fg;
    const int deg = 2 * g + 2;
    const auto fit = fit_relation(x, y, deg, one);
    if (!fit.consistent) {
        out.reason = "no relation y^2 = P(x)";
        return out;
    }
    if (!fit.unique)
        throw InsufficientPrecision("P is not determined by " + std::to_string(fit.equations) + " coefficients");

    poly::FpPoly P = fit.coeffs;
    while (!P.empty() && P.back().is_zero())
        P.pop_back();
    const int expected = consecutive ? 2 * g + 2 : 2 * g + 1;
    if (static_cast<int>(P.size()) - 1 != expected) {
        out.reason = "deg P = " + std::to_string(static_cast<int>(P.size()) - 1) + ", expected " +
                     std::to_string(expected);
        return out;
    }
    if (!poly::fp_is_squarefree(P)) {
        out.reason = "P is not squarefree";
        return out;
    }
    HyperellipticModel m;
    m.p = p;
    m.genus = g;
    m.weierstrass_at_infinity = !consecutive;
    m.verified_terms = fit.equations;
    for (const auto& c : P)
        m.P.emplace_back(c.v);
    out.hyperelliptic = true;
    out.model = std::move(m);
    return out;
}

bool count_allows_hyperelliptic(const std::vector<nfdata::NewformOrbit>& orbits, std::int64_t p, int n)
{
    mpz_class q = 1;
    for (int i = 0; i < n; ++i)
        q *= p;
    return frobenius::point_count(orbits, p, n) <= 2 * q + 2;
}

nlohmann::json Mod2Screen::to_json() const
{
    nlohmann::json dropped = nlohmann::json::array();
    for (const auto& [N, mA] : dropped_by_count)
        dropped.push_back({{"level", N}, {"m", mA.first}, {"A", mA.second}});
    return {{"candidates", candidates.size()},
            {"dropped_by_count", dropped},
            {"dropped_by_parity", dropped_by_parity},
            {"survivors", survivors}};
}

Mod2Screen mod2_hyperelliptic_screen(const nfdata::DataSource& src, int max_m)
{
    Mod2Screen out;
    out.candidates = genus::hyp2_candidates();
    for (std::int64_t N : out.candidates) {
        const auto orbits = src.load_orbits(arith::SquarefreeLevel(N));
        const auto counts = frobenius::point_counts(orbits, 2, max_m);
        bool dropped = false;
        for (int m = 1; m <= max_m && !dropped; ++m) {
            const mpz_class A = counts[static_cast<std::size_t>(m - 1)] - 2 * ((mpz_class(1) << m) + 1);
            if (A > 0) {
                out.dropped_by_count[N] = {m, A.get_str()};
                dropped = true;
            }
        }
        if (dropped)
            continue;
        if (criteria::lemma1_parity(orbits, N, 2).excluded)
            out.dropped_by_parity.push_back(N);
        else
            out.survivors.push_back(N);
    }
    return out;
}

HyperellipticModel genus2_quotient_model(const ZSeries& u, const ZSeries& v, int ambient_genus)
{
    return genus2_quotient_model(qseries::QSeries(u.begin(), u.end()), qseries::QSeries(v.begin(), v.end()),
                                 ambient_genus);
}

HyperellipticModel genus2_quotient_model(const qseries::QSeries& u, const qseries::QSeries& v, int ambient_genus)
{
    using L = qseries::Laurent<mpq_class>;
    const L lv = L::from_series(v);
    const auto X = L::from_series(u) / lv;
    const auto Y = qseries::theta(X) / lv;
    const auto fit = fit_relation(X, Y, 6, mpq_class(1));
    const std::size_t need = static_cast<std::size_t>(8 * ambient_genus + 8);
    if (fit.equations < need)
        throw InsufficientPrecision("model check needs " + std::to_string(need) + " coefficients, have " +
                                    std::to_string(fit.equations));
    if (!fit.consistent)
        throw Contradiction("no relation Y^2 = P(X) of degree <= 6");
    if (!fit.unique)
        throw InsufficientPrecision("P is not determined by the available coefficients");

    HyperellipticModel m;
    m.P = fit.coeffs;
    for (auto& c : m.P)
        c.canonicalize();
    poly::trim(m.P);
    m.genus = 2;
    const int d = poly::degree(m.P);
    if (d != 5 && d != 6)
        throw Contradiction("relation has degree " + std::to_string(d));
    if (!poly::is_squarefree(m.P))
        throw Contradiction("P is not squarefree");
    m.weierstrass_at_infinity = d == 5;
    m.verified_terms = fit.equations;
    return m;
}

std::pair<qseries::QSeries, qseries::QSeries> quotient_pair(const nfdata::StarBasis& basis,
                                                            const std::vector<int>& plus_blocks)
{
    int dim = 0;
    for (int b : plus_blocks)
        dim += basis.blocks.at(static_cast<std::size_t>(b)).dim;
    if (dim != 2)
        throw std::invalid_argument("quotient_pair needs a two-dimensional eigenspace");
    auto to_qs = [](const ZSeries& s) { return qseries::QSeries(s.begin(), s.end()); };
    if (plus_blocks.size() == 2) {
        const auto s = petri::block_series(basis, plus_blocks);
        return {to_qs(s[0]), to_qs(s[1])};
    }
    const auto b = static_cast<std::size_t>(plus_blocks[0]);
    const auto& blk = basis.blocks[b];
    const auto& orbit = basis.orbits[b];
    const auto& e1 = basis.series[static_cast<std::size_t>(blk.offset)];
    const auto& e2 = basis.series[static_cast<std::size_t>(blk.offset + 1)];
    // a_2 is the q^2 coefficient of the newform
    const auto it = orbit.ap_charpoly.find(2);
    if (it == orbit.ap_charpoly.end() || it->second.size() != 3)
        throw MissingData("orbit " + orbit.id() + " has no a_2 charpoly");
    mpq_class half_trace(-it->second[1], 2);
    half_trace.canonicalize();
    qseries::QSeries u = to_qs(e1);
    for (std::size_t k = 0; k < u.size() && k < e2.size(); ++k)
        u[k] += half_trace * e2[k];
    return {std::move(u), to_qs(e2)};
}

} // namespace x0star::hypermodel
