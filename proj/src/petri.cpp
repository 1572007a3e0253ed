#include "x0star/petri.hpp"

#include "x0star/errors.hpp"
#include "x0star/poly.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace x0star::petri {

namespace {

constexpr std::int64_t kPrimes[] = {2147483629, 2147483587, 2147483579, 2147483563};

void collect_monomials(int g, int degree, int pos, Exponents& cur, std::vector<Exponents>& out)
{
    if (pos == g - 1) {
        cur[static_cast<std::size_t>(pos)] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        collect_monomials(g, degree - e, pos + 1, cur, out);
    }
}

std::string monomial_name(const Exponents& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    return s;
}

// Monomials whose sign flips under eps, i.e. odd total degree in the minus
// variables.
std::vector<std::size_t> odd_columns(const std::vector<Exponents>& monos, const std::vector<int>& eps)
{
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < monos.size(); ++m) {
        int minus = 0;
        for (std::size_t j = 0; j < eps.size(); ++j)
            if (eps[j] < 0)
                minus += monos[m][j];
        if (minus % 2)
            out.push_back(m);
    }
    return out;
}

// Coefficient matrix of the linear map monomial -> series: one row per
// exponent, one column per monomial.
template <class T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& s, std::size_t prec, const T& zero)
{
    std::vector<std::vector<T>> a(prec, std::vector<T>(s.size(), zero));
    for (std::size_t m = 0; m < s.size(); ++m)
        for (std::size_t e = 0; e < prec; ++e)
            a[e][m] = s[m][e];
    return a;
}

// The odd part of every kernel form vanishes on the series.
template <class K, class S>
bool odd_parts_vanish(const std::vector<std::vector<K>>& kernel, const std::vector<std::vector<S>>& series,
                      const std::vector<std::size_t>& odd, std::size_t prec, const K& zero)
{
    for (const auto& k : kernel) {
        std::vector<std::size_t> used;
        for (std::size_t m : odd)
            if (!(k[m] == zero))
                used.push_back(m);
        if (used.empty())
            continue;
        for (std::size_t e = 0; e < prec; ++e) {
            K acc = zero;
            for (std::size_t m : used)
                acc += k[m] * K(series[m][e]);
            if (!(acc == zero))
                return false;
        }
    }
    return true;
}

struct ModularSpace {
    std::int64_t p = 0;
    linalg::FpMatrix series; // monomial x exponent
    linalg::FpMatrix kernel;
};

// Kernel modulo the first prime where its rank reaches dim H^0(iK). The rank
// over Q is at least the rank mod p and at most that bound, so the reduction
// of the rational kernel is then exactly the modular kernel.
ModularSpace modular_space(const linalg::ZMatrix& s, int g, int degree, std::size_t prec)
{
    const int target = pluricanonical_dim(g, degree);
    for (std::int64_t p : kPrimes) {
        ModularSpace out;
        out.p = p;
        out.series = linalg::reduce_mod_p(s, p);
        out.kernel = linalg::kernel_mod_p(transpose(out.series, prec, Fp(0, p)), s.size(), p);
        const int rank = static_cast<int>(s.size() - out.kernel.size());
        if (rank == target)
            return out;
        if (rank > target)
            throw Contradiction("rank " + std::to_string(rank) + " exceeds dim H^0(" + std::to_string(degree) +
                                "K) = " + std::to_string(target));
    }
    throw Contradiction("degree-" + std::to_string(degree) + " products have rank below dim H^0(" +
                        std::to_string(degree) + "K) modulo every prime tried");
}

bool modular_test(const ModularSpace& ms, const std::vector<std::size_t>& odd, std::size_t prec)
{
    const Fp zero(0, ms.p);
    for (const auto& k : ms.kernel) {
        std::vector<std::size_t> used;
        for (std::size_t m : odd)
            if (!k[m].is_zero())
                used.push_back(m);
        for (std::size_t e = 0; e < prec && !used.empty(); ++e) {
            Fp acc = zero;
            for (std::size_t m : used)
                acc += k[m] * ms.series[m][e];
            if (!acc.is_zero())
                return false;
        }
    }
    return true;
}

bool exact_test(const QuadricSpace& space, const linalg::ZMatrix& s, const std::vector<int>& eps)
{
    const auto odd = odd_columns(space.monomials, eps);
    return odd_parts_vanish<mpq_class, mpz_class>(space.basis, s, odd, space.precision, mpq_class(0));
}

std::vector<int> epsilons_for(const nfdata::StarBasis& basis, unsigned minus_mask)
{
    std::vector<int> eps(static_cast<std::size_t>(basis.genus()), 1);
    for (std::size_t b = 0; b < basis.blocks.size(); ++b)
        if (minus_mask >> b & 1U)
            for (int i = 0; i < basis.blocks[b].dim; ++i)
                eps[static_cast<std::size_t>(basis.blocks[b].offset + i)] = -1;
    return eps;
}

int mask_dim(const nfdata::StarBasis& basis, unsigned mask)
{
    int d = 0;
    for (std::size_t b = 0; b < basis.blocks.size(); ++b)
        if (mask >> b & 1U)
            d += basis.blocks[b].dim;
    return d;
}

std::vector<int> mask_blocks(unsigned mask, std::size_t n)
{
    std::vector<int> out;
    for (std::size_t b = 0; b < n; ++b)
        if (mask >> b & 1U)
            out.push_back(static_cast<int>(b));
    return out;
}

bool side_admissible(const nfdata::StarBasis& basis, unsigned plus_mask, const SearchOptions& opt)
{
    const int gu = mask_dim(basis, plus_mask);
    if (gu < opt.window_lo || gu > opt.window_hi)
        return false;
    for (int f : opt.forced_blocks)
        if (!(plus_mask >> f & 1U))
            return false;
    return true;
}

SignPattern make_pattern(const nfdata::StarBasis& basis, unsigned minus_mask)
{
    const std::size_t n = basis.blocks.size();
    const unsigned all = (1U << n) - 1;
    SignPattern p;
    p.epsilons = epsilons_for(basis, minus_mask);
    p.minus_blocks = mask_blocks(minus_mask, n);
    p.plus_blocks = mask_blocks(all & ~minus_mask, n);
    p.minus_dim = mask_dim(basis, minus_mask);
    p.plus_dim = basis.genus() - p.minus_dim;
    return p;
}

SearchResult run_search(const nfdata::StarBasis& basis, const SearchOptions& opt, bool parallel)
{
    const int g = basis.genus();
    if (g < 3)
        throw std::invalid_argument("sign_pattern_search needs genus >= 3");
    const std::size_t n = basis.blocks.size();
    if (n > 30)
        throw std::invalid_argument("too many blocks");
    const int degree = g == 3 ? 4 : 2;
    const std::size_t prec = certified_precision(g, degree);
    const auto s = monomial_series(basis.series, degree, prec);
    const auto monos = monomials(g, degree);
    const ModularSpace ms = modular_space(s, g, degree, prec);

    SearchResult res;
    res.stats.degree = degree;
    res.stats.dim = static_cast<int>(ms.kernel.size());
    res.stats.prime = ms.p;

    const unsigned all = (1U << n) - 1;
    std::vector<unsigned> masks;
    for (unsigned m = 2; m <= all; m += 2) // block 0 stays on the + side
        if (side_admissible(basis, all & ~m, opt) || side_admissible(basis, m, opt))
            masks.push_back(m);
    res.stats.patterns_tested = static_cast<int>(masks.size());

    std::vector<char> survive(masks.size(), 0);
    const long count = static_cast<long>(masks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < count; ++i) {
        const auto eps = epsilons_for(basis, masks[static_cast<std::size_t>(i)]);
        survive[static_cast<std::size_t>(i)] = modular_test(ms, odd_columns(monos, eps), prec) ? 1 : 0;
    }

    std::vector<unsigned> candidates;
    for (std::size_t i = 0; i < masks.size(); ++i)
        if (survive[i])
            candidates.push_back(masks[i]);
    res.stats.modular_survivors = static_cast<int>(candidates.size());
    if (candidates.empty())
        return res;

    const QuadricSpace exact = vanishing_forms(basis, degree);
    if (degree == 2)
        res.stats.dim_ns = static_cast<int>(exact.ns_basis.size());
    std::vector<unsigned> confirmed;
    for (unsigned m : candidates)
        if (exact_test(exact, s, epsilons_for(basis, m)))
            confirmed.push_back(m);

    if (opt.check_cubics && degree == 2 && !confirmed.empty()) {
        const std::size_t p3 = certified_precision(g, 3);
        const auto s3 = monomial_series(basis.series, 3, p3);
        const auto monos3 = monomials(g, 3);
        const ModularSpace ms3 = modular_space(s3, g, 3, p3);
        std::vector<unsigned> kept;
        for (unsigned m : confirmed)
            if (modular_test(ms3, odd_columns(monos3, epsilons_for(basis, m)), p3))
                kept.push_back(m);
        if (!kept.empty()) {
            const QuadricSpace exact3 = vanishing_forms(basis, 3);
            std::vector<unsigned> kept3;
            for (unsigned m : kept)
                if (exact_test(exact3, s3, epsilons_for(basis, m)))
                    kept3.push_back(m);
            kept = std::move(kept3);
        }
        confirmed = std::move(kept);
    }
    for (unsigned m : confirmed)
        res.patterns.push_back(make_pattern(basis, m));
    return res;
}

// Homogeneous polynomial in a few variables.
using Poly = std::map<std::vector<int>, mpq_class>;

void drop_zeros(Poly& f)
{
    for (auto it = f.begin(); it != f.end();)
        it = it->second == 0 ? f.erase(it) : std::next(it);
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    drop_zeros(out);
    return out;
}

int total_degree(const Poly& f)
{
    int d = 0;
    for (const auto& e : f.begin()->first)
        d += e;
    return d;
}

// Forms of the ideal restricted to the kept coordinates, zeros dropped.
std::vector<Poly> restrict_forms(const std::vector<QuadricSpace>& ideal, const std::vector<int>& keep)
{
    std::vector<Poly> out;
    for (const auto& space : ideal)
        for (const auto& form : space.basis) {
            Poly f;
            for (std::size_t m = 0; m < form.size(); ++m) {
                if (form[m] == 0)
                    continue;
                const auto& e = space.monomials[m];
                std::vector<int> r(keep.size());
                int inside = 0, total = 0;
                for (std::size_t j = 0; j < keep.size(); ++j) {
                    r[j] = e[static_cast<std::size_t>(keep[j])];
                    inside += r[j];
                }
                for (int x : e)
                    total += x;
                if (inside == total)
                    f[r] += form[m];
            }
            drop_zeros(f);
            if (!f.empty())
                out.push_back(std::move(f));
        }
    return out;
}

// Distinct common zeros in P^1 of binary forms.
int count_binary(const std::vector<Poly>& forms)
{
    if (forms.empty())
        throw Contradiction("a whole line lies on the curve");
    bool at_infinity = true; // the point [1:0]
    poly::QPoly g;
    for (const auto& f : forms) {
        const int d = total_degree(f);
        poly::QPoly t(static_cast<std::size_t>(d) + 1, 0);
        for (const auto& [e, c] : f)
            t[static_cast<std::size_t>(e[0])] = c;
        if (t[static_cast<std::size_t>(d)] != 0)
            at_infinity = false;
        poly::trim(t);
        g = g.empty() ? t : poly::gcd(g, t);
    }
    const int finite = poly::degree(g) <= 0 ? 0 : poly::distinct_root_count(g);
    return finite + (at_infinity ? 1 : 0);
}

// F(T u) for a ternary form.
Poly transform(const Poly& f, const std::array<std::array<long, 3>, 3>& t)
{
    std::array<Poly, 3> lin;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                std::vector<int> e(3, 0);
                e[static_cast<std::size_t>(j)] = 1;
                lin[static_cast<std::size_t>(i)][e] = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
    Poly out;
    for (const auto& [e, c] : f) {
        Poly term{{std::vector<int>{0, 0, 0}, c}};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
                term = poly_mul(term, lin[static_cast<std::size_t>(i)]);
        for (const auto& [te, tc] : term)
            out[te] += tc;
    }
    drop_zeros(out);
    return out;
}

// f(x0, y, 1) as a polynomial in y.
poly::QPoly slice(const Poly& f, const mpq_class& x0)
{
    poly::QPoly out(static_cast<std::size_t>(total_degree(f)) + 1, 0);
    for (const auto& [e, c] : f) {
        mpq_class v = c;
        for (int k = 0; k < e[0]; ++k)
            v *= x0;
        out[static_cast<std::size_t>(e[1])] += v;
    }
    poly::trim(out);
    return out;
}

int count_ternary_once(const std::vector<Poly>& forms, std::mt19937& rng)
{
    std::uniform_int_distribution<long> dist(-7, 7);
    std::array<std::array<long, 3>, 3> t{};
    std::vector<Poly> moved;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 50)
            throw Contradiction("no generic coordinate change found");
        for (auto& row : t)
            for (auto& x : row)
                x = dist(rng);
        const long det = t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
                         t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
                         t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
        if (det == 0)
            continue;
        moved.clear();
        bool monic_in_y = true;
        for (const auto& f : forms) {
            Poly h = transform(f, t);
            std::vector<int> top{0, total_degree(f), 0};
            if (!h.count(top))
                monic_in_y = false;
            moved.push_back(std::move(h));
        }
        if (monic_in_y)
            break;
    }
    // points on the line z = 0
    std::vector<Poly> on_line;
    for (const auto& f : moved) {
        Poly b;
        for (const auto& [e, c] : f)
            if (e[2] == 0)
                b[{e[0], e[1]}] += c;
        drop_zeros(b);
        if (!b.empty())
            on_line.push_back(std::move(b));
    }
    const int line_points = count_binary(on_line);
    // affine part z = 1: gcd of pairwise resultants in y
    poly::QPoly g;
    bool any = false;
    for (std::size_t a = 0; a < moved.size(); ++a)
        for (std::size_t b = a + 1; b < moved.size(); ++b) {
            const int bound = total_degree(moved[a]) * total_degree(moved[b]);
            std::vector<mpq_class> xs, ys;
            for (int k = 0; k <= bound; ++k) {
                xs.emplace_back(k);
                ys.push_back(poly::resultant(slice(moved[a], k), slice(moved[b], k)));
            }
            poly::QPoly r = poly::interpolate(xs, ys);
            poly::trim(r);
            if (r.empty())
                continue;
            g = any ? poly::gcd(g, r) : r;
            any = true;
        }
    if (!any)
        throw Contradiction("restricted forms share a common curve");
    const int affine = poly::degree(g) <= 0 ? 0 : poly::distinct_root_count(g);
    return line_points + affine;
}

} // namespace

std::vector<Exponents> monomials(int g, int degree)
{
    if (g < 1 || degree < 0)
        throw std::invalid_argument("monomials: bad arguments");
    std::vector<Exponents> out;
    Exponents cur(static_cast<std::size_t>(g), 0);
    collect_monomials(g, degree, 0, cur, out);
    return out;
}

std::size_t certified_precision(int g, int degree)
{
    return static_cast<std::size_t>(degree) * static_cast<std::size_t>(2 * g - 1) + 1;
}

int pluricanonical_dim(int g, int degree) { return (2 * degree - 1) * (g - 1); }

std::string QuadricSpace::format(const std::vector<mpq_class>& form) const
{
    const auto ints = linalg::primitive_rows({form});
    if (ints.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t m = 0; m < ints[0].size(); ++m) {
        const mpz_class& c = ints[0][m];
        if (c == 0)
            continue;
        const mpz_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1)
            os << a.get_str() << "*";
        os << monomial_name(monomials[m]);
        first = false;
    }
    return os.str();
}

nlohmann::json QuadricSpace::to_json() const
{
    nlohmann::json forms = nlohmann::json::array(), ns = nlohmann::json::array();
    for (const auto& f : basis)
        forms.push_back(format(f));
    for (const auto& f : ns_basis)
        ns.push_back(format(f));
    nlohmann::json j = {{"genus", g}, {"degree", degree}, {"dim", dim()}, {"precision", precision}, {"basis", forms}};
    if (degree == 2)
        j["ns_basis"] = ns;
    return j;
}

linalg::ZMatrix monomial_series(const std::vector<ZSeries>& forms, int degree, std::size_t prec)
{
    for (const auto& f : forms)
        if (f.size() < prec)
            throw InsufficientPrecision("need " + std::to_string(prec) + " coefficients, have " +
                                        std::to_string(f.size()));
    const int g = static_cast<int>(forms.size());
    std::map<Exponents, ZSeries> memo;
    for (int i = 0; i < g; ++i) {
        Exponents e(static_cast<std::size_t>(g), 0);
        e[static_cast<std::size_t>(i)] = 1;
        memo[e] = ZSeries(forms[static_cast<std::size_t>(i)].begin(),
                          forms[static_cast<std::size_t>(i)].begin() + static_cast<long>(prec));
    }
    for (int d = 2; d <= degree; ++d)
        for (const auto& e : monomials(g, d)) {
            std::size_t j = 0;
            while (e[j] == 0)
                ++j;
            Exponents parent = e;
            --parent[j];
            Exponents unit(static_cast<std::size_t>(g), 0);
            unit[j] = 1;
            memo[e] = qseries::mul(memo.at(parent), memo.at(unit), prec);
        }
    linalg::ZMatrix out;
    for (const auto& e : monomials(g, degree))
        out.push_back(memo.at(e));
    return out;
}

QuadricSpace vanishing_forms(const std::vector<ZSeries>& forms, int degree, int certify_genus)
{
    if (forms.empty())
        throw std::invalid_argument("vanishing_forms: no forms");
    QuadricSpace q;
    q.g = static_cast<int>(forms.size());
    q.degree = degree;
    q.monomials = monomials(q.g, degree);
    q.precision = certified_precision(certify_genus, degree);
    const auto s = monomial_series(forms, degree, q.precision);
    q.basis = linalg::kernel(linalg::to_q(transpose(s, q.precision, mpz_class(0))), q.monomials.size());
    if (degree == 2)
        q.ns_basis = nonsquare_subspace(q).ns_basis;
    return q;
}

QuadricSpace vanishing_forms(const nfdata::StarBasis& basis, int degree)
{
    return vanishing_forms(basis.series, degree, basis.genus());
}

QuadricSpace nonsquare_subspace(const QuadricSpace& L2)
{
    if (L2.degree != 2)
        throw std::invalid_argument("nonsquare_subspace needs quadrics");
    QuadricSpace out = L2;
    std::vector<std::size_t> squares;
    for (std::size_t m = 0; m < L2.monomials.size(); ++m)
        if (std::find(L2.monomials[m].begin(), L2.monomials[m].end(), 2) != L2.monomials[m].end())
            squares.push_back(m);
    linalg::QMatrix a;
    for (std::size_t sq : squares) {
        std::vector<mpq_class> row;
        for (const auto& form : L2.basis)
            row.push_back(form[sq]);
        a.push_back(std::move(row));
    }
    linalg::QMatrix forms;
    for (const auto& c : linalg::kernel(a, L2.basis.size())) {
        std::vector<mpq_class> f(L2.monomials.size(), 0);
        for (std::size_t r = 0; r < c.size(); ++r)
            if (c[r] != 0)
                for (std::size_t m = 0; m < f.size(); ++m)
                    f[m] += c[r] * L2.basis[r][m];
        forms.push_back(std::move(f));
    }
    out.ns_basis = linalg::rref(std::move(forms)).rows;
    return out;
}

std::vector<mpq_class> apply_signs(const std::vector<Exponents>& monos, const std::vector<mpq_class>& form,
                                   const std::vector<int>& eps)
{
    std::vector<mpq_class> out = form;
    for (std::size_t m : odd_columns(monos, eps))
        out[m] = -out[m];
    return out;
}

nlohmann::json SignPattern::to_json() const
{
    return {{"epsilons", epsilons},
            {"minus_blocks", minus_blocks},
            {"plus_blocks", plus_blocks},
            {"minus_dim", minus_dim},
            {"plus_dim", plus_dim}};
}

std::pair<int, int> quotient_window(int g, bool odd_level)
{
    int lo = 2;
    if (odd_level && g > 5)
        lo = std::max(lo, (g - 4) / 2);
    return {lo, (g + 1) / 2};
}

nlohmann::json SearchStats::to_json() const
{
    nlohmann::json j = {{"degree", degree},
                        {"dim", dim},
                        {"patterns_tested", patterns_tested},
                        {"modular_survivors", modular_survivors},
                        {"prime", prime}};
    if (dim_ns >= 0)
        j["dim_ns"] = dim_ns;
    return j;
}

SearchResult sign_pattern_search(const nfdata::StarBasis& basis, const SearchOptions& options)
{
    return run_search(basis, options, true);
}

SearchResult sign_pattern_search_serial(const nfdata::StarBasis& basis, const SearchOptions& options)
{
    return run_search(basis, options, false);
}

int subspace_point_count(const std::vector<QuadricSpace>& ideal, const std::vector<int>& keep)
{
    if (keep.empty() || keep.size() > 3)
        throw std::invalid_argument("subspace_point_count supports 1 to 3 coordinates");
    const auto forms = restrict_forms(ideal, keep);
    if (keep.size() == 1)
        return forms.empty() ? 1 : 0;
    if (keep.size() == 2)
        return count_binary(forms);
    if (forms.size() < 2)
        throw Contradiction("a plane section of the curve is not finite");
    // each count is exact for a generic coordinate change; take the value
    // two of three changes agree on
    std::mt19937 rng(12345);
    std::map<int, int> votes;
    for (int trial = 0; trial < 3; ++trial)
        ++votes[count_ternary_once(forms, rng)];
    for (const auto& [value, n] : votes)
        if (n >= 2)
            return value;
    throw Contradiction("point counts disagree across coordinate changes");
}

nlohmann::json Resolution::to_json() const
{
    static const char* names[] = {"resolved", "unresolved", "contradiction"};
    nlohmann::json os = nlohmann::json::array();
    for (const auto& o : orientations)
        os.push_back({{"plus_blocks", o.plus_blocks},
                      {"g_u", o.g_u},
                      {"fixed_points", o.fixed_points},
                      {"rejected", o.rejected},
                      {"reason", o.reason},
                      {"evidence", o.evidence}});
    return {{"status", names[static_cast<int>(status)]}, {"chosen", chosen}, {"orientations", os}, {"counts", counts}};
}

std::vector<ZSeries> block_series(const nfdata::StarBasis& basis, const std::vector<int>& blocks)
{
    std::vector<ZSeries> out;
    for (int b : blocks) {
        const auto& blk = basis.blocks.at(static_cast<std::size_t>(b));
        for (int i = 0; i < blk.dim; ++i)
            out.push_back(basis.series[static_cast<std::size_t>(blk.offset + i)]);
    }
    return out;
}

Resolution resolve_sign(const nfdata::StarBasis& basis, const SignPattern& pattern, const SearchOptions& options,
                        const criteria::Schedule& schedule)
{
    const int g = basis.genus();
    Resolution res;
    const std::vector<std::vector<int>> sides{pattern.plus_blocks, pattern.minus_blocks};
    for (const auto& plus : sides) {
        Orientation o;
        o.plus_blocks = plus;
        for (int b : plus)
            o.g_u += basis.blocks[static_cast<std::size_t>(b)].dim;
        o.fixed_points = 2 * g + 2 - 4 * o.g_u;
        const bool forced_ok = std::all_of(options.forced_blocks.begin(), options.forced_blocks.end(), [&](int f) {
            return std::find(plus.begin(), plus.end(), f) != plus.end();
        });
        if (o.g_u < options.window_lo || o.g_u > options.window_hi || !forced_ok) {
            o.rejected = true;
            o.reason = "window";
        } else if (o.fixed_points < 0) {
            o.rejected = true;
            o.reason = "hurwitz";
        } else {
            std::vector<nfdata::NewformOrbit> quotient;
            for (int b : plus)
                quotient.push_back(basis.orbits[static_cast<std::size_t>(b)]);
            const auto v = criteria::dominance(basis.orbits, quotient, basis.level, schedule);
            o.evidence["dominance"] = v.to_json();
            if (v.excluded) {
                o.rejected = true;
                o.reason = "dominance";
            }
        }
        res.orientations.push_back(std::move(o));
    }

    // coordinates of each side
    std::array<std::vector<int>, 2> coords;
    for (std::size_t s = 0; s < 2; ++s)
        for (int b : sides[s]) {
            const auto& blk = basis.blocks[static_cast<std::size_t>(b)];
            for (int i = 0; i < blk.dim; ++i)
                coords[s].push_back(blk.offset + i);
        }
    const bool countable = coords[0].size() <= 3 && coords[1].size() <= 3;
    if (countable) {
        std::vector<QuadricSpace> ideal;
        if (g == 3) {
            ideal.push_back(vanishing_forms(basis, 4));
        } else {
            ideal.push_back(vanishing_forms(basis, 2));
            ideal.push_back(vanishing_forms(basis, 3));
        }
        // points with every coordinate of side s equal to zero
        std::array<int, 2> zero_on;
        for (std::size_t s = 0; s < 2; ++s)
            zero_on[s] = subspace_point_count(ideal, coords[1 - s]);
        res.counts = {{"zero_on_plus_side", zero_on[0]}, {"zero_on_minus_side", zero_on[1]}};
        for (std::size_t s = 0; s < 2; ++s) {
            auto& o = res.orientations[s];
            if (o.rejected)
                continue;
            if (zero_on[s] != o.fixed_points || zero_on[1 - s] != 0) {
                o.rejected = true;
                o.reason = "fixed points";
            }
            o.evidence["fixed_point_count"] = zero_on[s];
        }
    }
    int alive = 0;
    for (std::size_t s = 0; s < 2; ++s)
        if (!res.orientations[s].rejected) {
            ++alive;
            res.chosen = static_cast<int>(s);
        }
    if (alive == 1)
        res.status = Resolution::Status::resolved;
    else if (alive == 0)
        res.status = Resolution::Status::contradiction;
    else {
        res.status = Resolution::Status::unresolved;
        res.chosen = -1;
    }
    return res;
}

nlohmann::json ProbeResult::to_json() const
{
    return {{"g_u", g_u}, {"degree", degree}, {"expected", expected}, {"computed", computed}, {"consistent", consistent}};
}

ProbeResult quotient_petri_probe(const std::vector<ZSeries>& lifted, int ambient_genus)
{
    ProbeResult r;
    r.g_u = static_cast<int>(lifted.size());
    if (r.g_u < 3)
        throw std::invalid_argument("quotient_petri_probe needs at least three differentials");
    r.degree = r.g_u == 3 ? 4 : 2;
    r.expected = r.g_u == 3 ? 1 : (r.g_u - 2) * (r.g_u - 3) / 2;
    r.computed = vanishing_forms(lifted, r.degree, ambient_genus).dim();
    r.consistent = r.computed == r.expected;
    return r;
}

} // namespace x0star::petri
