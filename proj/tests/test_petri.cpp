#include "x0star/petri.hpp"

#include "x0star/errors.hpp"
#include "x0star/genus.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace x0star;
using namespace x0star::petri;
using arith::i64;

namespace {

const nfdata::DataSource& data()
{
    static const nfdata::DataSource src = nfdata::DataSource::from_environment();
    return src;
}

const nfdata::StarBasis& basis(i64 N)
{
    static std::map<i64, nfdata::StarBasis> memo;
    auto it = memo.find(N);
    if (it == memo.end())
        it = memo.emplace(N, nfdata::star_basis(data(), arith::SquarefreeLevel(N))).first;
    return it->second;
}

const std::vector<i64> kGenus4{201, 219, 321, 335, 345, 399, 483};
const std::vector<i64> kOddSurvivors{201, 219, 321, 335, 345, 399, 483, 371, 465, 551, 555, 645, 663, 265, 447,
                                     561, 609, 615, 309, 437, 861, 665, 1155, 689, 705, 987, 1365, 957, 1055};

SearchOptions odd_options(const nfdata::StarBasis& b)
{
    SearchOptions o;
    std::tie(o.window_lo, o.window_hi) = quotient_window(b.genus(), b.level % 2 == 1);
    return o;
}

std::vector<int> blocks_at(const nfdata::StarBasis& b, std::set<i64> levels)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < b.blocks.size(); ++i)
        if (levels.count(b.blocks[i].level))
            out.push_back(static_cast<int>(i));
    return out;
}

// Quadratic form in x1..x5 from (coefficient, i, j) terms, 1-based.
std::vector<mpq_class> quadric(const std::vector<Exponents>& monos, std::vector<std::tuple<int, int, int>> terms)
{
    std::vector<mpq_class> f(monos.size(), 0);
    for (auto [c, i, j] : terms) {
        Exponents e(monos.front().size(), 0);
        ++e[static_cast<std::size_t>(i - 1)];
        ++e[static_cast<std::size_t>(j - 1)];
        const auto it = std::find(monos.begin(), monos.end(), e);
        REQUIRE(it != monos.end());
        f[static_cast<std::size_t>(it - monos.begin())] += c;
    }
    return f;
}

QuadricSpace space_of(int g, int degree, linalg::QMatrix forms)
{
    QuadricSpace q;
    q.g = g;
    q.degree = degree;
    q.monomials = monomials(g, degree);
    q.basis = std::move(forms);
    return q;
}

bool contains(const QuadricSpace& L, const std::vector<mpq_class>& f)
{
    auto m = L.basis;
    m.push_back(f);
    return linalg::rank(m) == L.basis.size();
}

} // namespace

TEST_CASE("monomial bookkeeping")
{
    const auto m = monomials(3, 2);
    REQUIRE(m.size() == 6);
    CHECK(m.front() == Exponents{2, 0, 0});
    CHECK(m[1] == Exponents{1, 1, 0});
    CHECK(m.back() == Exponents{0, 0, 2});
    CHECK(monomials(5, 3).size() == 35);
    CHECK(certified_precision(5, 2) == 19);
    CHECK(pluricanonical_dim(5, 2) == 12);
    CHECK(pluricanonical_dim(3, 4) == 14);
}

TEST_CASE("quadrics through the canonical curve of level 645")
{
    const auto& b = basis(645);
    const auto L2 = vanishing_forms(b, 2);
    REQUIRE(L2.dim() == 3);
    REQUIRE(L2.ns_basis.size() == 1);

    const auto& m = L2.monomials;
    const linalg::QMatrix printed{
        quadric(m, {{6, 1, 1}, {5, 1, 2}, {7, 1, 3}, {-11, 2, 3}, {-9, 3, 3}, {2, 4, 4}, {48, 4, 5}, {16, 5, 5}}),
        quadric(m, {{2, 1, 2}, {3, 2, 2}, {-2, 1, 3}, {4, 2, 3}, {-3, 3, 3}, {-4, 4, 4}, {16, 5, 5}}),
        quadric(m, {{1, 2, 4}, {-1, 3, 4}, {-2, 1, 5}, {1, 2, 5}, {1, 3, 5}}),
    };
    CHECK(linalg::rref(printed).rows == L2.basis);
    CHECK(contains(space_of(5, 2, L2.ns_basis), printed[2]));
    CHECK(L2.format(L2.ns_basis[0]) == "2*x1*x5 - x2*x4 - x2*x5 + x3*x4 - x3*x5");
}

TEST_CASE("genus-4 levels carry one quadric with square terms")
{
    for (i64 N : kGenus4) {
        INFO("N=" << N);
        const auto L2 = vanishing_forms(basis(N), 2);
        CHECK(L2.dim() == 1);
        CHECK(L2.ns_basis.empty());
    }
}

TEST_CASE("L2 has the Petri dimension for every odd survivor")
{
    for (i64 N : kOddSurvivors) {
        const int g = basis(N).genus();
        INFO("N=" << N);
        CHECK(vanishing_forms(basis(N), 2).dim() == (g - 2) * (g - 3) / 2);
    }
}

TEST_CASE("sign-pattern search over the odd survivors")
{
    REQUIRE(kOddSurvivors.size() == 29);
    for (i64 N : kOddSurvivors) {
        INFO("N=" << N);
        const auto& b = basis(N);
        const auto r = sign_pattern_search(b, odd_options(b));
        if (N != 645) {
            CHECK(r.patterns.empty());
            continue;
        }
        REQUIRE(r.patterns.size() == 1);
        const auto& p = r.patterns[0];
        CHECK(p.minus_blocks == blocks_at(b, {645}));
        CHECK(p.minus_dim == 2);
        CHECK(p.epsilons == std::vector<int>{1, 1, 1, -1, -1});
        CHECK(r.stats.dim_ns == 1);
    }
}

TEST_CASE("parallel and serial searches agree")
{
    for (i64 N : std::vector<i64>{645, 555, 1155, 1365, 689}) {
        INFO("N=" << N);
        const auto& b = basis(N);
        const auto o = odd_options(b);
        const auto a = sign_pattern_search(b, o);
        const auto s = sign_pattern_search_serial(b, o);
        CHECK(a.stats.to_json() == s.stats.to_json());
        REQUIRE(a.patterns.size() == s.patterns.size());
        for (std::size_t i = 0; i < a.patterns.size(); ++i)
            CHECK(a.patterns[i].to_json() == s.patterns[i].to_json());
    }
}

TEST_CASE("a sign pattern preserves L2 exactly when odd parts vanish")
{
    const auto& b = basis(645);
    const auto L2 = vanishing_forms(b, 2);
    const std::vector<int> good{1, 1, 1, -1, -1};
    for (const auto& q : L2.basis)
        CHECK(contains(L2, apply_signs(L2.monomials, q, good)));
    // every other block-constant pattern moves some quadric off the curve
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<int> eps{1, 1, 1, 1, 1};
        for (int blk = 0; blk < 4; ++blk)
            if (mask >> blk & 1U)
                for (int i = 0; i < b.blocks[static_cast<std::size_t>(blk)].dim; ++i)
                    eps[static_cast<std::size_t>(b.blocks[static_cast<std::size_t>(blk)].offset + i)] = -1;
        if (mask == 15 || eps == good || eps == std::vector<int>{-1, -1, -1, 1, 1})
            continue;
        bool all_in = true;
        for (const auto& q : L2.basis)
            all_in = all_in && contains(L2, apply_signs(L2.monomials, q, eps));
        INFO("mask=" << mask);
        CHECK_FALSE(all_in);
    }
}

TEST_CASE("dim L2 does not depend on the chosen basis")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (i64 N : std::vector<i64>{645, 309, 665}) {
        const auto& b = basis(N);
        const auto g = static_cast<std::size_t>(b.genus());
        // unipotent upper-triangular change of basis
        std::vector<ZSeries> mixed = b.series;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i + 1; j < g; ++j) {
                const int c = d(rng);
                for (std::size_t e = 0; e < mixed[i].size(); ++e)
                    mixed[i][e] += c * b.series[j][e];
            }
        INFO("N=" << N);
        CHECK(vanishing_forms(mixed, 2, b.genus()).dim() == vanishing_forms(b, 2).dim());
    }
}

TEST_CASE("short series are refused")
{
    auto s = basis(645).series;
    for (auto& f : s)
        f.resize(10);
    CHECK_THROWS_AS(vanishing_forms(s, 2, 5), InsufficientPrecision);
}

TEST_CASE("points on coordinate subspaces")
{
    // x1^2 - x2*x3 and x1*x4 in P^3
    const auto m = monomials(4, 2);
    const auto L = space_of(4, 2, {quadric(m, {{1, 1, 1}, {-1, 2, 3}}), quadric(m, {{1, 1, 4}})});
    CHECK(subspace_point_count({L}, {1, 2}) == 2); // x2*x3 = 0
    CHECK(subspace_point_count({L}, {0, 1}) == 1); // x1^2 = 0
    CHECK(subspace_point_count({L}, {3}) == 1);
    CHECK(subspace_point_count({L}, {0}) == 0);
    CHECK_THROWS_AS(subspace_point_count({L}, {0, 1, 2}), Contradiction);
    CHECK_THROWS_AS(subspace_point_count({L}, {0, 1, 2, 3}), std::invalid_argument);

    // two conics in the plane x4 = 0
    const auto M = space_of(4, 2, {quadric(m, {{1, 1, 2}}), quadric(m, {{1, 1, 3}, {-1, 3, 3}})});
    CHECK(subspace_point_count({M}, {0, 1, 2}) == 3);
    const auto G = space_of(4, 2, {quadric(m, {{1, 1, 1}, {1, 2, 2}, {-2, 3, 3}}), quadric(m, {{1, 1, 1}, {-1, 2, 2}})});
    CHECK(subspace_point_count({G}, {0, 1, 2}) == 4);
}

TEST_CASE("the involution of level 645 fixes four points")
{
    const auto& b = basis(645);
    const auto o = odd_options(b);
    const auto r = sign_pattern_search(b, o);
    REQUIRE(r.patterns.size() == 1);
    const auto res = resolve_sign(b, r.patterns[0], o);
    REQUIRE(res.status == Resolution::Status::resolved);
    CHECK(res.winner().g_u == 2);
    CHECK(res.winner().fixed_points == 4);
    CHECK(res.winner().plus_blocks == blocks_at(b, {645}));
    CHECK(res.counts.at("zero_on_minus_side") == 4);
    CHECK(res.counts.at("zero_on_plus_side") == 0);
}

TEST_CASE("quotient probes")
{
    SUBCASE("957 over 319")
    {
        const auto& b = basis(957);
        const auto p = quotient_petri_probe(block_series(b, blocks_at(b, {319})), b.genus());
        CHECK(p.g_u == 4);
        CHECK(p.expected == 1);
        CHECK(p.computed == 0);
        CHECK_FALSE(p.consistent);
    }
    SUBCASE("705 over 235")
    {
        const auto& b = basis(705);
        const auto p = quotient_petri_probe(block_series(b, blocks_at(b, {235})), b.genus());
        CHECK(p.g_u == 5);
        CHECK(p.expected == 3);
        CHECK(p.computed == 0);
    }
    SUBCASE("1378 over 689 and over 689 with 106")
    {
        const auto& b = basis(1378);
        // genus 19, not 20: the level-689 orbits have dimensions 1, 2, 2, 3
        REQUIRE(b.genus() == 19);
        CHECK(vanishing_forms(b, 2).dim() == 136);
        const auto p9 = quotient_petri_probe(block_series(b, blocks_at(b, {53, 689})), b.genus());
        const auto p10 = quotient_petri_probe(block_series(b, blocks_at(b, {53, 689, 106})), b.genus());
        CHECK(p9.g_u == 9);
        CHECK(p9.computed == 1);
        CHECK(p10.g_u == 10);
        CHECK(p10.computed == 1);
        CHECK_FALSE(p9.consistent);
        CHECK_FALSE(p10.consistent);
    }
}
