#include "x0star/criteria.hpp"

#include "x0star/frobenius.hpp"
#include "x0star/genus.hpp"

#include <algorithm>
#include <stdexcept>

namespace x0star::criteria {

namespace {

int total_dim(const std::vector<NewformOrbit>& orbits)
{
    int g = 0;
    for (const auto& o : orbits)
        g += o.dim;
    return g;
}

void require_good_reduction(i64 N, i64 p)
{
    if (!arith::is_prime(p) || N % p == 0)
        throw std::invalid_argument("prime " + std::to_string(p) + " is not of good reduction for level " +
                                    std::to_string(N));
}

std::string str(const mpz_class& z) { return z.get_str(); }

} // namespace

nlohmann::json ExclusionVerdict::to_json() const
{
    return {{"level", level}, {"criterion", criterion}, {"params", params}, {"excluded", excluded}, {"witness", witness}};
}

int place_parity(const std::vector<mpz_class>& counts, int n)
{
    const mpz_class places = frobenius::degree_places(counts, n);
    return mpz_odd_p(places.get_mpz_t()) ? 1 : 0;
}

ExclusionVerdict lemma1_parity(const std::vector<NewformOrbit>& orbits, i64 N, i64 p, int k_max)
{
    require_good_reduction(N, p);
    const int g = total_dim(orbits);
    if (g <= 2)
        throw std::invalid_argument("lemma1_parity needs genus > 2");
    const auto counts = frobenius::point_counts(orbits, p, 2 * k_max + 1);
    ExclusionVerdict v;
    v.level = N;
    v.criterion = "lemma1";
    v.params = {{"p", p}, {"k_max", k_max}};
    long sum = 0;
    nlohmann::json parities = nlohmann::json::array();
    for (int k = 0; k <= k_max; ++k) {
        const int n = 2 * k + 1;
        const int par = place_parity(counts, n);
        parities.push_back(par);
        sum += static_cast<long>(n) * par;
        if (sum > 2 * g + 2) {
            v.excluded = true;
            v.witness = {{"genus", g}, {"k", k}, {"partial_sum", sum}, {"bound", 2 * g + 2}, {"parities", parities}};
            return v;
        }
    }
    v.witness = {{"genus", g}, {"partial_sum", sum}, {"bound", 2 * g + 2}, {"parities", parities}};
    return v;
}

ExclusionVerdict lemma1_parity(const nfdata::DataSource& src, i64 N, i64 p, int k_max)
{
    return lemma1_parity(src.load_orbits(arith::SquarefreeLevel(N)), N, p, k_max);
}

bool reverify(const ExclusionVerdict& v, const nfdata::DataSource& src)
{
    if (!v.excluded)
        return false;
    if (v.criterion == "lemma1") {
        const auto orbits = src.load_orbits(arith::SquarefreeLevel(v.level));
        const i64 p = v.params.at("p");
        const int k = v.witness.at("k");
        const int g = total_dim(orbits);
        long sum = 0;
        for (int j = 0; j <= k; ++j) {
            const int n = 2 * j + 1;
            // fresh counts per degree, no shared intermediates
            std::vector<mpz_class> counts;
            for (int d = 1; d <= n; ++d)
                counts.push_back(frobenius::point_count(orbits, p, d));
            sum += static_cast<long>(n) * place_parity(counts, n);
        }
        return sum == v.witness.at("partial_sum").get<long>() && sum > 2 * g + 2;
    }
    if (v.criterion == "big-factor") {
        const auto orbits = src.load_orbits(arith::SquarefreeLevel(v.level));
        return big_factor(orbits, v.level, v.params.at("min_quotient_genus")).excluded;
    }
    if (v.criterion == "free-parity") {
        return free_involution_parity(src, v.level, v.params.at("p"), v.params.at("k")).excluded;
    }
    throw std::invalid_argument("reverify: unsupported criterion " + v.criterion);
}

std::vector<int> dimension_sums(const std::vector<NewformOrbit>& orbits)
{
    std::vector<bool> reach(static_cast<std::size_t>(total_dim(orbits)) + 1, false);
    reach[0] = true;
    for (const auto& o : orbits)
        for (std::size_t s = reach.size(); s-- > static_cast<std::size_t>(o.dim);)
            if (reach[s - static_cast<std::size_t>(o.dim)])
                reach[s] = true;
    std::vector<int> out;
    for (std::size_t s = 0; s < reach.size(); ++s)
        if (reach[s])
            out.push_back(static_cast<int>(s));
    return out;
}

ExclusionVerdict big_factor(const std::vector<NewformOrbit>& orbits, i64 N, int min_quotient_genus)
{
    if (N % 2 == 0)
        throw std::invalid_argument("big_factor applies to odd levels");
    const int g = total_dim(orbits);
    int biggest = 0;
    std::string which;
    for (const auto& o : orbits)
        if (o.dim > biggest) {
            biggest = o.dim;
            which = o.id();
        }
    const int lo = std::max(min_quotient_genus, g <= 5 ? 0 : (g - 4) / 2);
    const int hi = (g + 1) / 2;
    std::vector<int> fits;
    for (int s : dimension_sums(orbits))
        if (lo <= s && s <= hi)
            fits.push_back(s);
    ExclusionVerdict v;
    v.level = N;
    v.criterion = "big-factor";
    v.params = {{"min_quotient_genus", min_quotient_genus}};
    v.excluded = fits.empty();
    v.witness = {{"genus", g},
                 {"max_dim", biggest},
                 {"orbit", which},
                 {"window", {lo, hi}},
                 {"exceeds_half_plus_five", 2 * biggest > g + 5},
                 {"admissible_genera", fits}};
    return v;
}

ExclusionVerdict free_involution_parity(const nfdata::DataSource& src, i64 N, i64 p, int k)
{
    if (N % 2 == 0)
        throw std::invalid_argument("free_involution_parity takes the odd level N");
    require_good_reduction(2 * N, p);
    const arith::SquarefreeLevel L(N), L2(2 * N);
    const i64 g = genus::genus_x0_star(L), g2 = genus::genus_x0_star(L2);
    if (g2 != 2 * g - 1)
        throw std::invalid_argument("free_involution_parity needs g*(2N) = 2 g*(N) - 1");
    const mpz_class R = frobenius::point_count(src.load_orbits(L2), p, k);
    ExclusionVerdict v;
    v.level = N;
    v.criterion = "free-parity";
    v.params = {{"p", p}, {"k", k}};
    v.excluded = mpz_odd_p(R.get_mpz_t()) != 0;
    v.witness = {{"count", str(R)}, {"g_star", g}, {"g_star_2n", g2}};
    return v;
}

ExclusionVerdict dominance(const std::vector<NewformOrbit>& full, const std::vector<NewformOrbit>& candidate, i64 N,
                           i64 p, int n)
{
    require_good_reduction(N, p);
    const mpz_class a = frobenius::point_count(full, p, n);
    const mpz_class b = frobenius::point_count(candidate, p, n);
    ExclusionVerdict v;
    v.level = N;
    v.criterion = "dominance";
    v.params = {{"p", p}, {"n", n}, {"candidate_dim", total_dim(candidate)}};
    v.excluded = a > 2 * b;
    v.witness = {{"full", str(a)}, {"quotient", str(b)}, {"difference", str(a - 2 * b)}};
    return v;
}

ExclusionVerdict dominance(const std::vector<NewformOrbit>& full, const std::vector<NewformOrbit>& candidate, i64 N,
                           const Schedule& schedule)
{
    ExclusionVerdict last;
    last.level = N;
    last.criterion = "dominance";
    for (i64 p : schedule.primes) {
        if (N % p == 0)
            continue;
        for (int n = 1; n <= schedule.max_exponent; ++n) {
            last = dominance(full, candidate, N, p, n);
            if (last.excluded)
                return last;
        }
    }
    return last;
}

nlohmann::json RestrictResult::to_json() const
{
    static const char* names[] = {"inapplicable", "excluded", "forced"};
    return {{"level", level},
            {"p", p},
            {"status", names[static_cast<int>(status)]},
            {"reason", reason},
            {"forced_blocks", forced_blocks},
            {"forced_dim", forced_dim}};
}

RestrictResult restrict_filter(const std::vector<NewformOrbit>& orbits, i64 N, i64 p, const RestrictPrerequisites& pre)
{
    RestrictResult r;
    r.level = N;
    r.p = p;
    if (N % p != 0 || !arith::is_prime(p))
        throw std::invalid_argument("restrict_filter needs a prime divisor of N");
    const i64 M = N / p;
    if (M == 1) {
        r.reason = "N is prime";
        return r;
    }
    const i64 gm = genus::genus_x0_star(arith::SquarefreeLevel(M));
    const int g = total_dim(orbits);
    if (gm <= 2) {
        r.reason = "g*(N/p) <= 2";
        return r;
    }
    if (!pre.aut_trivial) {
        r.reason = "Aut(X0*(N/p)) not known trivial";
        return r;
    }
    if (!pre.nonhyperelliptic) {
        r.reason = "X0*(N/p) mod p not certified non-hyperelliptic";
        return r;
    }
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (M % orbits[i].level == 0) {
            r.forced_blocks.push_back(static_cast<int>(i));
            r.forced_dim += orbits[i].dim;
        }
    if (2 * gm > g + 1) {
        r.status = RestrictResult::Status::excluded;
        r.reason = "g*(N/p) > (g*(N)+1)/2";
    } else {
        r.status = RestrictResult::Status::forced;
    }
    return r;
}

} // namespace x0star::criteria
