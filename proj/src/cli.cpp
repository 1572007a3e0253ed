#include "x0star/cli.hpp"

#include "x0star/classnum.hpp"
#include "x0star/errors.hpp"
#include "x0star/frobenius.hpp"
#include "x0star/genus.hpp"
#include "x0star/jsonio.hpp"
#include "x0star/petri.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;
using nlohmann::json;

namespace x0star::cli {

fs::path default_data_root() { return fs::path(X0STAR_DEFAULT_DATA_DIR); }

fs::path data_root_from_environment()
{
    if (const char* env = std::getenv("X0STAR_DATA"); env && *env)
        return fs::path(env);
    return default_data_root();
}

json load_golden(const fs::path& data_root, const std::string& name)
{
    const fs::path path = data_root / "golden" / name;
    std::ifstream in(path);
    if (!in)
        throw MissingData("missing golden file " + path.string());
    return json::parse(in);
}

LowGenusTable LowGenusTable::load(const fs::path& data_root)
{
    const json j = load_golden(data_root, "low-genus.json");
    LowGenusTable t;
    for (i64 N : j.at("hyperelliptic_order2").get<std::vector<i64>>())
        t.hyperelliptic_order2.insert(N);
    for (const auto& [g, levels] : j.at("bielliptic").items())
        for (i64 N : levels.get<std::vector<i64>>())
            t.bielliptic[N] = std::stoi(g);
    return t;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::trivial: return "trivial";
    case Verdict::order2: return "order-2";
    case Verdict::nontrivial: return "non-trivial";
    case Verdict::hyperelliptic: return "hyperelliptic";
    case Verdict::bielliptic: return "bielliptic";
    case Verdict::out_of_scope: return "out-of-scope";
    case Verdict::unresolved: return "unresolved";
    }
    return "unresolved";
}

json ClassificationReport::to_json() const
{
    json j = {{"schema", kReportSchema},
              {"level", level},
              {"genus", genus},
              {"verdict", to_string(verdict)},
              {"group_order", group_order},
              {"evidence", evidence}};
    if (g_u >= 0) {
        j["g_u"] = g_u;
        j["quotient"] = {{"blocks", quotient_blocks}, {"orbits", quotient_orbits}};
    }
    j["model"] = model ? model->to_json() : json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// classification

Classifier::Classifier(const nfdata::DataSource& src, LowGenusTable table, criteria::Schedule schedule)
    : src_(src), table_(std::move(table)), schedule_(std::move(schedule))
{
}

ClassificationReport Classifier::classify(i64 N)
{
    {
        std::lock_guard lock(mu_);
        if (auto it = memo_.find(N); it != memo_.end())
            return *it->second;
    }
    // computed outside the lock: the restriction step recurses into divisors
    auto report = std::make_shared<const ClassificationReport>(run(N));
    std::lock_guard lock(mu_);
    return *memo_.emplace(N, std::move(report)).first->second;
}

std::vector<ClassificationReport> Classifier::classify_all(const std::vector<i64>& levels)
{
    std::vector<ClassificationReport> out(levels.size());
    std::vector<std::exception_ptr> errors(levels.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < levels.size(); ++i) {
        try {
            out[i] = classify(levels[i]);
        } catch (const MissingData& e) {
            out[i].level = levels[i];
            out[i].verdict = Verdict::unresolved;
            out[i].evidence.push_back({{"kind", "missing-data"}, {"message", e.what()}});
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

bool Classifier::aut_trivial(i64 M)
{
    const arith::SquarefreeLevel level(M);
    const auto g = genus::genus_x0_star(level);
    if (g <= 2 || table_.is_bielliptic(M))
        return false;
    if (g == 3)
        return true; // non-bielliptic genus 3
    if (!src_.missing_levels(level).empty())
        return false;
    try {
        return classify(M).verdict == Verdict::trivial;
    } catch (const MissingData&) {
        return false;
    }
}

bool Classifier::nonhyperelliptic_mod(i64 M, i64 p)
{
    const arith::SquarefreeLevel level(M);
    if (genus::genus_x0_star(level) <= 2)
        return false;
    if (p == 2) {
        if (M % 2 == 0)
            return false;
        std::call_once(screen_once_, [&] {
            try {
                screen_ = hypermodel::mod2_hyperelliptic_screen(src_);
            } catch (const MissingData&) {
            }
        });
        if (!screen_)
            return false;
        const auto& s = screen_->survivors;
        return std::find(s.begin(), s.end(), M) == s.end();
    }
    try {
        return !hypermodel::hyp_test_modp(nfdata::star_basis(src_, level).series, p).hyperelliptic;
    } catch (const MissingData&) {
        return false;
    } catch (const InsufficientPrecision&) {
        return false;
    }
}

namespace {

bool divides(i64 p, i64 N) { return N % p == 0; }

json exclusion(const criteria::ExclusionVerdict& v) { return {{"kind", "exclusion"}, {"verdict", v.to_json()}}; }

} // namespace

ClassificationReport Classifier::run(i64 N)
{
    const arith::SquarefreeLevel level(N);
    ClassificationReport r;
    r.level = N;
    r.genus = static_cast<int>(genus::genus_x0_star(level));
    const int g = r.genus;
    auto table_note = [&](const std::string& what) {
        r.evidence.push_back({{"kind", "table"}, {"table", "low-genus"}, {"entry", what}});
    };

    // genus gate
    if (g <= 1) {
        r.verdict = Verdict::out_of_scope;
        table_note("genus at most 1");
        return r;
    }
    if (g == 2) {
        r.verdict = Verdict::hyperelliptic;
        if (table_.hyperelliptic_order2.count(N)) {
            r.group_order = 2;
            table_note("genus 2, automorphism group of order 2");
        } else if (table_.is_bielliptic(N)) {
            r.group_order = 4;
            table_note("genus 2 and bielliptic, automorphism group of order 4");
        } else {
            table_note("genus 2, not listed");
        }
        return r;
    }
    if (table_.is_bielliptic(N)) {
        r.verdict = Verdict::bielliptic;
        r.group_order = 2;
        table_note("bielliptic of genus " + std::to_string(g));
        return r;
    }
    if (g == 3) {
        r.verdict = Verdict::out_of_scope;
        r.group_order = 1;
        table_note("genus 3, not bielliptic: automorphism group trivial");
        return r;
    }

    if (const auto missing = src_.missing_levels(level); !missing.empty()) {
        std::string list;
        for (i64 M : missing)
            list += (list.empty() ? "" : ", ") + std::to_string(M);
        throw MissingData("level " + std::to_string(N) + ": no fixtures for levels " + list);
    }
    const auto orbits = src_.load_orbits(level);
    const bool odd = N % 2 != 0;
    auto trivial = [&](json item) {
        r.evidence.push_back(std::move(item));
        r.verdict = Verdict::trivial;
        r.group_order = 1;
        return r;
    };

    for (i64 p : schedule_.primes) {
        if (divides(p, N))
            continue;
        const auto v = criteria::lemma1_parity(orbits, N, p, schedule_.k_max);
        if (v.excluded)
            return trivial(exclusion(v));
    }
    if (odd) {
        const auto v = criteria::big_factor(orbits, N);
        if (v.excluded)
            return trivial(exclusion(v));
    }

    petri::SearchOptions opt;
    std::tie(opt.window_lo, opt.window_hi) = petri::quotient_window(g, odd);
    std::set<int> forced;
    bool forced_at_2 = false;
    for (i64 p : level.primes()) {
        const i64 M = N / p;
        if (M == 1 || genus::genus_x0_star(arith::SquarefreeLevel(M)) <= 2)
            continue;
        criteria::RestrictPrerequisites pre;
        pre.aut_trivial = aut_trivial(M);
        if (!pre.aut_trivial)
            continue;
        pre.nonhyperelliptic = nonhyperelliptic_mod(M, p);
        if (!pre.nonhyperelliptic)
            continue;
        const auto rr = criteria::restrict_filter(orbits, N, p, pre);
        if (rr.status == criteria::RestrictResult::Status::excluded)
            return trivial({{"kind", "restrict"}, {"result", rr.to_json()}});
        if (rr.status == criteria::RestrictResult::Status::forced) {
            r.evidence.push_back({{"kind", "restrict"}, {"result", rr.to_json()}});
            forced.insert(rr.forced_blocks.begin(), rr.forced_blocks.end());
            forced_at_2 = forced_at_2 || p == 2;
        }
    }
    opt.forced_blocks.assign(forced.begin(), forced.end());

    // the involution of X0*(2M) lifting X0*(M) is fixed-point free when
    // g*(2M) = 2 g*(M) - 1
    if (!odd && forced_at_2) {
        const i64 M = N / 2;
        if (genus::delta_2n(arith::SquarefreeLevel(M)) == -1) {
            for (i64 p : schedule_.primes) {
                if (p == 2 || divides(p, N))
                    continue;
                for (int k = 1; k <= schedule_.max_exponent; ++k) {
                    const auto v = criteria::free_involution_parity(src_, M, p, k);
                    if (v.excluded)
                        return trivial(exclusion(v));
                }
            }
        }
    }

    nfdata::StarBasis basis;
    petri::SearchResult search;
    try {
        basis = nfdata::star_basis(src_, level);
        search = petri::sign_pattern_search(basis, opt);
    } catch (const InsufficientPrecision& e) {
        r.verdict = Verdict::unresolved;
        r.evidence.push_back({{"kind", "insufficient-precision"}, {"message", e.what()}});
        return r;
    }
    json found = json::array();
    for (const auto& pat : search.patterns)
        found.push_back(pat.to_json());
    json window = {opt.window_lo, opt.window_hi};
    json item = {{"kind", "sign-patterns"},
                 {"window", window},
                 {"forced_blocks", opt.forced_blocks},
                 {"stats", search.stats.to_json()},
                 {"patterns", found}};
    if (search.patterns.empty())
        return trivial(std::move(item));
    r.evidence.push_back(std::move(item));

    std::vector<petri::Orientation> winners;
    bool open = false;
    for (const auto& pat : search.patterns) {
        const auto res = petri::resolve_sign(basis, pat, opt, schedule_);
        r.evidence.push_back({{"kind", "resolution"}, {"pattern", pat.to_json()}, {"resolution", res.to_json()}});
        if (res.status == petri::Resolution::Status::resolved)
            winners.push_back(res.winner());
        else if (res.status == petri::Resolution::Status::unresolved)
            open = true;
    }
    if (open) {
        r.verdict = Verdict::unresolved;
        return r;
    }
    if (winners.empty()) {
        r.verdict = Verdict::trivial;
        r.group_order = 1;
        return r;
    }
    if (winners.size() > 1) {
        // several involutions; the group structure is not determined here
        r.verdict = Verdict::nontrivial;
        return r;
    }
    const auto& w = winners.front();
    r.verdict = Verdict::order2;
    r.group_order = 2;
    r.g_u = w.g_u;
    r.quotient_blocks = w.plus_blocks;
    for (int b : w.plus_blocks)
        r.quotient_orbits.push_back(basis.blocks[static_cast<std::size_t>(b)].id());
    if (w.g_u == 2) {
        const auto [u, v] = hypermodel::quotient_pair(basis, w.plus_blocks);
        r.model = hypermodel::genus2_quotient_model(u, v, g);
    }
    return r;
}

std::vector<i64> in_scope_levels(const nfdata::DataSource& src, const LowGenusTable& table)
{
    std::vector<i64> out;
    for (i64 N : src.stored_levels()) {
        if (!arith::is_squarefree(N))
            continue;
        const arith::SquarefreeLevel level(N);
        if (!src.missing_levels(level).empty() || table.is_bielliptic(N))
            continue;
        if (genus::genus_x0_star(level) > 3)
            out.push_back(N);
    }
    return out;
}

// ---------------------------------------------------------------------------
// golden tables

int TableReport::count(const std::string& status) const
{
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.status == status; }));
}

int TableReport::exit_code() const
{
    if (count("mismatch"))
        return 1;
    return count("unverifiable") ? 2 : 0;
}

json TableReport::to_json() const
{
    json rs = json::array();
    for (const auto& r : rows) {
        json j = {{"key", r.key}, {"expected", r.expected}, {"computed", r.computed}, {"status", r.status}};
        if (!r.note.empty())
            j["note"] = r.note;
        rs.push_back(std::move(j));
    }
    return {{"table", id},
            {"rows", rs},
            {"summary",
             {{"match", count("match")}, {"mismatch", count("mismatch")}, {"unverifiable", count("unverifiable")}}}};
}

std::vector<std::string> table_ids()
{
    return {"low-genus",  "candidates",     "prop4-lists",     "lemma5-A",      "r-table",
            "discard-lists", "even-discards", "odd-splittings", "even-splittings"};
}

std::string normalize_splitting(const std::string& s)
{
    std::vector<std::pair<i64, int>> parts;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, '+')) {
        const auto us = tok.find('_');
        if (us == std::string::npos)
            throw std::invalid_argument("bad splitting term '" + tok + "'");
        parts.emplace_back(std::stoll(tok.substr(us + 1)), std::stoi(tok.substr(0, us)));
    }
    std::sort(parts.begin(), parts.end());
    return nfdata::format_signature(parts);
}

namespace {

// Evaluates rows in parallel. A row function returns the computed value;
// MissingData marks the row unverifiable, anything else propagates.
template <class Fn>
void evaluate(std::vector<TableRow>& rows, Fn&& fn)
{
    std::vector<std::exception_ptr> errors(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = rows[i];
        try {
            row.computed = fn(i, row);
            row.status = row.computed == row.expected ? "match" : "mismatch";
        } catch (const MissingData& e) {
            row.computed = nullptr;
            row.status = "unverifiable";
            row.note = e.what();
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::vector<i64> sorted(std::vector<i64> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

json count_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

TableReport low_genus(const fs::path& root)
{
    const auto t = LowGenusTable::load(root);
    TableReport rep{"low-genus", {}};
    for (i64 N : t.hyperelliptic_order2)
        rep.rows.push_back({"g*(" + std::to_string(N) + ")", 2, nullptr, "", ""});
    for (const auto& [N, g] : t.bielliptic)
        rep.rows.push_back({"g*(" + std::to_string(N) + ")", g, nullptr, "", ""});
    evaluate(rep.rows, [](std::size_t, const TableRow& row) {
        const i64 N = std::stoll(row.key.substr(3));
        return json(genus::genus_x0_star(arith::SquarefreeLevel(N)));
    });
    return rep;
}

TableReport candidates(const fs::path& root)
{
    const json golden = load_golden(root, "candidates.json");
    TableReport rep{"candidates", {}};
    for (const auto& row : golden.at("rows"))
        rep.rows.push_back({row.at("key"), row.at("count"), nullptr, "", ""});
    for (auto& row : rep.rows) {
        std::size_t n = 0;
        if (row.key == "odd-raw")
            n = genus::gonality_candidates_raw().size();
        else if (row.key == "odd")
            n = genus::gonality_candidates().size();
        else if (row.key == "hyp2")
            n = genus::hyp2_candidates().size();
        else
            throw std::invalid_argument("unknown candidate list " + row.key);
        row.computed = n;
        row.status = row.computed == row.expected ? "match" : "mismatch";
    }
    return rep;
}

TableReport prop4_lists(const fs::path& root)
{
    const json golden = load_golden(root, "prop4-lists.json");
    const auto lists = genus::prop4_classify();
    TableReport rep{"prop4-lists", {}};
    for (int delta = -1; delta <= 2; ++delta) {
        TableRow row;
        row.key = "delta=" + std::to_string(delta);
        row.expected = sorted(golden.at("lists").at(std::to_string(delta)).get<std::vector<i64>>());
        row.computed = lists.with_delta(delta);
        row.status = row.computed == row.expected ? "match" : "mismatch";
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

TableReport lemma5_a(const nfdata::DataSource& src, const fs::path& root)
{
    const json golden = load_golden(root, "lemma5-a.json");
    TableReport rep{"lemma5-A", {}};
    for (const auto& row : golden.at("rows"))
        rep.rows.push_back({"A(" + std::to_string(row.at("n").get<i64>()) + "," + std::to_string(row.at("m").get<int>()) +
                                ")",
                            row.at("A"), nullptr, "", ""});
    evaluate(rep.rows, [&](std::size_t i, const TableRow&) {
        const auto& g = golden.at("rows")[i];
        const i64 N = g.at("n");
        const int m = g.at("m");
        const auto count = frobenius::point_count(src.load_orbits(arith::SquarefreeLevel(N)), 2, m);
        return count_json(count - 2 * ((mpz_class(1) << m) + 1));
    });
    TableRow surv{"survivors", golden.at("survivors"), nullptr, "", ""};
    TableRow par{"parity-discards", golden.at("parity_discards"), nullptr, "", ""};
    try {
        const auto screen = hypermodel::mod2_hyperelliptic_screen(src);
        surv.computed = screen.survivors;
        par.computed = screen.dropped_by_parity;
        surv.status = surv.computed == surv.expected ? "match" : "mismatch";
        par.status = par.computed == par.expected ? "match" : "mismatch";
    } catch (const MissingData& e) {
        surv.status = par.status = "unverifiable";
        surv.note = par.note = e.what();
    }
    rep.rows.push_back(std::move(surv));
    rep.rows.push_back(std::move(par));
    return rep;
}

TableReport r_table(const nfdata::DataSource& src, const fs::path& root)
{
    const json golden = load_golden(root, "r-table.json");
    TableReport rep{"r-table", {}};
    for (const auto& row : golden.at("rows"))
        rep.rows.push_back({"R(" + std::to_string(2 * row.at("n").get<i64>()) + "," +
                                std::to_string(row.at("p").get<i64>()) + "^" + std::to_string(row.at("k").get<int>()) +
                                ")",
                            row.at("count"), nullptr, "", ""});
    evaluate(rep.rows, [&](std::size_t i, const TableRow&) {
        const auto& g = golden.at("rows")[i];
        const i64 N = g.at("n");
        const auto orbits = src.load_orbits(arith::SquarefreeLevel(2 * N));
        return count_json(frobenius::point_count(orbits, g.at("p").get<i64>(), g.at("k").get<int>()));
    });
    return rep;
}

TableReport discard_lists(const nfdata::DataSource& src, const fs::path& root)
{
    const json golden = load_golden(root, "discard-lists.json");
    TableReport rep{"discard-lists", {}};
    std::vector<std::pair<i64, i64>> cases; // (N, p), p = 0 for the big factor
    for (const auto& [p, levels] : golden.at("lemma1").items())
        for (i64 N : levels.get<std::vector<i64>>())
            cases.emplace_back(N, std::stoll(p));
    for (i64 N : golden.at("big_factor").get<std::vector<i64>>())
        cases.emplace_back(N, 0);
    for (const auto& [N, p] : cases)
        rep.rows.push_back({(p ? "parity p=" + std::to_string(p) : std::string("big-factor")) + " N=" +
                                std::to_string(N),
                            true, nullptr, "", ""});
    evaluate(rep.rows, [&](std::size_t i, TableRow&) {
        const auto [N, p] = cases[i];
        const auto orbits = src.load_orbits(arith::SquarefreeLevel(N));
        if (p)
            return json(criteria::lemma1_parity(orbits, N, p).excluded);
        return json(criteria::big_factor(orbits, N).excluded);
    });
    return rep;
}

TableReport even_discards(const nfdata::DataSource& src, const fs::path& root)
{
    const json golden = load_golden(root, "even-discards.json");
    TableReport rep{"even-discards", {}};
    for (const auto& row : golden.at("rows"))
        rep.rows.push_back({"parity p=" + std::to_string(row.at("p").get<i64>()) +
                                " N=" + std::to_string(2 * row.at("n").get<i64>()),
                            true, nullptr, "", ""});
    evaluate(rep.rows, [&](std::size_t i, const TableRow&) {
        const auto& g = golden.at("rows")[i];
        return json(criteria::lemma1_parity(src, 2 * g.at("n").get<i64>(), g.at("p").get<i64>()).excluded);
    });
    return rep;
}

TableReport splittings(const nfdata::DataSource& src, const fs::path& root, const std::string& id, i64 factor)
{
    const json golden = load_golden(root, id + ".json");
    TableReport rep{id, {}};
    for (const auto& row : golden.at("rows"))
        rep.rows.push_back({"N=" + std::to_string(factor * row.at("n").get<i64>()),
                            normalize_splitting(row.at("splitting")), nullptr, "", ""});
    evaluate(rep.rows, [&](std::size_t i, const TableRow&) {
        const i64 N = factor * golden.at("rows")[i].at("n").get<i64>();
        return json(nfdata::format_signature(nfdata::splitting_signature(src, arith::SquarefreeLevel(N))));
    });
    return rep;
}

} // namespace

TableReport reproduce_table(const std::string& id, const nfdata::DataSource& src, const fs::path& data_root)
{
    if (id == "low-genus")
        return low_genus(data_root);
    if (id == "candidates")
        return candidates(data_root);
    if (id == "prop4-lists")
        return prop4_lists(data_root);
    if (id == "lemma5-A")
        return lemma5_a(src, data_root);
    if (id == "r-table")
        return r_table(src, data_root);
    if (id == "discard-lists")
        return discard_lists(src, data_root);
    if (id == "even-discards")
        return even_discards(src, data_root);
    if (id == "odd-splittings")
        return splittings(src, data_root, id, 1);
    if (id == "even-splittings")
        return splittings(src, data_root, id, 2);
    throw std::invalid_argument("unknown table '" + id + "'");
}

// ---------------------------------------------------------------------------
// caches

fs::path cache_file(const fs::path& cache_dir) { return cache_dir / "x0star-cache.json"; }

bool load_caches(const fs::path& cache_dir)
{
    std::ifstream in(cache_file(cache_dir));
    if (!in)
        return false;
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = jsonio::parse_exact(buf.str());
    } catch (const std::exception&) {
        return false;
    }
    if (!j.is_object() || j.value("schema", 0) != kCacheSchema)
        return false;
    std::map<i64, i64> h;
    for (const auto& e : j.at("class_numbers"))
        h[e.at(0).get<i64>()] = e.at(1).get<i64>();
    classnum::default_cache().merge(h);
    std::map<std::pair<std::string, i64>, poly::ZPoly> frob;
    for (const auto& e : j.at("frobenius")) {
        poly::ZPoly P;
        for (const auto& c : e.at("charpoly"))
            P.push_back(jsonio::to_mpz(c));
        frob[{e.at("orbit").get<std::string>(), e.at("p").get<i64>()}] = std::move(P);
    }
    frobenius::default_cache().merge(frob);
    return true;
}

void save_caches(const fs::path& cache_dir)
{
    fs::create_directories(cache_dir);
    json h = json::array();
    for (const auto& [D, v] : classnum::default_cache().snapshot())
        h.push_back({D, v});
    json frob = json::array();
    for (const auto& [key, P] : frobenius::default_cache().snapshot()) {
        json cs = json::array();
        for (const auto& c : P)
            cs.push_back(c.get_str());
        frob.push_back({{"orbit", key.first}, {"p", key.second}, {"charpoly", cs}});
    }
    const json j = {{"schema", kCacheSchema}, {"class_numbers", h}, {"frobenius", frob}};
    // write then rename, so a reader never sees half a file
    const fs::path target = cache_file(cache_dir);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    fs::rename(tmp, target);
}

json cache_summary(const fs::path& cache_dir)
{
    const fs::path f = cache_file(cache_dir);
    json j = {{"file", f.string()},
              {"exists", fs::exists(f)},
              {"schema", kCacheSchema},
              {"class_numbers", classnum::default_cache().size()},
              {"frobenius", frobenius::default_cache().size()}};
    if (fs::exists(f))
        j["bytes"] = fs::file_size(f);
    return j;
}

void clear_caches(const fs::path& cache_dir)
{
    classnum::default_cache().clear();
    frobenius::default_cache().clear();
    fs::remove(cache_file(cache_dir));
}

} // namespace x0star::cli
