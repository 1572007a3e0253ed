#include "x0star/cli.hpp"
#include "x0star/criteria.hpp"
#include "x0star/errors.hpp"
#include "x0star/genus.hpp"
#include "x0star/nfdata.hpp"
#include "x0star/petri.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace x0star;
using arith::i64;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitMissing = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitUsage = 4;

struct Globals {
    bool json_out = false;
    std::string data;
    std::string cache_dir = ".cache";
    bool no_cache = false;
};

fs::path data_root(const Globals& g) { return g.data.empty() ? cli::data_root_from_environment() : fs::path(g.data); }

void emit(const Globals& g, const json& j, const std::string& text)
{
    if (g.json_out)
        std::cout << j.dump(1) << '\n';
    else
        std::cout << text;
}

std::string join(const std::vector<i64>& v, const std::string& sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

int cmd_genus(const Globals& g, i64 N)
{
    const arith::SquarefreeLevel level(N);
    const auto pair = genus::genus_pair(level);
    emit(g, {{"level", N}, {"genus_x0", pair.g}, {"genus_star", pair.g_star}},
         "g(X0(" + std::to_string(N) + ")) = " + std::to_string(pair.g) + "\ng*(" + std::to_string(N) +
             ") = " + std::to_string(pair.g_star) + "\n");
    return 0;
}

int cmd_delta(const Globals& g, i64 N)
{
    const arith::SquarefreeLevel level(N);
    if (!level.is_odd())
        throw std::invalid_argument("delta needs an odd level");
    const i64 gs = genus::genus_x0_star(level);
    const i64 g2 = genus::genus_x0_star(arith::SquarefreeLevel(2 * N));
    emit(g, {{"n", N}, {"g_star", gs}, {"g_star_2n", g2}, {"delta", g2 - 2 * gs}},
         "g*(" + std::to_string(N) + ") = " + std::to_string(gs) + ", g*(" + std::to_string(2 * N) +
             ") = " + std::to_string(g2) + ", delta = " + std::to_string(g2 - 2 * gs) + "\n");
    return 0;
}

int cmd_candidates(const Globals& g, const std::string& which, bool raw)
{
    std::vector<i64> list;
    if (which == "odd")
        list = raw ? genus::gonality_candidates_raw() : genus::gonality_candidates();
    else if (which == "hyp2")
        list = genus::hyp2_candidates();
    else
        throw std::invalid_argument("candidates: expected 'odd' or 'hyp2'");
    emit(g, {{"list", which}, {"raw", raw}, {"count", list.size()}, {"levels", list}},
         std::to_string(list.size()) + " levels\n" + join(list) + "\n");
    return 0;
}

int cmd_discard(const Globals& g, const nfdata::DataSource& src, i64 N, std::optional<i64> prime, int k_max)
{
    const arith::SquarefreeLevel level(N);
    const auto orbits = src.load_orbits(level);
    std::vector<criteria::ExclusionVerdict> verdicts;
    if (prime) {
        verdicts.push_back(criteria::lemma1_parity(orbits, N, *prime, k_max));
    } else {
        for (i64 p : criteria::Schedule{}.primes)
            if (!level.divisible_by(p))
                verdicts.push_back(criteria::lemma1_parity(orbits, N, p, k_max));
        if (level.is_odd())
            verdicts.push_back(criteria::big_factor(orbits, N));
    }
    json arr = json::array();
    std::string text;
    for (const auto& v : verdicts) {
        arr.push_back(v.to_json());
        text += v.criterion + " " + v.params.dump() + ": " + (v.excluded ? "excluded" : "not excluded") + "  " +
                v.witness.dump() + "\n";
    }
    emit(g, arr, text);
    return 0;
}

int cmd_splitting(const Globals& g, const nfdata::DataSource& src, i64 N)
{
    const auto sig = nfdata::splitting_signature(src, arith::SquarefreeLevel(N));
    int dim = 0;
    for (const auto& [lvl, d] : sig)
        dim += d;
    const std::string s = nfdata::format_signature(sig);
    emit(g, {{"level", N}, {"splitting", s}, {"genus", dim}}, s + "  (dimension " + std::to_string(dim) + ")\n");
    return 0;
}

int cmd_petri(const Globals& g, const nfdata::DataSource& src, i64 N)
{
    const arith::SquarefreeLevel level(N);
    const auto basis = nfdata::star_basis(src, level);
    const int genus = basis.genus();
    if (genus < 3)
        throw std::invalid_argument("petri needs genus at least 3");
    const int degree = genus == 3 ? 4 : 2;
    const auto L = petri::vanishing_forms(basis, degree);
    json j = {{"level", N}, {"genus", genus}, {"degree", degree}, {"dim", L.dim()}};
    std::string text = "g* = " + std::to_string(genus) + ", dim L" + std::to_string(degree) + " = " +
                       std::to_string(L.dim()) + "\n";
    if (degree == 2) {
        j["dim_ns"] = static_cast<int>(L.ns_basis.size());
        text += "dim L2^ns = " + std::to_string(L.ns_basis.size()) + "\n";
        if (L.dim() <= 12)
            for (const auto& f : L.basis)
                text += "  " + L.format(f) + "\n";
        for (const auto& f : L.ns_basis)
            text += "  ns: " + L.format(f) + "\n";
    }
    j["forms"] = L.to_json();
    petri::SearchOptions opt;
    std::tie(opt.window_lo, opt.window_hi) = petri::quotient_window(genus, level.is_odd());
    const auto r = petri::sign_pattern_search(basis, opt);
    json pats = json::array();
    for (const auto& p : r.patterns) {
        pats.push_back(p.to_json());
        std::string eps;
        for (int e : p.epsilons)
            eps += e > 0 ? '+' : '-';
        text += "sign pattern " + eps + "\n";
    }
    j["search"] = {{"stats", r.stats.to_json()}, {"patterns", pats}};
    text += std::to_string(r.patterns.size()) + " sign pattern(s) in window [" + std::to_string(opt.window_lo) +
            ", " + std::to_string(opt.window_hi) + "]\n";
    emit(g, j, text);
    return 0;
}

std::string describe(const cli::ClassificationReport& r)
{
    std::string s = std::to_string(r.level) + ": g* = " + std::to_string(r.genus) + ", " + cli::to_string(r.verdict);
    if (r.g_u >= 0) {
        s += ", g_u = " + std::to_string(r.g_u) + ", quotient orbits";
        for (const auto& id : r.quotient_orbits)
            s += " " + id;
    }
    if (r.model)
        s += "\n  y^2 = " + r.model->format();
    if (!r.evidence.empty()) {
        const auto& last = r.evidence.back();
        s += "\n  by " + last.at("kind").get<std::string>();
        if (last.contains("verdict"))
            s += " (" + last["verdict"].at("criterion").get<std::string>() + " " + last["verdict"].at("params").dump() +
                 ")";
    }
    return s + "\n";
}

int cmd_classify(const Globals& g, const nfdata::DataSource& src, std::vector<i64> levels, bool in_scope)
{
    const fs::path root = data_root(g);
    cli::Classifier classifier(src, cli::LowGenusTable::load(root));
    if (in_scope)
        levels = cli::in_scope_levels(src, cli::LowGenusTable::load(root));
    if (levels.empty())
        throw std::invalid_argument("classify: no levels given");
    std::vector<cli::ClassificationReport> reports;
    if (levels.size() == 1)
        reports.push_back(classifier.classify(levels.front()));
    else
        reports = classifier.classify_all(levels);
    json arr = json::array();
    std::string text;
    int code = 0;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        if (in_scope && !r.nontrivial() && r.verdict == cli::Verdict::trivial)
            continue;
        text += describe(r);
        if (r.verdict == cli::Verdict::unresolved && r.evidence.size() && r.evidence[0].value("kind", "") == "missing-data")
            code = kExitMissing;
    }
    if (in_scope) {
        std::vector<i64> nontrivial;
        for (const auto& r : reports)
            if (r.nontrivial())
                nontrivial.push_back(r.level);
        text += std::to_string(reports.size()) + " in-scope levels; non-trivial: " + join(nontrivial) + "\n";
    }
    emit(g, reports.size() == 1 ? arr[0] : arr, text);
    return code;
}

int cmd_reproduce(const Globals& g, const nfdata::DataSource& src, const std::string& id)
{
    const fs::path root = data_root(g);
    const std::vector<std::string> ids = id == "all" ? cli::table_ids() : std::vector<std::string>{id};
    json arr = json::array();
    std::string text;
    int worst = 0;
    for (const auto& t : ids) {
        const auto rep = cli::reproduce_table(t, src, root);
        arr.push_back(rep.to_json());
        text += t + ": " + std::to_string(rep.count("match")) + " match, " + std::to_string(rep.count("mismatch")) +
                " mismatch, " + std::to_string(rep.count("unverifiable")) + " unverifiable\n";
        for (const auto& row : rep.rows)
            if (row.status != "match")
                text += "  " + row.status + " " + row.key + ": expected " + row.expected.dump() + ", computed " +
                        row.computed.dump() + (row.note.empty() ? "" : " (" + row.note + ")") + "\n";
        const int code = rep.exit_code();
        if (code == kExitMismatch || (code == kExitMissing && worst == 0))
            worst = code;
    }
    emit(g, ids.size() == 1 ? arr[0] : arr, text);
    return worst;
}

int cmd_cache(const Globals& g, const std::string& action)
{
    const fs::path dir = g.cache_dir;
    if (action == "clear") {
        cli::clear_caches(dir);
        emit(g, {{"cleared", cli::cache_file(dir).string()}}, "cleared " + cli::cache_file(dir).string() + "\n");
        return 0;
    }
    if (action != "show")
        throw std::invalid_argument("cache: expected 'show' or 'clear'");
    const bool loaded = cli::load_caches(dir);
    auto s = cli::cache_summary(dir);
    s["loaded"] = loaded;
    emit(g, s,
         s.at("file").get<std::string>() + (s.at("exists").get<bool>() ? "" : " (absent)") + "\n" +
             "class numbers: " + s.at("class_numbers").dump() + "\nfrobenius charpolys: " + s.at("frobenius").dump() +
             "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Automorphisms of X0*(N) for square-free N"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "Machine-readable output");
    app.add_option("--data", g.data, "Data root holding orbits/ and golden/ (default: $X0STAR_DATA)");
    app.add_option("--cache-dir", g.cache_dir, "Directory of the persistent cache")->capture_default_str();
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the cache file");

    i64 level = 0;
    std::vector<i64> levels;
    std::string word;
    std::optional<i64> prime;
    int k_max = criteria::Schedule{}.k_max;
    bool raw = false, in_scope = false;

    auto* genus_cmd = app.add_subcommand("genus", "Genus of X0(N) and X0*(N)");
    genus_cmd->add_option("N", level)->required();
    auto* delta_cmd = app.add_subcommand("delta", "g*(2N) - 2 g*(N) for odd N");
    delta_cmd->add_option("N", level)->required();
    auto* cand_cmd = app.add_subcommand("candidates", "Candidate level lists");
    cand_cmd->add_option("list", word, "odd or hyp2")->required();
    cand_cmd->add_flag("--raw", raw, "odd: keep primes and levels with g* <= 3");
    auto* discard_cmd = app.add_subcommand("discard", "Point-count exclusion tests");
    discard_cmd->add_option("N", level)->required();
    discard_cmd->add_option("--prime", prime, "Test this prime only");
    discard_cmd->add_option("--k-max", k_max, "Largest k in the odd-place sum")->capture_default_str();
    auto* split_cmd = app.add_subcommand("splitting", "Splitting of J0*(N) into newform orbits");
    split_cmd->add_option("N", level)->required();
    auto* petri_cmd = app.add_subcommand("petri", "Quadrics through the canonical curve and sign patterns");
    petri_cmd->add_option("N", level)->required();
    auto* classify_cmd = app.add_subcommand("classify", "Classify the automorphisms of X0*(N)");
    classify_cmd->add_option("N", levels);
    classify_cmd->add_flag("--in-scope", in_scope, "All stored levels with g* > 3 that are not bielliptic");
    auto* table_cmd = app.add_subcommand("reproduce-table", "Regenerate a golden table and diff it");
    table_cmd->add_option("ID", word, "Table id or 'all'")->required();
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the persistent cache");
    cache_cmd->add_option("action", word, "show or clear")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const nfdata::DataSource src(data_root(g) / "orbits");
        const bool use_cache = !g.no_cache && !cache_cmd->parsed();
        if (use_cache)
            cli::load_caches(g.cache_dir);
        int code = 0;
        if (genus_cmd->parsed())
            code = cmd_genus(g, level);
        else if (delta_cmd->parsed())
            code = cmd_delta(g, level);
        else if (cand_cmd->parsed())
            code = cmd_candidates(g, word, raw);
        else if (discard_cmd->parsed())
            code = cmd_discard(g, src, level, prime, k_max);
        else if (split_cmd->parsed())
            code = cmd_splitting(g, src, level);
        else if (petri_cmd->parsed())
            code = cmd_petri(g, src, level);
        else if (classify_cmd->parsed())
            code = cmd_classify(g, src, levels, in_scope);
        else if (table_cmd->parsed())
            code = cmd_reproduce(g, src, word);
        else if (cache_cmd->parsed())
            code = cmd_cache(g, word);
        if (use_cache)
            cli::save_caches(g.cache_dir);
        return code;
    } catch (const MissingData& e) {
        std::cerr << "missing data: " << e.what() << '\n';
        return kExitMissing;
    } catch (const SchemaError& e) {
        std::cerr << "bad fixture: " << e.what() << '\n';
        return kExitMissing;
    } catch (const Contradiction& e) {
        std::cerr << "contradiction: " << e.what() << '\n';
        return kExitContradiction;
    } catch (const InsufficientPrecision& e) {
        std::cerr << "insufficient precision: " << e.what() << '\n';
        return kExitMissing;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
