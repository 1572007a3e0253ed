#include "x0star/cli.hpp"

#include "x0star/classnum.hpp"
#include "x0star/errors.hpp"
#include "x0star/frobenius.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>

using namespace x0star;
using namespace x0star::cli;
using arith::i64;

namespace {

const nfdata::DataSource& data()
{
    static const nfdata::DataSource src(test_support::data_root() / "orbits");
    return src;
}

Classifier& classifier()
{
    static Classifier c(data(), LowGenusTable::load(test_support::data_root()));
    return c;
}

std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("x0star-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

// The last evidence item is what settled a trivial verdict.
bool backed(const ClassificationReport& r)
{
    if (r.evidence.empty())
        return false;
    const auto& last = r.evidence.back();
    const std::string kind = last.at("kind");
    if (kind == "exclusion") {
        criteria::ExclusionVerdict v;
        v.level = last["verdict"].at("level");
        v.criterion = last["verdict"].at("criterion");
        v.params = last["verdict"].at("params");
        v.witness = last["verdict"].at("witness");
        v.excluded = last["verdict"].at("excluded");
        return criteria::reverify(v, data());
    }
    if (kind == "sign-patterns")
        return last.at("patterns").empty();
    if (kind == "restrict")
        return last["result"].at("status") == "excluded";
    return false;
}

} // namespace

TEST_CASE("classify 645")
{
    const auto r = classifier().classify(645);
    CHECK(r.genus == 5);
    CHECK(r.verdict == Verdict::order2);
    CHECK(r.group_order == 2);
    CHECK(r.g_u == 2);
    CHECK(r.quotient_orbits == std::vector<std::string>{"645.1"});
    REQUIRE(r.model);
    CHECK(r.model->format() == "X^6 + 8*X^4 + 20*X^2 + 12*X + 4");
    const auto& res = r.evidence.back().at("resolution");
    CHECK(res.at("status") == "resolved");
    CHECK(res.at("orientations")[res.at("chosen").get<int>()].at("fixed_points") == 4);
}

TEST_CASE("classify 366")
{
    const auto r = classifier().classify(366);
    CHECK(r.genus == 4);
    CHECK(r.verdict == Verdict::order2);
    CHECK(r.g_u == 2);
    CHECK(r.quotient_orbits == std::vector<std::string>{"183.1"});
    REQUIRE(r.model);
    CHECK(r.model->format() == "X^6 - 6*X^5 + 23*X^4 - 42*X^3 + 53*X^2 - 24*X + 4");
}

TEST_CASE("classify 201")
{
    const auto r = classifier().classify(201);
    CHECK(r.verdict == Verdict::trivial);
    CHECK(r.group_order == 1);
    CHECK(backed(r));
}

TEST_CASE("genus gate")
{
    CHECK(classifier().classify(67).verdict == Verdict::hyperelliptic);
    CHECK(classifier().classify(67).group_order == 2);
    CHECK(classifier().classify(106).group_order == 4);
    CHECK(classifier().classify(183).verdict == Verdict::bielliptic);
    const auto r370 = classifier().classify(370);
    CHECK(r370.genus == 4);
    CHECK(r370.verdict == Verdict::bielliptic);
    CHECK(classifier().classify(97).verdict == Verdict::out_of_scope);
}

TEST_CASE("reports are byte-identical across runs")
{
    for (i64 N : {645, 366, 1378, 957}) {
        Classifier fresh(data(), LowGenusTable::load(test_support::data_root()));
        INFO("N=" << N);
        CHECK(fresh.classify(N).to_json().dump() == classifier().classify(N).to_json().dump());
    }
}

TEST_CASE("trivial verdicts carry re-verifiable evidence")
{
    const auto odd = test_support::load_golden("odd-splittings.json");
    const auto even = test_support::load_golden("even-splittings.json");
    std::vector<i64> all;
    for (const auto& row : odd.at("rows"))
        all.push_back(row.at("n"));
    for (const auto& row : even.at("rows"))
        all.push_back(2 * row.at("n").get<i64>());
    const auto reports = classifier().classify_all(all);
    for (const auto& r : reports) {
        INFO("N=" << r.level << " verdict " << to_string(r.verdict));
        if (r.level == 645 || r.level == 366) {
            CHECK(r.verdict == Verdict::order2);
            continue;
        }
        if (r.verdict == Verdict::bielliptic || r.verdict == Verdict::hyperelliptic)
            continue;
        CHECK(r.verdict == Verdict::trivial);
        CHECK(backed(r));
    }
}

TEST_CASE("missing fixtures are reported")
{
    const auto empty = scratch_dir("empty");
    nfdata::DataSource none(empty);
    Classifier c(none, LowGenusTable::load(test_support::data_root()));
    CHECK_THROWS_AS(c.classify(645), MissingData);
    const auto rs = c.classify_all({645, 67});
    CHECK(rs[0].verdict == Verdict::unresolved);
    CHECK(rs[0].evidence[0].at("kind") == "missing-data");
    CHECK(rs[1].verdict == Verdict::hyperelliptic);

    const auto rep = reproduce_table("odd-splittings", none, test_support::data_root());
    CHECK(rep.count("unverifiable") == 29);
    CHECK(rep.exit_code() == 2);
}

TEST_CASE("splitting strings compare as multisets")
{
    CHECK(normalize_splitting("2_67+1_201+1_201") == "2_67+1_201+1_201");
    CHECK(normalize_splitting("1_201+2_67+1_201") == "2_67+1_201+1_201");
    CHECK(normalize_splitting("3_689+1_53") == "1_53+3_689");
    CHECK_THROWS_AS(normalize_splitting("2-67"), std::invalid_argument);
}

TEST_CASE("tables without open discrepancies reproduce exactly")
{
    for (const std::string id : {"low-genus", "odd-splittings", "even-discards"}) {
        const auto rep = reproduce_table(id, data(), test_support::data_root());
        INFO(id);
        CHECK(rep.exit_code() == 0);
        CHECK(rep.count("match") == static_cast<int>(rep.rows.size()));
    }
    CHECK(reproduce_table("odd-splittings", data(), test_support::data_root()).rows.size() == 29);
    CHECK_THROWS_AS(reproduce_table("nope", data(), test_support::data_root()), std::invalid_argument);
}

TEST_CASE("tables with known discrepancies report them")
{
    const auto rep = reproduce_table("even-splittings", data(), test_support::data_root());
    std::vector<std::string> off;
    for (const auto& row : rep.rows)
        if (row.status != "match")
            off.push_back(row.key);
    CHECK(off == std::vector<std::string>{"N=334", "N=366", "N=966", "N=1378"});
    CHECK(rep.exit_code() == 1);
}

TEST_CASE("cache round trip")
{
    const auto dir = scratch_dir("cache");
    classnum::class_number(classnum::Discriminant(-1555));
    frobenius::point_count(data().load_orbits(arith::SquarefreeLevel(645)), 2, 1);
    const auto h = classnum::default_cache().snapshot();
    const auto f = frobenius::default_cache().snapshot();
    save_caches(dir);
    REQUIRE(std::filesystem::exists(cache_file(dir)));
    clear_caches(dir);
    CHECK(classnum::default_cache().size() == 0);
    CHECK_FALSE(std::filesystem::exists(cache_file(dir)));
    classnum::default_cache().merge(h);
    frobenius::default_cache().merge(f);
    save_caches(dir);
    classnum::default_cache().clear();
    frobenius::default_cache().clear();
    CHECK(load_caches(dir));
    CHECK(classnum::default_cache().snapshot() == h);
    CHECK(frobenius::default_cache().snapshot() == f);

    // another schema version is ignored
    std::ofstream(cache_file(dir)) << R"({"schema": 999, "class_numbers": [[-3, 7]], "frobenius": []})";
    classnum::default_cache().clear();
    CHECK_FALSE(load_caches(dir));
    CHECK(classnum::default_cache().size() == 0);
}
