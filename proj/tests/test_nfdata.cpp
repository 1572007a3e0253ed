#include "x0star/nfdata.hpp"

#include "x0star/errors.hpp"
#include "x0star/genus.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace x0star;
using namespace x0star::nfdata;

namespace {

const DataSource& data() {
    static const DataSource src = DataSource::from_environment();
    return src;
}

Signature sig(std::initializer_list<std::pair<i64, int>> l)
{
    Signature s(l);
    std::sort(s.begin(), s.end());
    return s;
}

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() / ("x0star-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    void write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path / name) << text;
    }
};

} // namespace

TEST_CASE("orbits of 645")
{
    const auto orbits = data().load_orbits(SquarefreeLevel(645));
    REQUIRE(orbits.size() == 4);
    CHECK(orbits[0].level == 43);
    CHECK(orbits[1].level == 129);
    CHECK(orbits[2].level == 215);
    CHECK(orbits[3].level == 645);
    CHECK(orbits[3].dim == 2);
    CHECK(format_signature(splitting_signature(orbits)) == "1_43+1_129+1_215+2_645");
}

TEST_CASE("orbits of 97")
{
    const auto orbits = data().load_orbits(SquarefreeLevel(97));
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].dim == 3);
    CHECK(orbits[0].dim == genus::genus_x0_star(SquarefreeLevel(97)));
}

TEST_CASE("splitting signatures")
{
    CHECK(splitting_signature(data(), SquarefreeLevel(957)) == sig({{319, 4}, {957, 7}}));
    CHECK(splitting_signature(data(), SquarefreeLevel(1055)) == sig({{211, 3}, {211, 3}, {1055, 3}, {1055, 6}}));
    // The level-689 orbits have dimensions 1, 2, 2, 3, so the star genus of
    // 1378 is 19 (the formula agrees).
    CHECK(splitting_signature(data(), SquarefreeLevel(1378)) ==
          sig({{53, 1}, {106, 1}, {689, 1}, {689, 2}, {689, 2}, {689, 3}, {1378, 3}, {1378, 6}}));
    CHECK(genus::genus_x0_star(SquarefreeLevel(1378)) == 19);
}

TEST_CASE("lift to the star level")
{
    const auto& f = data().level_orbits(43).at(0);
    const SquarefreeLevel N(645);
    const auto lifted = lift_to_star(f, N, 40);
    REQUIRE(lifted.size() == 1);
    // h = f(q) + 3 f(q^3) + 5 f(q^5) + 15 f(q^15)
    const auto& row = f.q_basis[0];
    for (std::size_t k = 1; k < 40; ++k) {
        mpz_class want = row[k - 1];
        for (i64 d : {3, 5, 15})
            if (k % d == 0)
                want += d * row[k / d - 1];
        REQUIRE(lifted[0][k] == want);
    }
    // M = N is the identity lift
    const auto& g = data().level_orbits(645).at(0);
    const auto same = lift_to_star(g, N, 30);
    for (std::size_t k = 1; k < 30; ++k)
        CHECK(same[1][k] == g.q_basis[1][k - 1]);
    CHECK_THROWS_AS(lift_to_star(f, N, 100000), InsufficientPrecision);
}

TEST_CASE("star basis is ordered by level and sized by the genus")
{
    const auto basis = star_basis(data(), SquarefreeLevel(645));
    CHECK(basis.genus() == 5);
    REQUIRE(basis.blocks.size() == 4);
    CHECK(basis.blocks[3].offset == 3);
    CHECK(basis.precision == default_precision(5));
}

TEST_CASE("property: fixture genera and divisor sums")
{
    std::size_t checked = 0;
    for (const auto& entry : std::filesystem::directory_iterator(data().root())) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("N=", 0) != 0 || entry.path().extension() != ".jsonl")
            continue;
        const i64 M = std::stoll(name.substr(2));
        const SquarefreeLevel L(M);
        if (!data().missing_levels(L).empty())
            continue;
        const auto orbits = data().load_orbits(L);
        int total = 0;
        for (const auto& o : orbits) {
            total += o.dim;
            // rows stay independent modulo some small prime
            bool full = false;
            for (i64 p : {101, 103, 107, 109})
                full = full || linalg::rank_mod_p(o.q_basis, p) == static_cast<std::size_t>(o.dim);
            REQUIRE(full);
        }
        INFO("level " << M);
        REQUIRE(total == genus::genus_x0_star(L));
        for (i64 d : L.divisors()) {
            if (d == 1 || d == M)
                continue;
            int sub = 0;
            for (const auto& o : orbits)
                if (d % o.level == 0)
                    sub += o.dim;
            REQUIRE(sub == genus::genus_x0_star(SquarefreeLevel(d)));
        }
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("fixture errors")
{
    TempDir dir;
    DataSource src(dir.path);
    CHECK_THROWS_AS(src.level_orbits(15), MissingData);
    dir.write("N=15.jsonl", "{\"schema\":1,\"level\":15,\"count\":0}\n");
    dir.write("N=3.jsonl", "{\"schema\":1,\"level\":3,\"count\":0}\n");
    dir.write("N=5.jsonl", "{\"schema\":1,\"level\":5,\"count\":0}\n");
    CHECK(src.load_orbits(SquarefreeLevel(15)).empty());
    dir.write("N=7.jsonl", "{\"schema\":2,\"level\":7,\"count\":0}\n");
    CHECK_THROWS_AS(src.level_orbits(7), SchemaError);
    dir.write("N=11.jsonl", "{\"schema\":1,\"level\":11,\"count\":1}\n"
                            "{\"schema\":1,\"level\":11,\"dim\":1,\"al\":{\"11\":1},\"ap\":{\"2\":[9,1]},"
                            "\"qexp\":[[1,-9,0]],\"prec\":3}\n");
    // a_2 = -9 breaks the Weil bound
    CHECK_THROWS_AS(src.level_orbits(11), SchemaError);
    dir.write("N=13.jsonl", "{\"schema\":1,\"level\":13,\"count\":1}\n"
                            "{\"schema\":1,\"level\":13,\"dim\":1,\"al\":{\"13\":-1},\"ap\":{\"2\":[1,1]},"
                            "\"qexp\":[[1,-1,0]],\"prec\":3}\n");
    CHECK_THROWS_AS(src.level_orbits(13), SchemaError);
}

TEST_CASE("big integers survive parsing")
{
    const std::string line = "{\"schema\":1,\"level\":17,\"dim\":1,\"al\":{\"17\":1},\"ap\":{},"
                             "\"qexp\":[[123456789012345678901234567890]],\"prec\":1}";
    const auto o = parse_orbit(line, 17, 1);
    CHECK(o.q_basis[0][0] == mpz_class("123456789012345678901234567890"));
}
