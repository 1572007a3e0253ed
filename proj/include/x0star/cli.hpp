#pragma once

#include "x0star/criteria.hpp"
#include "x0star/hypermodel.hpp"
#include "x0star/nfdata.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

// Orchestration: the per-level classification pipeline, golden-table
// reproduction and the on-disk caches.
namespace x0star::cli {

using arith::i64;

inline constexpr int kReportSchema = 1;
inline constexpr int kCacheSchema = 1;

// Data root layout: <root>/orbits/N=<level>.jsonl and <root>/golden/*.json.
std::filesystem::path default_data_root();
// X0STAR_DATA when set, else the compiled-in root.
std::filesystem::path data_root_from_environment();

nlohmann::json load_golden(const std::filesystem::path& data_root, const std::string& name);

// Genus-2 and bielliptic levels with their automorphism information.
struct LowGenusTable {
    std::set<i64> hyperelliptic_order2; // genus 2, Aut of order 2
    std::map<i64, int> bielliptic;      // level -> g*

    static LowGenusTable load(const std::filesystem::path& data_root);
    bool is_bielliptic(i64 N) const { return bielliptic.count(N) != 0; }
};

enum class Verdict { trivial, order2, nontrivial, hyperelliptic, bielliptic, out_of_scope, unresolved };

std::string to_string(Verdict v);

struct ClassificationReport {
    i64 level = 0;
    int genus = 0;
    Verdict verdict = Verdict::unresolved;
    int group_order = 0; // 0 when unknown
    int g_u = -1;        // quotient genus of the involution, when one is found
    std::vector<int> quotient_blocks;
    std::vector<std::string> quotient_orbits;
    std::optional<hypermodel::HyperellipticModel> model;
    nlohmann::json evidence = nlohmann::json::array();

    bool nontrivial() const { return verdict == Verdict::order2 || verdict == Verdict::nontrivial; }
    nlohmann::json to_json() const;
};

// Runs the pipeline of one level: genus gate, odd-place parity, big factor,
// restriction to X0*(N/p) for p | N, the fixed-point-free parity test for
// 2M, the sign-pattern search and the choice of eigenspace. Results are
// memoized, since the restriction step classifies the divisors N/p first.
// Thread-safe.
class Classifier {
public:
    Classifier(const nfdata::DataSource& src, LowGenusTable table, criteria::Schedule schedule = {});

    // Throws MissingData when the fixtures for N or its divisors are absent.
    ClassificationReport classify(i64 N);
    // Parallel over levels; reports in input order. A level whose fixtures
    // are missing comes back unresolved with the error in its evidence.
    std::vector<ClassificationReport> classify_all(const std::vector<i64>& levels);

private:
    bool aut_trivial(i64 M);
    bool nonhyperelliptic_mod(i64 M, i64 p);
    ClassificationReport run(i64 N);

    const nfdata::DataSource& src_;
    LowGenusTable table_;
    criteria::Schedule schedule_;
    std::mutex mu_;
    std::map<i64, std::shared_ptr<const ClassificationReport>> memo_;
    std::once_flag screen_once_;
    std::optional<hypermodel::Mod2Screen> screen_;
};

// Stored levels with every divisor stored, g* > 3 and not bielliptic.
std::vector<i64> in_scope_levels(const nfdata::DataSource& src, const LowGenusTable& table);

struct TableRow {
    std::string key;
    nlohmann::json expected;
    nlohmann::json computed; // null when unverifiable
    std::string status;      // "match", "mismatch" or "unverifiable"
    std::string note;
};

struct TableReport {
    std::string id;
    std::vector<TableRow> rows;

    int count(const std::string& status) const;
    // 0 all rows match, 1 some row mismatches, 2 rows unverifiable only.
    int exit_code() const;
    nlohmann::json to_json() const;
};

std::vector<std::string> table_ids();

// Regenerates a golden table and diffs it row by row. Throws
// std::invalid_argument for an unknown id.
TableReport reproduce_table(const std::string& id, const nfdata::DataSource& src,
                            const std::filesystem::path& data_root);

// Canonical form of a splitting string such as "2_67+1_201+1_201".
std::string normalize_splitting(const std::string& s);

// Class-number and Frobenius caches as one JSON file. A file with another
// schema version is ignored.
std::filesystem::path cache_file(const std::filesystem::path& cache_dir);
bool load_caches(const std::filesystem::path& cache_dir);
void save_caches(const std::filesystem::path& cache_dir);
nlohmann::json cache_summary(const std::filesystem::path& cache_dir);
void clear_caches(const std::filesystem::path& cache_dir);

} // namespace x0star::cli
