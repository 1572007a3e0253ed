#pragma once

#include "x0star/arith.hpp"
#include "x0star/linalg.hpp"
#include "x0star/poly.hpp"
#include "x0star/qseries.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace x0star::nfdata {

using arith::i64;
using arith::SquarefreeLevel;

inline constexpr int kSchemaVersion = 1;

// One Galois orbit of weight-2 newforms of level M with all Atkin-Lehner
// signs +1. Row r of q_basis holds the coefficients of q^1 .. q^precision of
// the r-th rational basis form.
struct NewformOrbit {
    i64 level = 0;
    int index = 0; // position within the level's fixture file
    int dim = 0;
    std::map<i64, int> al_signs;
    std::map<i64, poly::ZPoly> ap_charpoly;
    linalg::ZMatrix q_basis;
    int precision = 0;

    std::string id() const { return std::to_string(level) + "." + std::to_string(index); }
    const poly::ZPoly& charpoly_at(i64 p) const;
};

// Parses one fixture record line. Throws SchemaError.
NewformOrbit parse_orbit(const std::string& line, i64 level, int index);

// Checks the orbit invariants: signs, charpoly degrees and Weil bound, echelon
// shape of the basis, and the a_p spot check for one-dimensional orbits.
void validate_orbit(const NewformOrbit& orbit);

// Fixture directory with per-level memoization. Thread-safe.
class DataSource {
public:
    explicit DataSource(std::filesystem::path orbit_dir);
    // <X0STAR_DATA>/orbits if the variable is set, else the compiled-in default.
    static DataSource from_environment();

    const std::filesystem::path& root() const { return root_; }
    bool has_level(i64 M) const;
    // Levels with a fixture file, ascending.
    std::vector<i64> stored_levels() const;
    // Orbits stored for level M exactly. Throws MissingData, SchemaError.
    const std::vector<NewformOrbit>& level_orbits(i64 M) const;
    // All star orbits of levels M | N, M > 1, ascending level then file order.
    std::vector<NewformOrbit> load_orbits(const SquarefreeLevel& N) const;
    // Levels M | N, M > 1, whose files are missing.
    std::vector<i64> missing_levels(const SquarefreeLevel& N) const;

private:
    std::filesystem::path root_;
    mutable std::mutex mu_;
    mutable std::map<i64, std::shared_ptr<const std::vector<NewformOrbit>>> cache_;
};

std::filesystem::path default_data_root();

// sum_{d | N/M} d g(q^d) for each basis row g, as power series known for
// exponents below prec.
std::vector<qseries::ZSeries> lift_to_star(const NewformOrbit& orbit, const SquarefreeLevel& N, std::size_t prec);

struct StarBlock {
    i64 level = 0;
    int orbit_index = 0;
    int dim = 0;
    int offset = 0; // first basis position of this block
    std::string id() const { return std::to_string(level) + "." + std::to_string(orbit_index); }
};

struct StarBasis {
    i64 level = 0;
    std::vector<NewformOrbit> orbits; // parallel to blocks
    std::vector<StarBlock> blocks;
    std::vector<qseries::ZSeries> series; // omega_1 .. omega_g
    std::size_t precision = 0;            // coefficients known for exponents < precision

    int genus() const { return static_cast<int>(series.size()); }
};

// Coefficients needed for both the quadric certification and model fitting.
std::size_t default_precision(int g);

StarBasis build_star_basis(std::vector<NewformOrbit> orbits, const SquarefreeLevel& N, std::size_t prec);
// Uses default_precision(g*), capped by what the fixtures provide.
StarBasis star_basis(const DataSource& src, const SquarefreeLevel& N, std::size_t prec = 0);

using Signature = std::vector<std::pair<i64, int>>; // (level, dim), sorted

Signature splitting_signature(const std::vector<NewformOrbit>& orbits);
Signature splitting_signature(const DataSource& src, const SquarefreeLevel& N);
// "1_43+1_129+1_215+2_645", dims ascending within a level
std::string format_signature(const Signature& s);

} // namespace x0star::nfdata
