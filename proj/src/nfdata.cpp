#include "x0star/nfdata.hpp"

#include "x0star/errors.hpp"
#include "x0star/jsonio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace x0star::nfdata {

namespace fs = std::filesystem;
using nlohmann::json;

const poly::ZPoly& NewformOrbit::charpoly_at(i64 p) const
{
    auto it = ap_charpoly.find(p);
    if (it == ap_charpoly.end())
        throw MissingData("orbit " + id() + ": no a_p data at p=" + std::to_string(p));
    return it->second;
}

NewformOrbit parse_orbit(const std::string& line, i64 level, int index)
{
    NewformOrbit o;
    o.level = level;
    o.index = index;
    const std::string where = "orbit " + std::to_string(level) + "." + std::to_string(index);
    try {
        const json j = jsonio::parse_exact(line);
        if (j.at("schema").get<int>() != kSchemaVersion)
            throw SchemaError(where + ": unsupported schema version");
        if (j.at("level").get<i64>() != level)
            throw SchemaError(where + ": level field disagrees with file name");
        o.dim = j.at("dim").get<int>();
        o.precision = j.at("prec").get<int>();
        for (const auto& [k, v] : j.at("al").items())
            o.al_signs[std::stoll(k)] = v.get<int>();
        for (const auto& [k, v] : j.at("ap").items()) {
            poly::ZPoly cp;
            for (const auto& c : v)
                cp.push_back(jsonio::to_mpz(c));
            o.ap_charpoly[std::stoll(k)] = std::move(cp);
        }
        for (const auto& row : j.at("qexp")) {
            std::vector<mpz_class> r;
            r.reserve(row.size());
            for (const auto& c : row)
                r.push_back(jsonio::to_mpz(c));
            o.q_basis.push_back(std::move(r));
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(where + ": " + e.what());
    }
    return o;
}

void validate_orbit(const NewformOrbit& o)
{
    const std::string where = "orbit " + o.id();
    if (o.dim < 1)
        throw SchemaError(where + ": nonpositive dimension");
    const SquarefreeLevel M(o.level);
    for (i64 p : M.primes()) {
        auto it = o.al_signs.find(p);
        if (it == o.al_signs.end())
            throw SchemaError(where + ": missing Atkin-Lehner sign at " + std::to_string(p));
    }
    for (const auto& [p, s] : o.al_signs)
        if (s != 1 && s != -1)
            throw SchemaError(where + ": Atkin-Lehner sign not +-1");
    for (const auto& [p, cp] : o.ap_charpoly) {
        if (poly::degree(cp) != o.dim || cp.back() != 1)
            throw SchemaError(where + ": a_p charpoly at " + std::to_string(p) + " is not monic of degree dim");
        if (!poly::roots_real_within(cp, mpq_class(4 * p)))
            throw SchemaError(where + ": a_p charpoly at " + std::to_string(p) + " violates the Weil bound");
    }
    if (static_cast<int>(o.q_basis.size()) != o.dim)
        throw SchemaError(where + ": basis has wrong number of rows");
    int last_lead = -1;
    for (const auto& row : o.q_basis) {
        if (static_cast<int>(row.size()) != o.precision)
            throw SchemaError(where + ": basis row length differs from prec");
        int lead = -1;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) {
                lead = static_cast<int>(k);
                break;
            }
        if (lead <= last_lead || row[static_cast<std::size_t>(lead)] < 0)
            throw SchemaError(where + ": basis is not in echelon form with positive pivots");
        last_lead = lead;
    }
    if (o.dim == 1) {
        const auto& row = o.q_basis[0];
        if (row[0] != 1)
            throw SchemaError(where + ": one-dimensional orbit is not normalized");
        for (const auto& [p, cp] : o.ap_charpoly)
            if (p <= o.precision && row[static_cast<std::size_t>(p - 1)] != -cp[0])
                throw SchemaError(where + ": q-expansion disagrees with a_p at " + std::to_string(p));
    }
}

DataSource::DataSource(fs::path orbit_dir) : root_(std::move(orbit_dir)) {}

fs::path default_data_root() { return fs::path(X0STAR_DEFAULT_DATA_DIR) / "orbits"; }

DataSource DataSource::from_environment()
{
    if (const char* env = std::getenv("X0STAR_DATA"); env && *env)
        return DataSource(fs::path(env) / "orbits");
    return DataSource(default_data_root());
}

namespace {

fs::path level_file(const fs::path& root, i64 M) { return root / ("N=" + std::to_string(M) + ".jsonl"); }

} // namespace

bool DataSource::has_level(i64 M) const { return fs::exists(level_file(root_, M)); }

std::vector<i64> DataSource::stored_levels() const
{
    std::vector<i64> out;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(root_, ec)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("N=", 0) != 0 || entry.path().extension() != ".jsonl")
            continue;
        try {
            out.push_back(std::stoll(name.substr(2)));
        } catch (const std::exception&) {
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<NewformOrbit>& DataSource::level_orbits(i64 M) const
{
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(M); it != cache_.end())
            return *it->second;
    }
    const fs::path path = level_file(root_, M);
    std::ifstream in(path);
    if (!in)
        throw MissingData("missing fixture file " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw SchemaError(path.string() + ": empty file");
    json header;
    try {
        header = json::parse(line);
    } catch (const std::exception& e) {
        throw SchemaError(path.string() + ": bad header: " + e.what());
    }
    if (header.value("schema", 0) != kSchemaVersion || header.value("level", i64{0}) != M)
        throw SchemaError(path.string() + ": header schema or level mismatch");
    const int count = header.value("count", -1);
    auto orbits = std::make_shared<std::vector<NewformOrbit>>();
    int index = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        NewformOrbit o = parse_orbit(line, M, ++index);
        validate_orbit(o);
        for (const auto& [p, s] : o.al_signs)
            if (s != 1)
                throw SchemaError("orbit " + o.id() + ": fixture holds an orbit outside the star subspace");
        orbits->push_back(std::move(o));
    }
    if (count != static_cast<int>(orbits->size()))
        throw SchemaError(path.string() + ": header count disagrees with records");
    std::lock_guard lock(mu_);
    auto [it, inserted] = cache_.emplace(M, std::move(orbits));
    return *it->second;
}

std::vector<i64> DataSource::missing_levels(const SquarefreeLevel& N) const
{
    std::vector<i64> out;
    for (i64 M : N.divisors())
        if (M > 1 && !has_level(M))
            out.push_back(M);
    return out;
}

std::vector<NewformOrbit> DataSource::load_orbits(const SquarefreeLevel& N) const
{
    std::vector<NewformOrbit> out;
    for (i64 M : N.divisors()) {
        if (M == 1)
            continue;
        const auto& orbits = level_orbits(M);
        out.insert(out.end(), orbits.begin(), orbits.end());
    }
    return out;
}

std::vector<qseries::ZSeries> lift_to_star(const NewformOrbit& orbit, const SquarefreeLevel& N, std::size_t prec)
{
    if (N.value() % orbit.level)
        throw std::invalid_argument("lift_to_star: orbit level does not divide N");
    if (prec > static_cast<std::size_t>(orbit.precision) + 1)
        throw InsufficientPrecision("orbit " + orbit.id() + " known to q^" + std::to_string(orbit.precision) +
                                    ", lift needs q^" + std::to_string(prec - 1));
    const auto ds = arith::divisors(N.value() / orbit.level);
    std::vector<qseries::ZSeries> out;
    for (const auto& row : orbit.q_basis) {
        qseries::ZSeries g(prec, 0);
        for (std::size_t k = 1; k < prec; ++k)
            g[k] = row[k - 1];
        qseries::ZSeries h(prec, 0);
        for (i64 d : ds) {
            const auto gd = qseries::substitute_power(g, d, prec);
            for (std::size_t k = 0; k < prec; ++k)
                if (gd[k] != 0)
                    h[k] += d * gd[k];
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::size_t default_precision(int g) { return static_cast<std::size_t>(std::max(4 * g - 3, 8 * g + 8) + 4 + 1); }

StarBasis build_star_basis(std::vector<NewformOrbit> orbits, const SquarefreeLevel& N, std::size_t prec)
{
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const NewformOrbit& a, const NewformOrbit& b) { return a.level < b.level; });
    StarBasis basis;
    basis.level = N.value();
    basis.precision = prec;
    for (const auto& o : orbits) {
        StarBlock block{o.level, o.index, o.dim, static_cast<int>(basis.series.size())};
        for (auto& s : lift_to_star(o, N, prec))
            basis.series.push_back(std::move(s));
        basis.blocks.push_back(block);
    }
    basis.orbits = std::move(orbits);
    return basis;
}

StarBasis star_basis(const DataSource& src, const SquarefreeLevel& N, std::size_t prec)
{
    auto orbits = src.load_orbits(N);
    int g = 0;
    for (const auto& o : orbits)
        g += o.dim;
    if (prec == 0) {
        prec = default_precision(g);
        for (const auto& o : orbits)
            prec = std::min(prec, static_cast<std::size_t>(o.precision) + 1);
    }
    return build_star_basis(std::move(orbits), N, prec);
}

Signature splitting_signature(const std::vector<NewformOrbit>& orbits)
{
    Signature s;
    for (const auto& o : orbits)
        s.emplace_back(o.level, o.dim);
    std::sort(s.begin(), s.end());
    return s;
}

Signature splitting_signature(const DataSource& src, const SquarefreeLevel& N)
{
    return splitting_signature(src.load_orbits(N));
}

std::string format_signature(const Signature& s)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "+" : "") << s[i].second << '_' << s[i].first;
    return s.empty() ? "0" : os.str();
}

} // namespace x0star::nfdata
