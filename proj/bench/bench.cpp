// Serial reference versus OpenMP kernel, with a result-equality check.
//   bench [max_n]   (default 20000)

#include "x0star/classnum.hpp"
#include "x0star/genus.hpp"
#include "x0star/nfdata.hpp"
#include "x0star/petri.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace x0star;
using arith::i64;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const petri::SearchResult& a, const petri::SearchResult& b)
{
    if (a.patterns.size() != b.patterns.size())
        return false;
    for (std::size_t i = 0; i < a.patterns.size(); ++i)
        if (a.patterns[i].epsilons != b.patterns[i].epsilons)
            return false;
    return true;
}

void row(const std::string& name, double serial, double parallel, bool equal)
{
    std::printf("%-28s %9.3f %9.3f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
                equal ? "equal" : "DIFFERENT");
}

} // namespace

int main(int argc, char** argv)
{
    const i64 max_n = argc > 1 ? std::atoll(argv[1]) : 20000;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %9s %9s %8s\n", "kernel", "serial/s", "omp/s", "speedup");

    std::vector<genus::DeltaRow> s, p;
    // both runs start from an empty class-number cache
    classnum::default_cache().clear();
    const double ts = seconds([&] { s = genus::scan_delta_serial(max_n); });
    classnum::default_cache().clear();
    const double tp = seconds([&] { p = genus::scan_delta(max_n); });
    bool eq = s.size() == p.size();
    for (std::size_t i = 0; eq && i < s.size(); ++i)
        eq = s[i].n == p[i].n && s[i].g_star == p[i].g_star && s[i].g_star_2n == p[i].g_star_2n;
    row("scan_delta(" + std::to_string(max_n) + ")", ts, tp, eq);

    const auto src = nfdata::DataSource::from_environment();
    for (i64 N : {645, 1055, 1365, 1378}) {
        const auto basis = nfdata::star_basis(src, arith::SquarefreeLevel(N));
        petri::SearchOptions opt;
        std::tie(opt.window_lo, opt.window_hi) = petri::quotient_window(basis.genus(), N % 2 != 0);
        petri::SearchResult a, b;
        const double t1 = seconds([&] { a = petri::sign_pattern_search_serial(basis, opt); });
        const double t2 = seconds([&] { b = petri::sign_pattern_search(basis, opt); });
        row("sign_pattern_search(" + std::to_string(N) + ")", t1, t2, same(a, b));
    }
    return 0;
}
