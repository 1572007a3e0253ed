#include "x0star/qseries.hpp"

namespace x0star::qseries {

ZSeries mul(const ZSeries& a, const ZSeries& b, std::size_t prec)
{
    const std::size_t n = std::min({prec, a.size(), b.size()});
    ZSeries out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

ZSeries substitute_power(const ZSeries& f, std::int64_t d, std::size_t prec)
{
    if (d < 1)
        throw std::invalid_argument("substitute_power: d must be positive");
    // need f known through exponent floor((prec - 1) / d)
    const std::size_t need = prec == 0 ? 0 : (prec - 1) / static_cast<std::size_t>(d) + 1;
    if (f.size() < need)
        throw InsufficientPrecision("substitute_power: source series too short");
    ZSeries out(prec, 0);
    for (std::size_t k = 0; k * static_cast<std::size_t>(d) < prec; ++k)
        out[k * static_cast<std::size_t>(d)] = f[k];
    return out;
}

int valuation(const ZSeries& f)
{
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] != 0)
            return static_cast<int>(k);
    return -1;
}

} // namespace x0star::qseries
