#pragma once

#include <cstdint>
#include <stdexcept>

namespace x0star {

// Element of F_p, p < 2^31, carrying its modulus.
struct Fp {
    std::int64_t v = 0;
    std::int64_t p = 2;

    Fp() = default;
    Fp(std::int64_t value, std::int64_t modulus) : v(((value % modulus) + modulus) % modulus), p(modulus) {}

    bool is_zero() const { return v == 0; }
    Fp operator+(Fp o) const { return {v + o.v, p}; }
    Fp operator-(Fp o) const { return {v - o.v, p}; }
    Fp operator-() const { return {-v, p}; }
    Fp operator*(Fp o) const { return {v * o.v, p}; }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp inv() const
    {
        if (v == 0)
            throw std::domain_error("Fp: inverse of zero");
        std::int64_t r = 1, b = v, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return {r, p};
    }
    Fp operator/(Fp o) const { return *this * o.inv(); }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    bool operator==(const Fp& o) const { return v == o.v; }
};

} // namespace x0star
