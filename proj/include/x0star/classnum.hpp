#pragma once

#include "x0star/arith.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace x0star::classnum {

using arith::i64;

// Discriminant of an imaginary quadratic order: negative, 0 or 1 mod 4.
class Discriminant {
public:
    explicit Discriminant(i64 value);
    i64 value() const { return value_; }

private:
    i64 value_;
};

// Number of fixed points of w_d on X_0(level).
struct FixedPointCount {
    i64 level;
    i64 d;
    i64 count;
};

// Class number by direct enumeration of reduced primitive forms.
i64 class_number_uncached(Discriminant D);

// Thread-safe memo of class numbers keyed by discriminant.
class ClassNumberCache {
public:
    i64 get(Discriminant D);
    std::size_t size() const;
    std::map<i64, i64> snapshot() const;
    void merge(const std::map<i64, i64>& entries);
    void clear();

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<i64, i64> table_;
};

ClassNumberCache& default_cache();

// h(D) through the process-wide cache.
i64 class_number(Discriminant D);

// h(D) for every discriminant with |D| <= bound, by one sweep over reduced
// forms. Used by the large level scans.
class ClassNumberTable {
public:
    explicit ClassNumberTable(i64 bound);
    i64 bound() const { return bound_; }
    i64 operator()(i64 D) const;

private:
    i64 bound_;
    std::vector<std::uint32_t> h_;
};

// nu(d,d) (untwisted) or nu(2d,d) (twisted) for square-free d >= 5.
// Even d is accepted only untwisted; it gives nu(d,d) = h(-4d).
i64 nu_self(i64 d, bool twisted);

// Fixed points of w_d on X_0(M) for square-free M, d | M, d > 1.
FixedPointCount nu(const arith::SquarefreeLevel& M, i64 d);

// Same dispatch with class numbers taken from a precomputed table.
i64 nu_with(const arith::SquarefreeLevel& M, i64 d, const ClassNumberTable& table);

} // namespace x0star::classnum
