#pragma once

#include "x0star/fp.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

// Dense exact linear algebra on row-major matrices.
namespace x0star::linalg {

using QMatrix = std::vector<std::vector<mpq_class>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;
using FpMatrix = std::vector<std::vector<Fp>>;

struct Echelon {
    QMatrix rows;            // nonzero rows of the reduced row echelon form
    std::vector<int> pivots; // pivot column of each row
};

// Reduced row echelon form with unit pivots; zero rows are dropped.
Echelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);

// Basis of { v : m v = 0 } for a matrix with `cols` columns, returned as the
// rows of a reduced echelon matrix (first nonzero entry of each row is 1).
QMatrix kernel(const QMatrix& m, std::size_t cols);

QMatrix to_q(const ZMatrix& m);

// Scale each row to a primitive integer vector with positive leading entry.
ZMatrix primitive_rows(const QMatrix& m);

std::size_t rank_mod_p(const ZMatrix& m, std::int64_t p);

// Reduced row echelon form over F_p; zero rows are dropped.
struct FpEchelon {
    FpMatrix rows;
    std::vector<int> pivots;
};
FpEchelon rref_mod_p(FpMatrix m);
FpMatrix reduce_mod_p(const ZMatrix& m, std::int64_t p);
// Same conventions as kernel, over F_p.
FpMatrix kernel_mod_p(const FpMatrix& m, std::size_t cols, std::int64_t p);

} // namespace x0star::linalg
