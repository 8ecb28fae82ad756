// determinant.hpp — exact determinants of integer matrices.
#pragma once

#include "circforest/integers.hpp"
#include "circforest/matrix.hpp"

namespace circforest {

// Fraction-free elimination; OpenMP row-parallel on larger orders.
// Order 0 yields 1 (empty product convention).
Int det_exact(const IntegerMatrix& m);

// Serial reference implementation, kept for differential testing and benchmarks.
Int det_exact_serial(const IntegerMatrix& m);

}  // namespace circforest
