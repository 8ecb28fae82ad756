// poly_matrix.hpp — determinant of a matrix with integer-polynomial entries.
#pragma once

#include <vector>

#include "circforest/polynomial.hpp"

namespace circforest {

using PolyMatrix = std::vector<std::vector<IntegerPolynomial>>;

// Evaluation-interpolation determinant: evaluates at degree_bound + 1 distinct
// integer nodes (centered on node_base), takes exact integer determinants in
// parallel, and interpolates back over Q. degree_bound must be >= the true
// degree. NonIntegerCoefficient is a defensive assertion on the interpolant
// (integer inputs make fractional output an internal-bug signal, not a user
// error). The result is node-set independent.
IntegerPolynomial poly_matrix_det(const PolyMatrix& m, int degree_bound, long node_base = 0);

}  // namespace circforest
