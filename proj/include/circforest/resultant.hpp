// resultant.hpp — resultants via exact Sylvester determinants.
#pragma once

#include "circforest/matrix.hpp"
#include "circforest/polynomial.hpp"

namespace circforest {

// Sylvester matrix of f (degree df) and g (degree dg), order df + dg.
// Throws ZeroPolynomial if either input is zero.
IntegerMatrix sylvester_matrix(const IntegerPolynomial& f, const IntegerPolynomial& g);

// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over roots alpha of f.
// Two constants resolve to 1 (empty Sylvester matrix).
Int resultant(const IntegerPolynomial& f, const IntegerPolynomial& g);

}  // namespace circforest
