// chebyshev.hpp — Chebyshev polynomials of the first kind over Z.
#pragma once

#include "circforest/polynomial.hpp"

namespace circforest {

// T_k with T_0 = 1, T_1 = x, T_{k+1} = 2x*T_k - T_{k-1}; requires k >= 0.
IntegerPolynomial chebyshev_T(int k);

}  // namespace circforest
