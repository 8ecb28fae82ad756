#include "circforest/chebyshev.hpp"

#include <cassert>

namespace circforest {

IntegerPolynomial chebyshev_T(int k) {
  assert(k >= 0);
  IntegerPolynomial prev = IntegerPolynomial::constant(Int(1));
  if (k == 0) return prev;
  IntegerPolynomial cur = IntegerPolynomial::variable();
  const IntegerPolynomial two_x = IntegerPolynomial::monomial(1, Int(2));
  for (int i = 1; i < k; ++i) {
    IntegerPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace circforest
