#include "circforest/resultant.hpp"

#include "circforest/determinant.hpp"
#include "circforest/errors.hpp"

namespace circforest {

IntegerMatrix sylvester_matrix(const IntegerPolynomial& f, const IntegerPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("sylvester_matrix: zero polynomial");
  const int df = f.degree();
  const int dg = g.degree();
  IntegerMatrix m(df + dg);
  for (int r = 0; r < dg; ++r)
    for (int t = 0; t <= df; ++t) m.at(r, r + t) = f.coeff(df - t);
  for (int r = 0; r < df; ++r)
    for (int t = 0; t <= dg; ++t) m.at(dg + r, r + t) = g.coeff(dg - t);
  return m;
}

Int resultant(const IntegerPolynomial& f, const IntegerPolynomial& g) {
  return det_exact(sylvester_matrix(f, g));
}

}  // namespace circforest
