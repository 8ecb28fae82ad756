#include "circforest/determinant.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace circforest {
namespace {

// Bareiss one-step fraction-free elimination. Every division below is exact:
// after step k, entry (i,j) is the (k+1)-minor det of the leading rows/cols,
// so dividing by the previous pivot leaves an integer.
Int det_bareiss(IntegerMatrix m, bool parallel) {
  const int n = m.order();
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pivot_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          pivot_row = i;
          break;
        }
      }
      if (pivot_row < 0) return Int(0);
      m.swap_rows(k, pivot_row);
      sign = -sign;
    }
    const Int& pivot = m.at(k, k);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && n - k > 16)
#endif
    for (int i = k + 1; i < n; ++i) {
      Int t;
      for (int j = k + 1; j < n; ++j) {
        t = m.at(i, j) * pivot;
        t -= m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  Int d = m.at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

}  // namespace

Int det_exact(const IntegerMatrix& m) { return det_bareiss(m, true); }

Int det_exact_serial(const IntegerMatrix& m) { return det_bareiss(m, false); }

}  // namespace circforest
