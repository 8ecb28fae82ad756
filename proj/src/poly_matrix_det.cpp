#include "circforest/poly_matrix.hpp"

#include <cassert>
#include <cstddef>

#include "circforest/determinant.hpp"
#include "circforest/errors.hpp"
#include "circforest/matrix.hpp"

namespace circforest {
namespace {

// nodes node_base, node_base+1, node_base-1, node_base+2, ... (all distinct)
std::vector<long> interpolation_nodes(int count, long base) {
  std::vector<long> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    long off = (t + 1) / 2;
    xs.push_back(t % 2 == 1 ? base + off : base - off);
  }
  return xs;
}

IntegerPolynomial newton_interpolate(const std::vector<long>& xs, const std::vector<Int>& ys) {
  const std::size_t k = xs.size();
  std::vector<Rat> dd;
  dd.reserve(k);
  for (const auto& y : ys) dd.emplace_back(y);
  for (std::size_t j = 1; j < k; ++j) {
    for (std::size_t i = k - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - j]);
      dd[i].canonicalize();
    }
  }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<Rat> poly{dd[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    const Rat xi(xs[i]);
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] += poly[t];
      next[t] -= poly[t] * xi;
    }
    next[0] += dd[i];
    for (auto& c : next) c.canonicalize();
    poly = std::move(next);
  }
  std::vector<Int> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (c.get_den() != 1)
      throw NonIntegerCoefficient("interpolated determinant has non-integer coefficient " +
                                  c.get_str());
    coeffs.push_back(c.get_num());
  }
  return IntegerPolynomial(std::move(coeffs));
}

}  // namespace

IntegerPolynomial poly_matrix_det(const PolyMatrix& m, int degree_bound, long node_base) {
  const int order = static_cast<int>(m.size());
  for (const auto& row : m) assert(static_cast<int>(row.size()) == order);
  assert(degree_bound >= 0);
  if (order == 0) return IntegerPolynomial::constant(Int(1));

  const int points = degree_bound + 1;
  const std::vector<long> xs = interpolation_nodes(points, node_base);
  std::vector<Int> ys(static_cast<std::size_t>(points));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < points; ++t) {
    const Int x(xs[static_cast<std::size_t>(t)]);
    IntegerMatrix num(order);
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) num.at(i, j) = m[i][j].eval(x);
    // nested calls stay serial; parallelism lives at the node level here
    ys[static_cast<std::size_t>(t)] = det_exact_serial(num);
  }
  return newton_interpolate(xs, ys);
}

}  // namespace circforest
