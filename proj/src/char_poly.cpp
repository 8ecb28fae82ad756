#include "circforest/char_poly.hpp"

#include <string>

#include "circforest/chebyshev.hpp"
#include "circforest/determinant.hpp"
#include "circforest/errors.hpp"
#include "circforest/forest_count.hpp"
#include "circforest/poly_matrix.hpp"

namespace circforest {
namespace {

// diagonal weight in w: 2k_i + d_i + 1 - sum_j 2 T_{s_{i,j}}(w); d_i + 1 if empty
IntegerPolynomial diagonal_weight_w(const FiberSpec& fiber, int degree) {
  if (fiber.empty()) return IntegerPolynomial::constant(Int(degree + 1));
  IntegerPolynomial w = IntegerPolynomial::constant(Int(2 * fiber.jump_count() + degree + 1));
  for (int s : fiber.jumps) w = w - chebyshev_T(s) * Int(2);
  return w;
}

// the same weight in z, cleared by z^{sigma} with sigma the fiber's largest
// jump: (2k+d+1) z^sigma - sum_j (z^{sigma+s_j} + z^{sigma-s_j})
IntegerPolynomial diagonal_weight_z(const FiberSpec& fiber, int degree) {
  if (fiber.empty()) return IntegerPolynomial::constant(Int(degree + 1));
  const int sigma = fiber.max_jump();
  IntegerPolynomial w =
      IntegerPolynomial::monomial(sigma, Int(2 * fiber.jump_count() + degree + 1));
  for (int s : fiber.jumps) {
    w = w - IntegerPolynomial::monomial(sigma + s);
    w = w - IntegerPolynomial::monomial(sigma - s);
  }
  return w;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw StructureViolation("characteristic polynomial check failed: " + what);
}

}  // namespace

Int eta(const FoliationSpec& spec) {
  const auto& base = spec.base();
  std::vector<int> empty_vertices;
  for (int i = 0; i < base.vertex_count(); ++i)
    if (spec.fibers()[static_cast<std::size_t>(i)].empty()) empty_vertices.push_back(i);
  IntegerMatrix m(static_cast<int>(empty_vertices.size()));
  for (std::size_t p = 0; p < empty_vertices.size(); ++p) {
    m.at(static_cast<int>(p), static_cast<int>(p)) = base.degree(empty_vertices[p]) + 1;
    for (std::size_t r = 0; r < empty_vertices.size(); ++r)
      if (r != p)
        m.at(static_cast<int>(p), static_cast<int>(r)) =
            -base.multiplicity(empty_vertices[p], empty_vertices[r]);
  }
  return det_exact(m);
}

CharPolyBundle char_poly(const FoliationSpec& spec) {
  const auto& base = spec.base();
  const int m = base.vertex_count();
  const int s = spec.shift();

  PolyMatrix in_w(static_cast<std::size_t>(m), std::vector<IntegerPolynomial>(m));
  PolyMatrix in_z(static_cast<std::size_t>(m), std::vector<IntegerPolynomial>(m));
  for (int i = 0; i < m; ++i) {
    const auto& fiber = spec.fibers()[static_cast<std::size_t>(i)];
    const int d = base.degree(i);
    in_w[i][i] = diagonal_weight_w(fiber, d);
    in_z[i][i] = diagonal_weight_z(fiber, d);
    const int sigma = fiber.max_jump();
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const int a = base.multiplicity(i, j);
      if (a == 0) continue;
      in_w[i][j] = IntegerPolynomial::constant(Int(-a));
      in_z[i][j] = IntegerPolynomial::monomial(sigma, Int(-a));
    }
  }

  CharPolyBundle b;
  b.shift = s;
  b.m_prime = spec.empty_fiber_count();
  b.eta = eta(spec);
  b.q = poly_matrix_det(in_w, s);
  b.f_z = poly_matrix_det(in_z, 2 * s);

  check(b.eta >= 1, "eta must be positive");
  check(b.q.degree() == s, "deg Q = s");
  Int expected_lead = Int(1) << s;
  expected_lead *= b.eta;
  if ((m - b.m_prime) % 2 == 1) expected_lead = -expected_lead;
  check(b.q.leading() == expected_lead, "leading coefficient of Q");
  check(b.f_z.degree() == (s == 0 ? 0 : 2 * s), "deg F = 2s");
  check(b.f_z.is_palindromic(), "F palindromic");

  // cross-validation of the two determinant routes: z^s Q((z+1/z)/2) = F(z)
  for (long zi : {2L, 3L, -2L, 5L, -7L}) {
    const Rat z(zi);
    const Rat w = (z + Rat(1) / z) / 2;
    Rat lhs = b.q.eval(w);
    for (int t = 0; t < s; ++t) lhs *= z;
    lhs.canonicalize();
    check(lhs == b.f_z.eval(z), "z^s Q((z+1/z)/2) = F(z) at z = " + std::to_string(zi));
  }

  // value checks at w = 1 and w = -1 against the direct matrix routes
  const Int q1 = b.q.eval(Int(1));
  const Int qm1 = b.q.eval(Int(-1));
  check(q1 == base_forest_count(spec) && q1 > 0, "Q(1) = det(I + L(H)) > 0");
  check(qm1 == q_at_minus_one(spec) && qm1 > 0, "Q(-1) matches the odd-jump weighting > 0");
  return b;
}

}  // namespace circforest
