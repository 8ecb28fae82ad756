#include "circforest/forest_count.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "circforest/asymptotics.hpp"
#include "circforest/determinant.hpp"
#include "circforest/errors.hpp"
#include "circforest/resultant.hpp"

namespace circforest {

std::string method_tag(CountMethod m) {
  switch (m) {
    case CountMethod::Resultant:
      return "resultant";
    case CountMethod::Oracle:
      return "oracle";
    case CountMethod::ChebyshevFloat:
      return "chebyshev-float";
  }
  return "?";
}

Int base_forest_count(const FoliationSpec& spec) {
  const auto& b = spec.base();
  const int m = b.vertex_count();
  IntegerMatrix mat(m);
  for (int i = 0; i < m; ++i) {
    mat.at(i, i) = b.degree(i) + 1;
    for (int j = 0; j < m; ++j)
      if (j != i) mat.at(i, j) = -b.multiplicity(i, j);
  }
  return det_exact(mat);
}

Int q_at_minus_one(const FoliationSpec& spec) {
  const auto& b = spec.base();
  const int m = b.vertex_count();
  IntegerMatrix mat(m);
  for (int i = 0; i < m; ++i) {
    mat.at(i, i) = b.degree(i) + 4 * spec.fibers()[static_cast<std::size_t>(i)].odd_jump_count() + 1;
    for (int j = 0; j < m; ++j)
      if (j != i) mat.at(i, j) = -b.multiplicity(i, j);
  }
  return det_exact(mat);
}

ForestCountReport forest_count(const FoliationSpec& spec, const CharPolyBundle& bundle, long n) {
  assert(n >= 1);
  Int f = resultant(cyclotomic_like_xn_minus_1(n), bundle.f_z);
  f = abs(f);
  if (f == 0)
    throw StructureViolation("forest count vanished at n = " + std::to_string(n) +
                             "; the count identity requires f(n) >= 1");
  ForestCountReport r;
  r.n = n;
  r.f_n = std::move(f);
  r.f_base = base_forest_count(spec);
  r.method = CountMethod::Resultant;
  r.formal = n <= 2L * spec.max_jump();
  return r;
}

ForestCountReport forest_count(const FoliationSpec& spec, long n) {
  return forest_count(spec, char_poly(spec), n);
}

ForestCountReport forest_count_oracle(const FoliationSpec& spec, long n) {
  IntegerMatrix mat = laplacian(expand(spec, n));
  mat.add_identity();
  ForestCountReport r;
  r.n = n;
  r.f_n = det_exact(mat);
  r.f_base = base_forest_count(spec);
  r.method = CountMethod::Oracle;
  r.formal = false;
  return r;
}

ChebyshevFloatCount forest_count_chebyshev(const FoliationSpec& spec, long n,
                                           int precision_digits) {
  assert(n >= 1);
  const CharPolyBundle bundle = char_poly(spec);
  const RootSet rs = q_roots(bundle, precision_digits);

  // log f(n) = n log eta + sum_p mult_p log|2 T_n(w_p) - 2|, using
  // 2 T_n(w) - 2 = z^n (1 - z^-n)^2 with |z| >= 1.
  double log_f = static_cast<double>(n) * log_abs(bundle.eta);
  double err_log = 1e-14 * static_cast<double>(n) + 1e-14;
  for (std::size_t p = 0; p < rs.roots.size(); ++p) {
    const std::complex<double> w = rs.roots[p];
    const std::complex<double> root_disc = std::sqrt(w * w - 1.0);
    std::complex<double> z = w + root_disc;
    if (std::abs(z) < 1.0) z = w - root_disc;
    const double log_z = std::log(std::abs(z));
    const std::complex<double> t =
        std::polar(std::exp(-static_cast<double>(n) * log_z), -static_cast<double>(n) * std::arg(z));
    const double one_minus_t = std::abs(1.0 - t);
    log_f += n * log_z + 2.0 * std::log(one_minus_t);
    // first-order propagation of the certified root error through z(w) and (1 - z^-n)^2
    const double dz_dw = std::abs(root_disc) > 1e-12 ? std::abs(z / root_disc) : 1e12;
    const double amplification =
        static_cast<double>(n) * dz_dw / std::abs(z) * (1.0 + 2.0 / std::max(one_minus_t, 1e-12));
    err_log += (rs.certified_error[p] + 1e-15) * (1.0 + amplification);
  }

  ChebyshevFloatCount out;
  out.n = n;
  out.value = std::exp(log_f);
  out.lower = std::exp(log_f - err_log);
  out.upper = std::exp(log_f + err_log);
  if (!std::isfinite(out.upper))
    throw PrecisionInsufficient("float forest count overflows at n = " + std::to_string(n));
  const double lo = std::ceil(out.lower);
  const double hi = std::floor(out.upper);
  if (lo != hi || hi < 1.0)
    throw PrecisionInsufficient("interval [" + std::to_string(out.lower) + ", " +
                                std::to_string(out.upper) +
                                "] does not pin a unique positive integer forest count");
  out.pinned = Int(hi);
  return out;
}

}  // namespace circforest
