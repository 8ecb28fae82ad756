#include "circforest/asymptotics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "circforest/errors.hpp"
#include "circforest/forest_count.hpp"

namespace circforest {
namespace {

using Cplx = std::complex<double>;

Cplx horner(const std::vector<double>& monic, Cplx x) {
  Cplx acc(0.0, 0.0);
  for (auto it = monic.rbegin(); it != monic.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Cplx horner_derivative(const std::vector<double>& monic, Cplx x) {
  Cplx acc(0.0, 0.0);
  for (std::size_t k = monic.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * monic[k];
  return acc;
}

std::vector<Cplx> companion_eigenvalues(const std::vector<double>& monic) {
  const int d = static_cast<int>(monic.size()) - 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -monic[static_cast<std::size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, /*computeEigenvectors=*/false);
  std::vector<Cplx> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

// Simultaneous Aberth-Ehrlich iteration until every correction is below tol.
// Returns true on convergence; roots updated in place.
bool aberth_iterate(const std::vector<double>& monic, std::vector<Cplx>& roots, double tol,
                    int max_iter) {
  const std::size_t d = roots.size();
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_small = true;
    for (std::size_t p = 0; p < d; ++p) {
      const Cplx x = roots[p];
      Cplx fx = horner(monic, x);
      if (fx == Cplx(0.0, 0.0)) continue;
      Cplx dfx = horner_derivative(monic, x);
      if (dfx == Cplx(0.0, 0.0)) {
        roots[p] += Cplx(tol * 100 + 1e-8, tol * 50);
        all_small = false;
        continue;
      }
      const Cplx newton = fx / dfx;
      Cplx rep(0.0, 0.0);
      for (std::size_t q = 0; q < d; ++q)
        if (q != p) rep += 1.0 / (x - roots[q]);
      const Cplx denom = 1.0 - newton * rep;
      const Cplx corr = denom == Cplx(0.0, 0.0) ? newton : newton / denom;
      roots[p] = x - corr;
      if (std::abs(corr) > tol * (1.0 + std::abs(roots[p]))) all_small = false;
    }
    if (all_small) return true;
  }
  return false;
}

// All roots of a square-free primitive integer polynomial.
std::vector<Cplx> squarefree_roots(const IntegerPolynomial& u, double tol) {
  const int d = u.degree();
  assert(d >= 1);
  std::vector<double> monic(static_cast<std::size_t>(d) + 1);
  const double lead = u.leading().get_d();
  for (int k = 0; k <= d; ++k) monic[static_cast<std::size_t>(k)] = u.coeff(k).get_d() / lead;

  // initial guesses on a circle slightly above the Cauchy root bound
  double radius = 0.0;
  for (int k = 0; k < d; ++k)
    radius = std::max(radius, std::abs(monic[static_cast<std::size_t>(k)]));
  radius = 1.0 + radius;
  std::vector<Cplx> roots(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double angle =
        2.0 * std::numbers::pi * (static_cast<double>(k) + 0.354) / static_cast<double>(d);
    roots[static_cast<std::size_t>(k)] = std::polar(0.7 * radius + 0.3, angle);
  }
  if (aberth_iterate(monic, roots, tol, 400)) return roots;
  // fallback initialization from companion-matrix eigenvalues
  roots = companion_eigenvalues(monic);
  if (aberth_iterate(monic, roots, tol, 400)) return roots;
  throw ConvergenceFailure("root iteration failed for " + u.to_string());
}

}  // namespace

RootSet q_roots(const CharPolyBundle& bundle, int precision_digits) {
  RootSet rs;
  if (bundle.q.degree() < 1) return rs;
  const double tol = std::max(1e-15, std::pow(10.0, -precision_digits - 1));
  for (const auto& [factor, mult] : squarefree_decomposition(bundle.q)) {
    const int d = factor.degree();
    std::vector<Cplx> roots = squarefree_roots(factor, tol);
    for (Cplx r : roots) {
      // snap real roots of the real polynomial onto the axis
      const Cplx fr = factor.eval(r);
      const Cplx dfr = factor.derivative().eval(r);
      double err = std::abs(dfr) > 0.0
                       ? static_cast<double>(d) * std::abs(fr / dfr) + 1e-15 * (1.0 + std::abs(r))
                       : 1e-7;
      if (std::abs(r.imag()) <= 4.0 * (err + 1e-14) * (1.0 + std::abs(r.real())))
        r = Cplx(r.real(), 0.0);
      for (int copies = 0; copies < mult; ++copies) {
        rs.roots.push_back(r);
        rs.certified_error.push_back(err);
      }
    }
  }
  if (static_cast<int>(rs.roots.size()) != bundle.q.degree())
    throw ConvergenceFailure("expected " + std::to_string(bundle.q.degree()) + " roots, found " +
                             std::to_string(rs.roots.size()));
  // deterministic order: ascending real part, then imaginary part
  std::vector<std::size_t> idx(rs.roots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Cplx ra = rs.roots[a], rb = rs.roots[b];
    if (ra.real() != rb.real()) return ra.real() < rb.real();
    return ra.imag() < rb.imag();
  });
  RootSet sorted;
  for (std::size_t i : idx) {
    sorted.roots.push_back(rs.roots[i]);
    sorted.certified_error.push_back(rs.certified_error[i]);
  }
  return sorted;
}

std::vector<std::pair<Cplx, int>> clustered_roots(const RootSet& rs) {
  std::vector<std::pair<Cplx, int>> out;
  for (const Cplx& r : rs.roots) {
    bool merged = false;
    for (auto& [rep, mult] : out) {
      if (std::abs(r - rep) <= 1e-8) {
        rep = (rep * static_cast<double>(mult) + r) / static_cast<double>(mult + 1);
        ++mult;
        merged = true;
        break;
      }
    }
    if (!merged) out.emplace_back(r, 1);
  }
  return out;
}

double mahler_via_roots(const CharPolyBundle& bundle, int precision_digits) {
  double log_a = log_abs(bundle.eta);
  if (bundle.q.degree() >= 1) {
    const RootSet rs = q_roots(bundle, precision_digits);
    for (const auto& [w, mult] : clustered_roots(rs)) {
      const Cplx root_disc = std::sqrt(w * w - 1.0);
      const Cplx z_plus = w + root_disc;
      const Cplx z_minus = w - root_disc;
      const double az = std::max(std::abs(z_plus), std::abs(z_minus));
      if (std::fabs(az - 1.0) < 1e-6)
        throw UnitCircleRoot("|z| = " + std::to_string(az) +
                             " is within 1e-6 of the unit circle; connected bases exclude this");
      log_a += mult * std::log(az);
    }
  }
  return std::exp(log_a);
}

double mahler_via_quadrature(const CharPolyBundle& bundle, int precision_digits) {
  if (bundle.q.degree() < 1) return std::fabs(bundle.q.eval(1.0));
  std::vector<double> coeffs;
  coeffs.reserve(bundle.q.coefficients().size());
  for (const auto& c : bundle.q.coefficients()) coeffs.push_back(c.get_d());

  const double tol = std::max(1e-14, 0.5 * std::pow(10.0, -precision_digits));
  double prev = 0.0;
  bool have_prev = false;
  for (long nodes = 64; nodes <= (1L << 22); nodes *= 2) {
    // Trapezoid on a 1-periodic function is the plain node average. Partial
    // sums use fixed chunk boundaries and a fixed combine order, so the result
    // is bit-identical for any thread count.
    const long chunks = std::min<long>(nodes, 256);
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long c = 0; c < chunks; ++c) {
      const long begin = c * nodes / chunks;
      const long end = (c + 1) * nodes / chunks;
      double local = 0.0;
      for (long j = begin; j < end; ++j) {
        const double w = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                  static_cast<double>(nodes));
        double val = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) val = val * w + *it;
        local += std::log(std::fabs(val));
      }
      partial[static_cast<std::size_t>(c)] = local;
    }
    double sum = 0.0;
    for (double p : partial) sum += p;
    const double integral = sum / static_cast<double>(nodes);
    if (have_prev && std::fabs(integral - prev) < 0.5 * tol) return std::exp(integral);
    prev = integral;
    have_prev = true;
  }
  throw QuadratureNonconvergence("trapezoid estimates did not stabilize within 2^22 nodes");
}

MahlerReport mahler_report(const CharPolyBundle& bundle, int precision_digits) {
  MahlerReport r;
  r.roots_used = q_roots(bundle, precision_digits);
  r.a_roots = mahler_via_roots(bundle, precision_digits);
  r.a_quadrature = mahler_via_quadrature(bundle, precision_digits);
  r.discrepancy = std::fabs(r.a_roots - r.a_quadrature);
  double err_sum = 1e-13;
  for (double e : r.roots_used.certified_error) err_sum += 4.0 * e + 1e-14;
  r.error_estimate =
      r.a_roots * (err_sum + 2.0 * std::max(1e-14, 0.5 * std::pow(10.0, -precision_digits)));
  return r;
}

std::vector<ConvergenceRow> convergence_report(const FoliationSpec& spec, long n_max,
                                               int precision_digits) {
  assert(n_max >= 3);
  const CharPolyBundle bundle = char_poly(spec);
  const double a = mahler_via_roots(bundle, precision_digits);
  const long n_lo = 2L * spec.max_jump() + 1;
  std::vector<ConvergenceRow> rows;
  if (n_max < n_lo) return rows;
  rows.resize(static_cast<std::size_t>(n_max - n_lo + 1));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long n = n_lo; n <= n_max; ++n) {
    const ForestCountReport rep = forest_count(spec, bundle, n);
    const double nth = std::exp(log_abs(rep.f_n) / static_cast<double>(n));
    rows[static_cast<std::size_t>(n - n_lo)] = {n, nth, nth / a};
  }
  return rows;
}

}  // namespace circforest
