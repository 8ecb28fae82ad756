// asymptotics.hpp — roots of Q, the growth constant A, and convergence tables.
#pragma once

#include <complex>
#include <vector>

#include "circforest/char_poly.hpp"
#include "circforest/graph.hpp"

namespace circforest {

struct RootSet {
  std::vector<std::complex<double>> roots;  // with multiplicity, sorted (re, im)
  std::vector<double> certified_error;      // per-root bound
};

// All deg(q) roots (multiplicity from an exact square-free decomposition, so
// repeated roots do not degrade accuracy). Constant q yields an empty set.
RootSet q_roots(const CharPolyBundle& bundle, int precision_digits = 12);

// Roots clustered to within 1e-8, with multiplicities.
std::vector<std::pair<std::complex<double>, int>> clustered_roots(const RootSet& rs);

// A = eta * prod over roots of |z(w)| with z = w + sqrt(w^2-1) branch-chosen
// so |z| >= 1. A |z| within 1e-6 of 1 throws UnitCircleRoot.
double mahler_via_roots(const CharPolyBundle& bundle, int precision_digits = 12);

// A = exp(integral_0^1 log|Q(cos 2 pi t)| dt) by node-doubling trapezoid rule.
double mahler_via_quadrature(const CharPolyBundle& bundle, int precision_digits = 12);

struct MahlerReport {
  double a_roots = 0.0;
  double a_quadrature = 0.0;
  double discrepancy = 0.0;     // |a_roots - a_quadrature|
  double error_estimate = 0.0;  // combined bound the discrepancy must respect
  RootSet roots_used;
};

MahlerReport mahler_report(const CharPolyBundle& bundle, int precision_digits = 12);

struct ConvergenceRow {
  long n = 0;
  double nth_root = 0.0;  // f(n)^(1/n)
  double ratio = 0.0;     // f(n)^(1/n) / A
};

// Rows for each valid n (n > 2*max_jump) up to n_max inclusive; n_max >= 3.
std::vector<ConvergenceRow> convergence_report(const FoliationSpec& spec, long n_max,
                                               int precision_digits = 12);

}  // namespace circforest
