// forest_count.hpp — rooted-forest counts by resultant, oracle, and float routes.
#pragma once

#include <string>

#include "circforest/char_poly.hpp"
#include "circforest/graph.hpp"

namespace circforest {

enum class CountMethod { Resultant, Oracle, ChebyshevFloat };

std::string method_tag(CountMethod m);  // "resultant" | "oracle" | "chebyshev-float"

struct ForestCountReport {
  long n = 0;
  Int f_n;
  Int f_base;
  CountMethod method = CountMethod::Resultant;
  // true when n <= 2*max_jump: the resultant is still a well-defined integer,
  // but no graph with these jumps exists at this n.
  bool formal = false;
};

// f(H) = det(I + L(H)), independent of the polynomial route.
Int base_forest_count(const FoliationSpec& spec);

// Q(-1) via the odd-jump-count diagonal weighting (not polynomial evaluation).
Int q_at_minus_one(const FoliationSpec& spec);

// f(n) = |Res(z^n - 1, F(z))|; n >= 1. Reuses a prebuilt bundle if given.
ForestCountReport forest_count(const FoliationSpec& spec, long n);
ForestCountReport forest_count(const FoliationSpec& spec, const CharPolyBundle& bundle, long n);

// f(n) = det(I + L(expand(spec, n))); requires n > 2*max_jump.
ForestCountReport forest_count_oracle(const FoliationSpec& spec, long n);

// Floating route via the root product eta^n * prod |2 T_n(w_p) - 2|.
struct ChebyshevFloatCount {
  long n = 0;
  double value = 0.0;      // best estimate of f(n)
  double lower = 0.0;      // value interval accounting for root error
  double upper = 0.0;
  Int pinned;              // the unique integer in [lower, upper]
};

// Throws PrecisionInsufficient unless [lower, upper] pins exactly one integer.
ChebyshevFloatCount forest_count_chebyshev(const FoliationSpec& spec, long n,
                                           int precision_digits = 12);

}  // namespace circforest
