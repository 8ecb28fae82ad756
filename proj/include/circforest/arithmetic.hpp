// arithmetic.hpp — square-free parts and the f(n) = [p·]f(H)·a(n)² structure.
#pragma once

#include <optional>

#include "circforest/char_poly.hpp"
#include "circforest/graph.hpp"

namespace circforest {

// Product of primes dividing N to an odd power; N / result is a perfect
// square. Trial division to 10^6, then rho with a step budget
// (FactorizationTimeout when exhausted). Requires N >= 1.
Int squarefree_part(const Int& n, long rho_step_budget = 40'000'000L);

// r with r*r == N, or nullopt when N is not a perfect square. N >= 0.
std::optional<Int> integer_sqrt_exact(const Int& n);

struct ArithmeticReport {
  long n = 0;
  Int f_n;
  Int f_base;
  Int q_minus_one;
  Int square_free_p;
  Int a_n;  // non-negative; only a_n^2 is meaningful
  bool even = false;
  bool verified = false;
};

// Checks f(n) = f(H)·a(n)² for odd n and f(n) = p·f(H)·a(n)² for even n,
// where p = squarefree_part(Q(-1)). A non-integral ratio or a non-square
// quotient throws StructureViolation: it would falsify the count structure.
ArithmeticReport verify_arithmetic_structure(const FoliationSpec& spec, long n);
ArithmeticReport verify_arithmetic_structure(const FoliationSpec& spec,
                                             const CharPolyBundle& bundle, long n);

}  // namespace circforest
