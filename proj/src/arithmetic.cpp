#include "circforest/arithmetic.hpp"

#include <map>
#include <string>

#include "circforest/errors.hpp"
#include "circforest/forest_count.hpp"

namespace circforest {
namespace {

void spend(long& budget, long steps) {
  budget -= steps;
  if (budget < 0)
    throw FactorizationTimeout("factorization step budget exhausted; raise rho_step_budget");
}

// Brent-cycle rho. May return a trivial factor (1 or n); caller retries with
// another offset c. Budget counts squaring steps.
Int rho_brent(const Int& n, unsigned long c, long& budget) {
  if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return Int(2);
  Int y(2), g(1), q(1), x, ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
    spend(budget, static_cast<long>(r));
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      spend(budget, static_cast<long>(lim));
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    // backtrack one step at a time from the last saved point
    do {
      ys = (ys * ys + c) % n;
      Int diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      spend(budget, 1);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Int& v, std::map<Int, int>& out, int exp_multiplier, long& budget) {
  if (v == 1) return;
  if (mpz_probab_prime_p(v.get_mpz_t(), 32) != 0) {
    out[v] += exp_multiplier;
    return;
  }
  if (mpz_perfect_power_p(v.get_mpz_t()) != 0) {
    for (unsigned long e = 2; e <= mpz_sizeinbase(v.get_mpz_t(), 2); ++e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), e) != 0) {
        factor_into(root, out, exp_multiplier * static_cast<int>(e), budget);
        return;
      }
    }
  }
  Int d;
  for (unsigned long c = 1;; ++c) {
    d = rho_brent(v, c, budget);
    if (d != 1 && d != v) break;
    spend(budget, 1);
  }
  factor_into(d, out, exp_multiplier, budget);
  factor_into(v / d, out, exp_multiplier, budget);
}

}  // namespace

Int squarefree_part(const Int& n, long rho_step_budget) {
  if (n < 1) throw StructureViolation("squarefree_part needs a positive argument");
  Int rest = n;
  std::map<Int, int> factors;
  // small primes by trial division
  for (unsigned long p = 2; p <= 1'000'000UL && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (p * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      factors[Int(p)] += 1;
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  long budget = rho_step_budget;
  factor_into(rest, factors, 1, budget);
  Int part(1);
  for (const auto& [prime, exponent] : factors)
    if (exponent % 2 == 1) part *= prime;
  return part;
}

std::optional<Int> integer_sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

ArithmeticReport verify_arithmetic_structure(const FoliationSpec& spec,
                                             const CharPolyBundle& bundle, long n) {
  ArithmeticReport r;
  r.n = n;
  r.even = n % 2 == 0;
  ForestCountReport count = forest_count(spec, bundle, n);
  r.f_n = std::move(count.f_n);
  r.f_base = std::move(count.f_base);
  r.q_minus_one = q_at_minus_one(spec);
  r.square_free_p = squarefree_part(r.q_minus_one);
  Int denom = r.f_base;
  if (r.even) denom *= r.square_free_p;
  if (r.f_n % denom != 0)
    throw StructureViolation("f(" + std::to_string(n) + ") = " + to_decimal(r.f_n) +
                             " is not divisible by " + to_decimal(denom));
  const Int ratio = r.f_n / denom;
  const auto root = integer_sqrt_exact(ratio);
  if (!root)
    throw StructureViolation("f(" + std::to_string(n) + ") / " + to_decimal(denom) + " = " +
                             to_decimal(ratio) + " is not a perfect square");
  r.a_n = *root;
  r.verified = denom * r.a_n * r.a_n == r.f_n;
  return r;
}

ArithmeticReport verify_arithmetic_structure(const FoliationSpec& spec, long n) {
  return verify_arithmetic_structure(spec, char_poly(spec), n);
}

}  // namespace circforest
