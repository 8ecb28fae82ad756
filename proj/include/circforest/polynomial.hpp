// polynomial.hpp — dense univariate polynomials over Z, coefficients lowest-degree first.
#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "circforest/integers.hpp"

namespace circforest {

class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;  // zero polynomial
  IntegerPolynomial(std::initializer_list<long> coeffs);
  explicit IntegerPolynomial(std::vector<Int> coeffs);

  static IntegerPolynomial constant(Int c);
  static IntegerPolynomial variable();                    // x
  static IntegerPolynomial monomial(int k, Int c = Int(1));  // c*x^k

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& coeff(int k) const;  // 0 outside the stored range
  const std::vector<Int>& coefficients() const { return c_; }
  Int leading() const;

  IntegerPolynomial operator+(const IntegerPolynomial& o) const;
  IntegerPolynomial operator-(const IntegerPolynomial& o) const;
  IntegerPolynomial operator*(const IntegerPolynomial& o) const;
  IntegerPolynomial operator-() const;
  IntegerPolynomial operator*(const Int& s) const;
  bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;

  IntegerPolynomial derivative() const;
  IntegerPolynomial compose(const IntegerPolynomial& inner) const;

  // true iff coeff(k) == coeff(d-k) for all k (zero polynomial counts as palindromic)
  bool is_palindromic() const;

  // content-free copy with positive leading coefficient
  IntegerPolynomial primitive_part() const;

  std::string to_string(const std::string& var = "w") const;

 private:
  void trim();
  std::vector<Int> c_;
};

// x^n - 1 for n >= 1
IntegerPolynomial cyclotomic_like_xn_minus_1(long n);

// Square-free decomposition: returns (factor, multiplicity) pairs with factors
// primitive, pairwise coprime, each square-free, and
// input = unit * prod factor^multiplicity. Multiplicities strictly increasing.
std::vector<std::pair<IntegerPolynomial, int>> squarefree_decomposition(const IntegerPolynomial& p);

}  // namespace circforest
