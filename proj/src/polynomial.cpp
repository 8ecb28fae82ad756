#include "circforest/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "circforest/errors.hpp"

namespace circforest {

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntegerPolynomial::IntegerPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntegerPolynomial IntegerPolynomial::constant(Int c) {
  IntegerPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntegerPolynomial IntegerPolynomial::variable() { return monomial(1); }

IntegerPolynomial IntegerPolynomial::monomial(int k, Int c) {
  IntegerPolynomial p;
  if (c != 0) {
    p.c_.assign(static_cast<std::size_t>(k) + 1, Int(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

void IntegerPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntegerPolynomial::coeff(int k) const {
  static const Int zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(k)];
}

Int IntegerPolynomial::leading() const { return c_.empty() ? Int(0) : c_.back(); }

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  std::vector<Int> r(c_);
  for (auto& v : r) v = -v;
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator*(const Int& s) const {
  std::vector<Int> r(c_);
  for (auto& v : r) v *= s;
  return IntegerPolynomial(std::move(r));
}

Int IntegerPolynomial::eval(const Int& x) const {
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntegerPolynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += Rat(*it);
  }
  acc.canonicalize();
  return acc;
}

double IntegerPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::complex<double> IntegerPolynomial::eval(std::complex<double> x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::compose(const IntegerPolynomial& inner) const {
  IntegerPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

bool IntegerPolynomial::is_palindromic() const {
  const int d = degree();
  for (int k = 0; 2 * k <= d; ++k)
    if (coeff(k) != coeff(d - k)) return false;
  return true;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Int g(0);
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (c_.back() < 0) g = -g;
  std::vector<Int> r(c_);
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntegerPolynomial(std::move(r));
}

std::string IntegerPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Int& c = coeff(k);
    if (c == 0) continue;
    Int a = c > 0 ? c : Int(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

IntegerPolynomial cyclotomic_like_xn_minus_1(long n) {
  assert(n >= 1);
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
  c[0] = -1;
  c.back() = 1;
  return IntegerPolynomial(std::move(c));
}

namespace {

// Rational polynomials, used only inside the square-free decomposition.
using RatPoly = std::vector<Rat>;  // lowest-degree first, no trailing zeros

void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_from(const IntegerPolynomial& p) {
  RatPoly r;
  r.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

RatPoly rp_derivative(const RatPoly& p) {
  RatPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
  rp_trim(r);
  return r;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  rp_trim(r);
  return r;
}

// in-place remainder of a by b (b nonzero); also returns quotient
RatPoly rp_divmod(RatPoly& a, const RatPoly& b) {
  RatPoly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    Rat f = a[k] / lead;
    if (f != 0) {
      q[k - b.size() + 1] = f;
      for (std::size_t i = 0; i < b.size(); ++i) a[k - b.size() + 1 + i] -= f * b[i];
    }
    if (k == 0) break;
  }
  rp_trim(a);
  rp_trim(q);
  return q;
}

RatPoly rp_monic(RatPoly p) {
  if (p.empty()) return p;
  const Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_trim(a);
  rp_trim(b);
  while (!b.empty()) {
    rp_divmod(a, b);
    std::swap(a, b);
    b = rp_monic(std::move(b));
  }
  return rp_monic(std::move(a));
}

RatPoly rp_div_exact(RatPoly a, const RatPoly& b) {
  RatPoly q = rp_divmod(a, b);
  assert(a.empty());  // exact by construction in Yun's recurrence
  return q;
}

IntegerPolynomial rp_to_primitive(const RatPoly& p) {
  // clear denominators, strip content, normalize sign
  Int l(1);
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> r;
  r.reserve(p.size());
  for (const auto& c : p) {
    Rat scaled = c * Rat(l);
    scaled.canonicalize();
    assert(scaled.get_den() == 1);
    r.push_back(scaled.get_num());
  }
  return IntegerPolynomial(std::move(r)).primitive_part();
}

}  // namespace

std::vector<std::pair<IntegerPolynomial, int>> squarefree_decomposition(const IntegerPolynomial& p) {
  if (p.degree() < 1) throw ZeroPolynomial("squarefree_decomposition: need degree >= 1");
  std::vector<std::pair<IntegerPolynomial, int>> out;
  // Yun's algorithm over Q: peels factors of multiplicity 1, 2, ... using
  // gcd(f, f') without ever re-squaring, so multiplicities are exact.
  RatPoly f = rp_from(p);
  RatPoly fp = rp_derivative(f);
  RatPoly a0 = rp_gcd(f, fp);
  RatPoly b = rp_div_exact(f, a0);
  RatPoly c = rp_div_exact(fp, a0);
  RatPoly d = rp_sub(c, rp_derivative(b));
  for (int mult = 1; b.size() > 1; ++mult) {
    RatPoly a = rp_gcd(b, d);
    if (a.size() > 1) out.emplace_back(rp_to_primitive(a), mult);
    b = rp_div_exact(b, a);
    c = rp_div_exact(d, a);
    d = rp_sub(c, rp_derivative(b));
  }
  return out;
}

}  // namespace circforest
