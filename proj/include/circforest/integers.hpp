// integers.hpp — arbitrary-precision scalar types and small helpers.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace circforest {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

// Natural log of |v| for v != 0, exact enough for asymptotics (v may far exceed double range).
inline double log_abs(const Int& v) {
  signed long e = 0;
  double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * 0.6931471805599453094;
}

}  // namespace circforest
