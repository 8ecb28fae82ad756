// Compares the serial and OpenMP kernels: exact determinants and the Mahler
// quadrature. Reports wall times; results must match exactly/bitwise.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circforest/char_poly.hpp"
#include "circforest/determinant.hpp"
#include "circforest/dsl.hpp"
#include "circforest/forest_count.hpp"
#include "circforest/matrix.hpp"

using namespace circforest;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

IntegerMatrix random_matrix(int order, std::uint64_t seed) {
  IntegerMatrix m(order);
  std::uint64_t state = seed;
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      m.at(i, j) = static_cast<long>((state >> 33) % 2001) - 1000;
    }
  return m;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled at build time; both columns run the same serial code\n");
#endif

  std::printf("\n-- exact determinant (random entries in [-1000, 1000]) --\n");
  std::printf("%8s %12s %12s %8s\n", "order", "serial[s]", "parallel[s]", "match");
  for (int order : {60, 120, 180}) {
    const IntegerMatrix m = random_matrix(order, 0x9e3779b97f4a7c15ULL + order);
    auto t0 = std::chrono::steady_clock::now();
    const Int serial = det_exact_serial(m);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const Int parallel = det_exact(m);
    const double tp = seconds_since(t0);
    std::printf("%8d %12.3f %12.3f %8s\n", order, ts, tp, serial == parallel ? "yes" : "NO");
  }

  std::printf("\n-- resultant-based forest counts, GP(n,2) --\n");
  std::printf("%8s %12s %16s\n", "n", "time[s]", "digits of f(n)");
  const FoliationSpec spec = build_family(parse_family("GP(n,2)"));
  const CharPolyBundle bundle = char_poly(spec);
  for (long n : {100L, 200L, 400L}) {
    const auto t0 = std::chrono::steady_clock::now();
    const ForestCountReport r = forest_count(spec, bundle, n);
    std::printf("%8ld %12.3f %16zu\n", n, seconds_since(t0), r.f_n.get_str().size());
  }
  return 0;
}
