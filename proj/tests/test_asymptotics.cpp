// Roots of Q, the growth constant by two routes, and convergence tables.
#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "circforest/asymptotics.hpp"
#include "circforest/char_poly.hpp"
#include "circforest/dsl.hpp"
#include "circforest/forest_count.hpp"

using namespace circforest;

namespace {

FoliationSpec family(const std::string& text) { return build_family(parse_family(text)); }

CharPolyBundle bundle(const std::string& text) { return char_poly(family(text)); }

}  // namespace

TEST_SUITE("roots of Q") {
  TEST_CASE("single cycle has the lone root 3/2") {
    const RootSet rs = q_roots(bundle("C(n;1)"));
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(rs.roots[0].imag() == 0.0);
    CHECK(rs.certified_error[0] < 1e-10);
  }

  TEST_CASE("star family roots carry the double root at 2") {
    // q = -4 (8w - 13) (w - 2)^2
    const RootSet rs = q_roots(bundle("Y(n;1,1,1)"));
    REQUIRE(rs.roots.size() == 3);
    CHECK(rs.roots[0].real() == doctest::Approx(13.0 / 8.0).epsilon(1e-12));
    CHECK(rs.roots[1].real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rs.roots[2].real() == doctest::Approx(2.0).epsilon(1e-12));
    for (double e : rs.certified_error) CHECK(e < 1e-10);

    const auto clusters = clustered_roots(rs);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].second == 1);
    CHECK(clusters[1].second == 2);
    CHECK(clusters[1].first.real() == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("double-star roots are 5/3, 9/5, and 2 twice") {
    const RootSet rs = q_roots(bundle("H(n;1,1,1,1)"));
    REQUIRE(rs.roots.size() == 4);
    CHECK(rs.roots[0].real() == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(rs.roots[1].real() == doctest::Approx(9.0 / 5.0).epsilon(1e-12));
    CHECK(rs.roots[2].real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rs.roots[3].real() == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("constant Q has no roots") {
    const RootSet rs = q_roots(bundle("X(K_3,C())"));
    CHECK(rs.roots.empty());
  }

  TEST_CASE("every root count matches the degree") {
    for (const char* text : {"C(n;1,2)", "GP(n,2)", "I(n,2,3)", "SW(n;[1],[2])", "T(n,3)"}) {
      CAPTURE(text);
      const CharPolyBundle b = bundle(text);
      const RootSet rs = q_roots(b);
      CHECK(static_cast<int>(rs.roots.size()) == b.q.degree());
    }
  }
}

TEST_SUITE("growth constant") {
  TEST_CASE("single cycle: (3 + sqrt 5)/2") {
    const double want = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(mahler_via_roots(bundle("C(n;1)")) == doctest::Approx(want).epsilon(1e-12));
    CHECK(mahler_via_quadrature(bundle("C(n;1)")) == doctest::Approx(want).epsilon(1e-12));
  }

  TEST_CASE("star family: (7 + 4 sqrt 3)(13 + sqrt 105)/2") {
    const double want = 0.5 * (7.0 + 4.0 * std::sqrt(3.0)) * (13.0 + std::sqrt(105.0));
    CHECK(mahler_via_roots(bundle("Y(n;1,1,1)")) == doctest::Approx(want).epsilon(1e-10));
  }

  TEST_CASE("double star: 9 (7 + 4 sqrt 3)(9 + 2 sqrt 14)") {
    const double want = 9.0 * (7.0 + 4.0 * std::sqrt(3.0)) * (9.0 + 2.0 * std::sqrt(14.0));
    CHECK(mahler_via_roots(bundle("H(n;1,1,1,1)")) == doctest::Approx(want).epsilon(1e-10));
  }

  TEST_CASE("the two routes agree within the certified estimate") {
    for (const char* text : {"C(n;1)", "C(n;1,2)", "GP(n,2)", "I(n,2,3)", "SW(n;[1],[2])",
                             "Y(n;1,1,1)", "H(n;1,1,1,1)", "T(n,3)"}) {
      CAPTURE(text);
      const MahlerReport r = mahler_report(bundle(text));
      CHECK(r.discrepancy <= 1e-8 * std::max(1.0, r.a_roots));
      CHECK(r.discrepancy <= r.error_estimate);
      CHECK(r.a_roots > 1.0);
    }
  }

  TEST_CASE("growth dominates the hub constant eta") {
    for (const char* text : {"Y(n;1,1,1)", "H(n;1,1,1,1)"}) {
      const CharPolyBundle b = bundle(text);
      CHECK(mahler_via_roots(b) >= b.eta.get_d());
    }
  }

  TEST_CASE("all-empty fibers grow exactly like disjoint base copies") {
    const CharPolyBundle b = bundle("X(K_3,C())");
    CHECK(mahler_via_roots(b) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(mahler_via_quadrature(b) == doctest::Approx(16.0).epsilon(1e-12));
  }
}

TEST_SUITE("convergence tables") {
  TEST_CASE("rows start past the formal threshold") {
    const std::vector<ConvergenceRow> rows = convergence_report(family("GP(n,2)"), 12);
    REQUIRE_FALSE(rows.empty());
    CHECK(rows.front().n == 5);  // 2 * max_jump + 1
    CHECK(rows.back().n == 12);
    CHECK(rows.size() == 8);
  }

  TEST_CASE("nth roots of the counts converge to the growth constant") {
    const std::vector<ConvergenceRow> rows = convergence_report(family("C(n;1)"), 40);
    CHECK(std::abs(rows.back().ratio - 1.0) < 1e-6);
    // geometric decay: the deviation at n_max is far below the halfway one
    const ConvergenceRow mid = rows[rows.size() / 2];
    CHECK(std::abs(rows.back().ratio - 1.0) < 0.5 * std::abs(mid.ratio - 1.0) + 1e-14);
  }

  TEST_CASE("double-cycle table approaches 1 from below") {
    const std::vector<ConvergenceRow> rows = convergence_report(family("GP(n,2)"), 30);
    CHECK(std::abs(rows.back().ratio - 1.0) < 1e-3);
    for (const ConvergenceRow& r : rows) {
      CHECK(r.ratio > 0.9);
      CHECK(r.ratio < 1.0 + 1e-9);
    }
  }

  TEST_CASE("nth root column matches an exact recomputation") {
    const FoliationSpec s = family("C(n;1)");
    const std::vector<ConvergenceRow> rows = convergence_report(s, 10);
    for (const ConvergenceRow& r : rows) {
      const double exact = std::pow(forest_count(s, r.n).f_n.get_d(), 1.0 / r.n);
      CHECK(r.nth_root == doctest::Approx(exact).epsilon(1e-9));
    }
  }

  TEST_CASE("disjoint-copies family pins the ratio at exactly 1") {
    const std::vector<ConvergenceRow> rows = convergence_report(family("X(K_3,C())"), 8);
    for (const ConvergenceRow& r : rows) {
      CHECK(r.nth_root == doctest::Approx(16.0).epsilon(1e-9));
      CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}
