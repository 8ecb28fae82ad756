// Family descriptor text: parsing, diagnostics, canonical formatting.
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "circforest/dsl.hpp"
#include "circforest/errors.hpp"
#include "circforest/families.hpp"

using namespace circforest;

TEST_SUITE("descriptor parsing") {
  TEST_CASE("double cycle with symbolic n") {
    const FamilyDescriptor d = parse_family("GP(n,2)");
    CHECK(d.kind == FamilyKind::GP);
    CHECK(d.jump_lists == std::vector<std::vector<int>>{{2}, {1}});
    CHECK_FALSE(d.bound_n.has_value());
  }

  TEST_CASE("concrete first argument binds n") {
    const FamilyDescriptor d = parse_family("GP(5,2)");
    REQUIRE(d.bound_n.has_value());
    CHECK(*d.bound_n == 5);
  }

  TEST_CASE("two-jump generalization canonicalizes when the second jump is 1") {
    CHECK(parse_family("I(n,2,1)").kind == FamilyKind::GP);
    const FamilyDescriptor d = parse_family("I(n,2,3)");
    CHECK(d.kind == FamilyKind::I);
    CHECK(d.jump_lists == std::vector<std::vector<int>>{{2}, {3}});
  }

  TEST_CASE("single fiber with several jumps") {
    const FamilyDescriptor d = parse_family("C(n;1,2,5)");
    CHECK(d.kind == FamilyKind::C);
    CHECK(d.jump_lists == std::vector<std::vector<int>>{{1, 2, 5}});
  }

  TEST_CASE("bracketed fiber lists") {
    const FamilyDescriptor d = parse_family("SW(n;[1],[2],[1,2])");
    CHECK(d.kind == FamilyKind::SW);
    CHECK(d.jump_lists == std::vector<std::vector<int>>{{1}, {2}, {1, 2}});
  }

  TEST_CASE("star slots accept scalars and brackets") {
    const FamilyDescriptor d = parse_family("Y(n;[1,2],1,3)");
    CHECK(d.kind == FamilyKind::Y);
    CHECK(d.jump_lists == std::vector<std::vector<int>>{{1, 2}, {1}, {3}});
    CHECK(parse_family("H(n;1,1,1,1)").jump_lists.size() == 4);
  }

  TEST_CASE("torus order") {
    const FamilyDescriptor d = parse_family("T(n,3)");
    CHECK(d.kind == FamilyKind::T);
    CHECK(d.torus_order == 3);
    CHECK(d.jump_lists.empty());
  }

  TEST_CASE("product over a named base") {
    const FamilyDescriptor d = parse_family("X(K_3,C(1))");
    CHECK(d.kind == FamilyKind::X);
    CHECK(d.product_base == ProductBase::Complete);
    CHECK(d.product_base_order == 3);
    CHECK(d.jump_lists == std::vector<std::vector<int>>{{1}});
    CHECK_FALSE(d.bound_n.has_value());

    const FamilyDescriptor empty = parse_family("X(C_5,C())");
    CHECK(empty.product_base == ProductBase::Cycle);
    CHECK(empty.jump_lists == std::vector<std::vector<int>>{{}});
    CHECK(parse_family("X(P_4,C(2,3))").product_base == ProductBase::Path);
  }

  TEST_CASE("free-form foliation") {
    const FamilyDescriptor d =
        parse_family("FOLIATION{base:edges[(1,2):1,(1,3):2];fibers:[[1],[],[1,4]]}");
    CHECK(d.kind == FamilyKind::Foliation);
    REQUIRE(d.base_edges.size() == 2);
    CHECK(d.base_edges[0] == std::tuple<int, int, int>{1, 2, 1});
    CHECK(d.base_edges[1] == std::tuple<int, int, int>{1, 3, 2});
    CHECK(d.jump_lists == std::vector<std::vector<int>>{{1}, {}, {1, 4}});
    CHECK_FALSE(d.bound_n.has_value());
  }

  TEST_CASE("whitespace is insignificant") {
    CHECK(parse_family(" SW( n ; [1] , [2] ) ") == parse_family("SW(n;[1],[2])"));
  }

  TEST_CASE("parsed descriptors build real foliations") {
    const FoliationSpec s = build_family(parse_family("SW(n;[1],[2],[1,2])"));
    CHECK(s.base().vertex_count() == 3);
    CHECK(s.shift() == 5);
  }
}

TEST_SUITE("descriptor diagnostics") {
  TEST_CASE("syntax errors carry a position and the acceptable tokens") {
    const std::string text = "GP(n";
    try {
      parse_family(text);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position <= text.size());
      CHECK_FALSE(e.expected.empty());
    }
  }

  TEST_CASE("unknown family head lists every kind") {
    try {
      parse_family("Q(n;1)");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position == 0);
      CHECK(e.expected.size() == 9);
    }
  }

  TEST_CASE("stray characters are rejected at their offset") {
    try {
      parse_family("C(n;1)%");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position == 6);
    }
  }

  TEST_CASE("trailing input is rejected") {
    CHECK_THROWS_AS(parse_family("C(n;1) extra"), SyntaxError);
    CHECK_THROWS_AS(parse_family("GP(n,2))"), SyntaxError);
  }

  TEST_CASE("wrong punctuation") {
    CHECK_THROWS_AS(parse_family("GP[n,2]"), SyntaxError);
    CHECK_THROWS_AS(parse_family("GP(n;2)"), SyntaxError);
    CHECK_THROWS_AS(parse_family("C(n;)"), SyntaxError);
  }

  TEST_CASE("semantic violations point into the text") {
    const std::string text = "C(n;2,1)";
    try {
      parse_family(text);
      FAIL("expected a semantic error");
    } catch (const SemanticError& e) {
      CHECK(e.position < text.size());
    }
    CHECK_THROWS_AS(parse_family("C(n;0)"), SemanticError);
    CHECK_THROWS_AS(parse_family("C(n;1,1)"), SemanticError);
    CHECK_THROWS_AS(parse_family("T(n,2)"), SemanticError);
    CHECK_THROWS_AS(parse_family("GP(0,2)"), SemanticError);
    CHECK_THROWS_AS(parse_family("X(C_2,C(1))"), SemanticError);
  }

  TEST_CASE("foliation edge validation") {
    CHECK_THROWS_AS(parse_family("FOLIATION{base:edges[(2,1):1];fibers:[[1],[1]]}"),
                    SemanticError);
    CHECK_THROWS_AS(parse_family("FOLIATION{base:edges[(1,1):1];fibers:[[1]]}"), SemanticError);
    CHECK_THROWS_AS(parse_family("FOLIATION{base:edges[(1,2):0];fibers:[[1],[1]]}"),
                    SemanticError);
    // endpoint beyond the fiber count is only detectable after the fiber block
    const std::string text = "FOLIATION{base:edges[(1,3):1];fibers:[[1],[1]]}";
    try {
      parse_family(text);
      FAIL("expected a semantic error");
    } catch (const SemanticError& e) {
      CHECK(e.position < text.size());
      CHECK(e.position >= text.find("(1,3)"));
    }
  }
}

TEST_SUITE("canonical formatting") {
  TEST_CASE("fixed points") {
    for (const char* text :
         {"C(n;1)", "C(n;1,2)", "GP(n,2)", "I(n,2,3)", "SW(n;[1],[2])", "Y(n;1,1,1)",
          "H(n;1,1,1,1)", "T(n,3)", "X(K_3,C(1))", "X(C_5,C())",
          "FOLIATION{base:edges[(1,2):1];fibers:[[1],[]]}", "GP(5,2)", "T(7,4)"}) {
      CAPTURE(text);
      CHECK(format_family(parse_family(text)) == text);
    }
  }

  TEST_CASE("canonicalizations") {
    CHECK(format_family(parse_family("I(n,2,1)")) == "GP(n,2)");
    CHECK(format_family(parse_family("Y(n;[1],[1],[1])")) == "Y(n;1,1,1)");
    CHECK(format_family(parse_family(" GP( 5 , 2 ) ")) == "GP(5,2)");
  }

  TEST_CASE("mixed star slots format with brackets everywhere") {
    CHECK(format_family(parse_family("Y(n;[1,2],1,3)")) == "Y(n;[1,2],[1],[3])");
  }
}

namespace {

std::vector<int> random_jumps(std::mt19937_64& rng, int min_count, int max_count) {
  std::uniform_int_distribution<int> count(min_count, max_count);
  std::uniform_int_distribution<int> jump(1, 12);
  std::set<int> vals;
  const int want = count(rng);
  while (static_cast<int>(vals.size()) < want) vals.insert(jump(rng));
  return {vals.begin(), vals.end()};
}

FamilyDescriptor random_descriptor(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind_pick(0, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> n_pick(1, 1'000'000L);
  FamilyDescriptor d;
  bool has_n_slot = true;
  switch (kind_pick(rng)) {
    case 0:
      d.kind = FamilyKind::C;
      d.jump_lists = {random_jumps(rng, 1, 4)};
      break;
    case 1: {
      d.kind = FamilyKind::I;
      std::uniform_int_distribution<int> k(1, 9), l(2, 9);
      d.jump_lists = {{k(rng)}, {l(rng)}};
      break;
    }
    case 2: {
      d.kind = FamilyKind::GP;
      std::uniform_int_distribution<int> k(1, 9);
      d.jump_lists = {{k(rng)}, {1}};
      break;
    }
    case 3: {
      d.kind = FamilyKind::SW;
      std::uniform_int_distribution<int> fibers(1, 4);
      const int m = fibers(rng);
      for (int i = 0; i < m; ++i) d.jump_lists.push_back(random_jumps(rng, 0, 3));
      break;
    }
    case 4:
      d.kind = FamilyKind::Y;
      for (int i = 0; i < 3; ++i) d.jump_lists.push_back(random_jumps(rng, 0, 3));
      break;
    case 5:
      d.kind = FamilyKind::H;
      for (int i = 0; i < 4; ++i) d.jump_lists.push_back(random_jumps(rng, 0, 3));
      break;
    case 6: {
      d.kind = FamilyKind::T;
      std::uniform_int_distribution<int> m(3, 9);
      d.torus_order = m(rng);
      break;
    }
    case 7: {
      d.kind = FamilyKind::X;
      std::uniform_int_distribution<int> shape(0, 2);
      const int s = shape(rng);
      d.product_base = s == 0   ? ProductBase::Complete
                       : s == 1 ? ProductBase::Path
                                : ProductBase::Cycle;
      std::uniform_int_distribution<int> order(d.product_base == ProductBase::Cycle ? 3 : 1, 8);
      d.product_base_order = order(rng);
      d.jump_lists = {random_jumps(rng, 0, 3)};
      has_n_slot = false;
      break;
    }
    default: {
      d.kind = FamilyKind::Foliation;
      std::uniform_int_distribution<int> fibers(1, 4);
      const int m = fibers(rng);
      for (int i = 0; i < m; ++i) d.jump_lists.push_back(random_jumps(rng, 0, 3));
      std::uniform_int_distribution<int> mult(1, 3);
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          if (coin(rng)) d.base_edges.emplace_back(i, j, mult(rng));
      has_n_slot = false;
      break;
    }
  }
  if (has_n_slot && coin(rng)) d.bound_n = n_pick(rng);
  return d;
}

}  // namespace

TEST_SUITE("format round trip") {
  TEST_CASE("500 random descriptors survive format and reparse") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 500; ++trial) {
      const FamilyDescriptor d = random_descriptor(rng);
      const std::string text = format_family(d);
      CAPTURE(text);
      const FamilyDescriptor back = parse_family(text);
      CHECK(back == d);
      CHECK(format_family(back) == text);
    }
  }
}
