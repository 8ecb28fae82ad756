// families.hpp — named family descriptors and their foliation constructions.
#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "circforest/graph.hpp"

namespace circforest {

enum class FamilyKind { C, I, GP, SW, Y, H, T, X, Foliation };

// Shape of the base graph used by the Cartesian-product kind X.
enum class ProductBase { Complete, Path, Cycle };

// Parsed family template; n stays symbolic unless bound_n is set.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::C;
  // Jump lists, one per explicit fiber slot of the kind:
  //   C: 1 list; I/GP: 2 singleton lists (GP's second is [1]); SW: >= 1 list;
  //   Y: 3 lists (hub fiber implicit); H: 4 lists (two hub fibers implicit);
  //   X: 1 list applied to every base vertex; Foliation: one list per vertex.
  std::vector<std::vector<int>> jump_lists;
  int torus_order = 0;  // T: base cycle length m >= 3
  ProductBase product_base = ProductBase::Complete;
  int product_base_order = 0;  // X: base graph order
  // Foliation kind only: (i, j, multiplicity) with 1 <= i < j <= #fibers.
  std::vector<std::tuple<int, int, int>> base_edges;
  std::optional<long> bound_n;  // set when the text used a concrete first argument

  bool operator==(const FamilyDescriptor& o) const {
    return kind == o.kind && jump_lists == o.jump_lists && torus_order == o.torus_order &&
           product_base == o.product_base && product_base_order == o.product_base_order &&
           base_edges == o.base_edges && bound_n == o.bound_n;
  }
};

// Assembles the foliation the descriptor names (appending the implicit
// empty-fiber hub vertices of Y and H). Throws UnknownFamily or BadArity on
// malformed descriptors, plus anything make_foliation raises.
FoliationSpec build_family(const FamilyDescriptor& desc, bool allow_disconnected = false);

}  // namespace circforest
