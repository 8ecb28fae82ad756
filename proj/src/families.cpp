#include "circforest/families.hpp"

#include <string>

#include "circforest/errors.hpp"

namespace circforest {
namespace {

std::vector<FiberSpec> to_fibers(const std::vector<std::vector<int>>& lists) {
  std::vector<FiberSpec> fibers;
  fibers.reserve(lists.size());
  for (const auto& l : lists) fibers.push_back(FiberSpec{l});
  return fibers;
}

void require_lists(const FamilyDescriptor& d, std::size_t count, const char* kind) {
  if (d.jump_lists.size() != count)
    throw BadArity(std::string(kind) + " takes exactly " + std::to_string(count) +
                   " jump list(s), got " + std::to_string(d.jump_lists.size()));
}

}  // namespace

FoliationSpec build_family(const FamilyDescriptor& d, bool allow_disconnected) {
  switch (d.kind) {
    case FamilyKind::C: {
      require_lists(d, 1, "C");
      return make_foliation(BaseGraph(1), to_fibers(d.jump_lists), allow_disconnected);
    }
    case FamilyKind::I:
    case FamilyKind::GP: {
      require_lists(d, 2, d.kind == FamilyKind::GP ? "GP" : "I");
      if (d.jump_lists[0].size() != 1 || d.jump_lists[1].size() != 1)
        throw BadArity("I/GP fibers are single jumps");
      return make_foliation(BaseGraph::path(2), to_fibers(d.jump_lists), allow_disconnected);
    }
    case FamilyKind::SW: {
      if (d.jump_lists.empty()) throw BadArity("SW needs at least one fiber");
      return make_foliation(BaseGraph::path(static_cast<int>(d.jump_lists.size())),
                            to_fibers(d.jump_lists), allow_disconnected);
    }
    case FamilyKind::Y: {
      require_lists(d, 3, "Y");
      BaseGraph star(4);
      star.add_edge(0, 3);
      star.add_edge(1, 3);
      star.add_edge(2, 3);
      auto fibers = to_fibers(d.jump_lists);
      fibers.push_back(FiberSpec{});  // hub
      return make_foliation(std::move(star), std::move(fibers), allow_disconnected);
    }
    case FamilyKind::H: {
      require_lists(d, 4, "H");
      BaseGraph h(6);
      h.add_edge(0, 4);
      h.add_edge(2, 4);
      h.add_edge(1, 5);
      h.add_edge(3, 5);
      h.add_edge(4, 5);
      auto fibers = to_fibers(d.jump_lists);
      fibers.push_back(FiberSpec{});  // left hub
      fibers.push_back(FiberSpec{});  // right hub
      return make_foliation(std::move(h), std::move(fibers), allow_disconnected);
    }
    case FamilyKind::T: {
      if (d.torus_order < 3) throw BadArity("T base cycle needs m >= 3");
      std::vector<std::vector<int>> lists(static_cast<std::size_t>(d.torus_order), {1});
      return make_foliation(BaseGraph::cycle(d.torus_order), to_fibers(lists),
                            allow_disconnected);
    }
    case FamilyKind::X: {
      require_lists(d, 1, "X");
      const int m = d.product_base_order;
      BaseGraph base(0);
      switch (d.product_base) {
        case ProductBase::Complete:
          if (m < 1) throw BadArity("X base K_m needs m >= 1");
          base = BaseGraph::complete(m);
          break;
        case ProductBase::Path:
          if (m < 1) throw BadArity("X base P_m needs m >= 1");
          base = BaseGraph::path(m);
          break;
        case ProductBase::Cycle:
          if (m < 3) throw BadArity("X base C_m needs m >= 3");
          base = BaseGraph::cycle(m);
          break;
      }
      std::vector<std::vector<int>> lists(static_cast<std::size_t>(m), d.jump_lists[0]);
      return make_foliation(std::move(base), to_fibers(lists), allow_disconnected);
    }
    case FamilyKind::Foliation: {
      const int m = static_cast<int>(d.jump_lists.size());
      if (m < 1) throw BadArity("FOLIATION needs at least one fiber");
      BaseGraph base(m);
      for (const auto& [i, j, mult] : d.base_edges) {
        if (i < 1 || j < 1 || i > m || j > m || i >= j || mult < 1)
          throw BadArity("FOLIATION edge (" + std::to_string(i) + "," + std::to_string(j) +
                         "):" + std::to_string(mult) + " out of range");
        base.add_edge(i - 1, j - 1, mult);
      }
      return make_foliation(std::move(base), to_fibers(d.jump_lists), allow_disconnected);
    }
  }
  throw UnknownFamily("unrecognized family kind");
}

}  // namespace circforest
