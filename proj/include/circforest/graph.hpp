// graph.hpp — base graphs, fiber specifications, and expanded layered graphs.
#pragma once

#include <string>
#include <vector>

#include "circforest/matrix.hpp"

namespace circforest {

// Undirected multigraph on vertices 0..m-1, no loops, symmetric multiplicities.
class BaseGraph {
 public:
  explicit BaseGraph(int vertex_count);

  static BaseGraph path(int m);
  static BaseGraph cycle(int m);
  static BaseGraph complete(int m);
  static BaseGraph from_multiplicities(const std::vector<std::vector<int>>& a);

  // accumulates multiplicity; i == j throws LoopInBase
  void add_edge(int i, int j, int multiplicity = 1);

  int vertex_count() const { return m_; }
  int multiplicity(int i, int j) const { return a_[idx(i, j)]; }
  int degree(int i) const;  // sum of incident multiplicities
  long edge_count() const;  // sum of multiplicities over i < j
  bool connected() const;   // vertex_count 0 counts as connected

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * m_ + j; }
  int m_;
  std::vector<int> a_;
};

// Jump set of one circulant fiber; empty list = fiber of isolated layers.
struct FiberSpec {
  std::vector<int> jumps;  // strictly increasing, all >= 1

  bool empty() const { return jumps.empty(); }
  int max_jump() const { return jumps.empty() ? 0 : jumps.back(); }
  int jump_count() const { return static_cast<int>(jumps.size()); }
  int odd_jump_count() const;
  bool operator==(const FiberSpec&) const = default;
};

// A validated base graph with one fiber per base vertex.
class FoliationSpec {
 public:
  FoliationSpec(BaseGraph base, std::vector<FiberSpec> fibers);

  const BaseGraph& base() const { return base_; }
  const std::vector<FiberSpec>& fibers() const { return fibers_; }
  int max_jump() const;
  int shift() const;              // sum over fibers of the largest jump
  int empty_fiber_count() const;  // m' in the leading-coefficient identity

 private:
  BaseGraph base_;
  std::vector<FiberSpec> fibers_;
};

// Validates and assembles: throws FiberCountMismatch, NonIncreasingJumps,
// DisconnectedBase (unless allow_disconnected), LoopInBase (via BaseGraph).
FoliationSpec make_foliation(BaseGraph base, std::vector<FiberSpec> fibers,
                             bool allow_disconnected = false);

// Concrete graph on layers x base-vertices; vertex (i, k) -> i * layers + k.
struct ExpandedGraph {
  struct Edge {
    int u, v;          // u < v
    int multiplicity;  // >= 1
  };
  long layers = 0;     // n
  int base_order = 0;  // m
  std::vector<Edge> edges;  // sorted by (u, v)

  long vertex_count() const { return layers * base_order; }
  long edge_count() const;  // with multiplicity
  int degree(long v) const;
  std::string vertex_label(long v) const;  // "layer,base" both 1-based
};

// Instantiates n layers; requires n > 2 * max_jump so circulant neighbours stay
// distinct (JumpTooLargeForN otherwise).
ExpandedGraph expand(const FoliationSpec& spec, long n);

// Combinatorial Laplacian (degree on the diagonal, -multiplicity off it).
IntegerMatrix laplacian(const ExpandedGraph& g);

// One line per edge: "layer,base<TAB>layer,base<TAB>multiplicity", 1-based.
std::string to_edge_list(const ExpandedGraph& g);

// DOT document for visualization tools; one node per (layer, base) pair,
// parallel edges repeated per unit of multiplicity.
std::string to_graph_text(const ExpandedGraph& g);

}  // namespace circforest
