#include "circforest/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <string>

#include "circforest/errors.hpp"

namespace circforest {

BaseGraph::BaseGraph(int vertex_count)
    : m_(vertex_count), a_(static_cast<std::size_t>(vertex_count) * vertex_count, 0) {
  assert(vertex_count >= 0);
}

BaseGraph BaseGraph::path(int m) {
  BaseGraph g(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

BaseGraph BaseGraph::cycle(int m) {
  assert(m >= 3);
  BaseGraph g(m);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

BaseGraph BaseGraph::complete(int m) {
  BaseGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  return g;
}

BaseGraph BaseGraph::from_multiplicities(const std::vector<std::vector<int>>& a) {
  const int m = static_cast<int>(a.size());
  BaseGraph g(m);
  for (int i = 0; i < m; ++i) {
    assert(static_cast<int>(a[i].size()) == m);
    if (a[i][i] != 0) throw LoopInBase("base multiplicity matrix has nonzero diagonal");
    for (int j = i + 1; j < m; ++j) {
      assert(a[i][j] == a[j][i]);
      if (a[i][j] != 0) g.add_edge(i, j, a[i][j]);
    }
  }
  return g;
}

void BaseGraph::add_edge(int i, int j, int multiplicity) {
  assert(i >= 0 && i < m_ && j >= 0 && j < m_ && multiplicity >= 1);
  if (i == j) throw LoopInBase("loop at base vertex " + std::to_string(i + 1));
  a_[idx(i, j)] += multiplicity;
  a_[idx(j, i)] += multiplicity;
}

int BaseGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < m_; ++j) d += a_[idx(i, j)];
  return d;
}

long BaseGraph::edge_count() const {
  long e = 0;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j) e += a_[idx(i, j)];
  return e;
}

bool BaseGraph::connected() const {
  if (m_ == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(m_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < m_; ++u) {
      if (a_[idx(v, u)] != 0 && !seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == m_;
}

int FiberSpec::odd_jump_count() const {
  int t = 0;
  for (int s : jumps) t += s % 2;
  return t;
}

FoliationSpec::FoliationSpec(BaseGraph base, std::vector<FiberSpec> fibers)
    : base_(std::move(base)), fibers_(std::move(fibers)) {}

int FoliationSpec::max_jump() const {
  int s = 0;
  for (const auto& f : fibers_) s = std::max(s, f.max_jump());
  return s;
}

int FoliationSpec::shift() const {
  int s = 0;
  for (const auto& f : fibers_) s += f.max_jump();
  return s;
}

int FoliationSpec::empty_fiber_count() const {
  int c = 0;
  for (const auto& f : fibers_) c += f.empty() ? 1 : 0;
  return c;
}

FoliationSpec make_foliation(BaseGraph base, std::vector<FiberSpec> fibers,
                             bool allow_disconnected) {
  if (static_cast<int>(fibers.size()) != base.vertex_count())
    throw FiberCountMismatch("expected " + std::to_string(base.vertex_count()) +
                             " fibers, got " + std::to_string(fibers.size()));
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const auto& jumps = fibers[i].jumps;
    for (std::size_t t = 0; t < jumps.size(); ++t) {
      if (jumps[t] < 1 || (t > 0 && jumps[t] <= jumps[t - 1]))
        throw NonIncreasingJumps("fiber " + std::to_string(i + 1) +
                                 ": jumps must be strictly increasing and >= 1");
    }
  }
  if (!allow_disconnected && !base.connected())
    throw DisconnectedBase("base graph is not connected");
  return FoliationSpec(std::move(base), std::move(fibers));
}

long ExpandedGraph::edge_count() const {
  long e = 0;
  for (const auto& ed : edges) e += ed.multiplicity;
  return e;
}

int ExpandedGraph::degree(long v) const {
  int d = 0;
  for (const auto& ed : edges) {
    if (ed.u == v) d += ed.multiplicity;
    if (ed.v == v) d += ed.multiplicity;
  }
  return d;
}

std::string ExpandedGraph::vertex_label(long v) const {
  const long k = v % layers;
  const long i = v / layers;
  return std::to_string(k + 1) + "," + std::to_string(i + 1);
}

ExpandedGraph expand(const FoliationSpec& spec, long n) {
  assert(n >= 1);
  if (n <= 2L * spec.max_jump())
    throw JumpTooLargeForN("n = " + std::to_string(n) + " requires n > " +
                           std::to_string(2 * spec.max_jump()));
  const int m = spec.base().vertex_count();
  std::map<std::pair<long, long>, int> acc;
  auto add = [&](long u, long v, int mult) {
    if (u > v) std::swap(u, v);
    acc[{u, v}] += mult;
  };
  const auto vid = [n](int i, long k) { return static_cast<long>(i) * n + k; };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int a = spec.base().multiplicity(i, j);
      if (a == 0) continue;
      for (long k = 0; k < n; ++k) add(vid(i, k), vid(j, k), a);
    }
  for (int i = 0; i < m; ++i)
    for (int s : spec.fibers()[static_cast<std::size_t>(i)].jumps)
      for (long k = 0; k < n; ++k) add(vid(i, k), vid(i, (k + s) % n), 1);

  ExpandedGraph g;
  g.layers = n;
  g.base_order = m;
  g.edges.reserve(acc.size());
  for (const auto& [uv, mult] : acc)
    g.edges.push_back({static_cast<int>(uv.first), static_cast<int>(uv.second), mult});
  return g;
}

IntegerMatrix laplacian(const ExpandedGraph& g) {
  const int order = static_cast<int>(g.vertex_count());
  IntegerMatrix l(order);
  for (const auto& e : g.edges) {
    l.at(e.u, e.v) -= e.multiplicity;
    l.at(e.v, e.u) -= e.multiplicity;
    l.at(e.u, e.u) += e.multiplicity;
    l.at(e.v, e.v) += e.multiplicity;
  }
  return l;
}

std::string to_edge_list(const ExpandedGraph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges)
    os << g.vertex_label(e.u) << '\t' << g.vertex_label(e.v) << '\t' << e.multiplicity << '\n';
  return os.str();
}

std::string to_graph_text(const ExpandedGraph& g) {
  std::ostringstream os;
  os << "graph foliation {\n";
  for (long v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.vertex_label(v) << "\";\n";
  for (const auto& e : g.edges)
    for (int t = 0; t < e.multiplicity; ++t)
      os << "  \"" << g.vertex_label(e.u) << "\" -- \"" << g.vertex_label(e.v) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace circforest
