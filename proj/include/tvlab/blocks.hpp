#pragma once

// Block systems, primitivity, orbital graphs and the fully-imprimitive test.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "tvlab/group.hpp"
#include "tvlab/partition.hpp"

namespace tvlab {

namespace detail {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};
}  // namespace detail

// Finest G-invariant partition with alpha and beta in one block
// (the classical minimal-block closure).
inline SetPartition minimal_block_system(const PermGroup &g, Point alpha, Point beta) {
  unsigned n = g.degree();
  detail::UnionFind uf(n);
  std::vector<std::pair<Point, Point>> queue{{alpha, beta}};
  uf.unite(alpha, beta);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const auto &p : g.generators()) {
      Point x = p[a], y = p[b];
      if (uf.unite(x, y)) queue.emplace_back(x, y);
    }
  }
  std::vector<PointSet> classes(n);
  for (Point x = 0; x < n; ++x) classes[uf.find(x)].push_back(x);
  std::vector<PointSet> blocks;
  for (auto &c : classes)
    if (!c.empty()) blocks.push_back(std::move(c));
  std::sort(blocks.begin(), blocks.end(),
            [](const PointSet &a, const PointSet &b) { return a[0] < b[0]; });
  return SetPartition(n, std::move(blocks));
}

// All distinct minimal block systems with a nontrivial block containing point 0.
// Requires transitivity.
inline std::vector<SetPartition> block_systems(const PermGroup &g) {
  if (!g.is_transitive()) throw std::invalid_argument("block systems require a transitive group");
  std::vector<SetPartition> out;
  unsigned n = g.degree();
  for (Point beta = 1; beta < n; ++beta) {
    SetPartition p = minimal_block_system(g, 0, beta);
    if (p.blocks.size() == 1 || p.blocks.size() == n) continue;  // trivial
    bool dup = false;
    for (const auto &q : out)
      if (q.blocks == p.blocks) { dup = true; break; }
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

inline bool is_primitive(const PermGroup &g) {
  if (!g.is_transitive()) throw std::invalid_argument("primitivity requires a transitive group");
  if (g.degree() <= 2) return true;
  unsigned n = g.degree();
  for (Point beta = 1; beta < n; ++beta) {
    SetPartition p = minimal_block_system(g, 0, beta);
    if (p.blocks.size() != 1 && p.blocks.size() != n) return false;
  }
  return true;
}

// Whether two points lie in a common proper block of imprimitivity.
inline bool pair_in_proper_block(const PermGroup &g, Point a, Point b) {
  SetPartition p = minimal_block_system(g, a, b);
  return p.blocks.size() > 1;
}

struct OrbitalGraph {
  unsigned degree = 0;
  std::vector<std::pair<Point, Point>> edges;         // a < b
  std::vector<std::vector<Point>> adjacency;

  bool connected() const {
    if (degree == 0) return true;
    std::vector<bool> seen(degree, false);
    std::vector<Point> stack{0};
    seen[0] = true;
    size_t cnt = 1;
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      for (Point y : adjacency[x])
        if (!seen[y]) { seen[y] = true; ++cnt; stack.push_back(y); }
    }
    return cnt == degree;
  }
};

// One undirected graph per orbit of G on unordered pairs.
inline std::vector<OrbitalGraph> orbital_graphs(const PermGroup &g) {
  unsigned n = g.degree();
  auto idx = [n](Point a, Point b) { return size_t(a) * n + b; };
  std::vector<int> orbit_id(size_t(n) * n, -1);
  std::vector<OrbitalGraph> out;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) {
      if (orbit_id[idx(a, b)] >= 0) continue;
      int id = static_cast<int>(out.size());
      OrbitalGraph graph;
      graph.degree = n;
      graph.adjacency.assign(n, {});
      std::vector<std::pair<Point, Point>> queue{{a, b}};
      orbit_id[idx(a, b)] = orbit_id[idx(b, a)] = id;
      while (!queue.empty()) {
        auto [x, y] = queue.back();
        queue.pop_back();
        Point lo = std::min(x, y), hi = std::max(x, y);
        graph.edges.emplace_back(lo, hi);
        graph.adjacency[lo].push_back(hi);
        graph.adjacency[hi].push_back(lo);
        for (const auto &p : g.generators()) {
          Point u = p[x], v = p[y];
          if (orbit_id[idx(u, v)] < 0) {
            orbit_id[idx(u, v)] = orbit_id[idx(v, u)] = id;
            queue.emplace_back(u, v);
          }
        }
      }
      out.push_back(std::move(graph));
    }
  return out;
}

// A transitive group is fully imprimitive iff every orbital graph is
// disconnected (equivalently, every 2-set lies in a proper block).
inline bool is_fully_imprimitive(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("fully-imprimitive test requires a transitive group");
  for (const auto &graph : orbital_graphs(g))
    if (graph.connected()) return false;
  return true;
}

}  // namespace tvlab
