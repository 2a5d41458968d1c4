#pragma once

// Set partitions (possibly partial: support a proper subset of the domain)
// and the section test.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tvlab/perm.hpp"

namespace tvlab {

// A set of points, kept sorted.
using PointSet = std::vector<Point>;

inline PointSet sorted_set(PointSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline PointSet apply_set(const PointSet &s, const Permutation &g) {
  PointSet out;
  out.reserve(s.size());
  for (Point x : s) out.push_back(g[x]);
  std::sort(out.begin(), out.end());
  return out;
}

struct SetPartition {
  unsigned degree = 0;
  std::vector<PointSet> blocks;

  SetPartition() = default;
  SetPartition(unsigned n, std::vector<PointSet> b) : degree(n), blocks(std::move(b)) {
    size_t total = 0;
    std::vector<bool> seen(n, false);
    for (auto &blk : blocks) {
      if (blk.empty()) throw std::invalid_argument("empty block in partition");
      std::sort(blk.begin(), blk.end());
      for (Point x : blk) {
        if (x >= n || seen[x]) throw std::invalid_argument("blocks overlap or point out of range");
        seen[x] = true;
      }
      total += blk.size();
    }
    (void)total;
  }

  size_t support_size() const {
    size_t s = 0;
    for (const auto &b : blocks) s += b.size();
    return s;
  }
  bool is_full() const { return support_size() == degree; }

  SetPartition translated(const Permutation &g) const {
    std::vector<PointSet> out;
    out.reserve(blocks.size());
    for (const auto &b : blocks) out.push_back(apply_set(b, g));
    return SetPartition(degree, std::move(out));
  }
};

// True iff |S| equals the number of blocks and S meets every block exactly once.
inline bool is_section(const PointSet &s, const SetPartition &p) {
  if (s.size() != p.blocks.size()) return false;
  for (const auto &b : p.blocks) {
    int hits = 0;
    for (Point x : s)
      if (std::binary_search(b.begin(), b.end(), x) && ++hits > 1) return false;
    if (hits != 1) return false;
  }
  return true;
}

// Kernel of an image list (fibers, ordered by smallest element).
inline SetPartition kernel_of_images(unsigned n, const std::vector<Point> &images) {
  std::vector<PointSet> fibers(n);
  for (Point x = 0; x < n; ++x) fibers[images[x]].push_back(x);
  std::vector<PointSet> blocks;
  for (auto &f : fibers)
    if (!f.empty()) blocks.push_back(std::move(f));
  std::sort(blocks.begin(), blocks.end(),
            [](const PointSet &a, const PointSet &b) { return a[0] < b[0]; });
  return SetPartition(n, std::move(blocks));
}

}  // namespace tvlab
