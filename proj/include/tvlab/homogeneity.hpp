#pragma once

// k-transitivity and k-homogeneity by orbit counting with early exit.

#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "tvlab/group.hpp"
#include "tvlab/partition.hpp"

namespace tvlab {

// Orbit of one k-tuple of distinct points has size n(n-1)...(n-k+1) iff G is
// k-transitive. Tuples are packed into 64-bit keys.
inline bool is_k_transitive(const PermGroup &g, unsigned k) {
  unsigned n = g.degree();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  unsigned bits = 1;
  while ((1u << bits) < n) ++bits;
  if (bits * k > 63) throw std::invalid_argument("k-transitivity test: tuple too wide");
  uint64_t target = 1;
  for (unsigned i = 0; i < k; ++i) target *= (n - i);

  std::vector<Point> t(k);
  for (unsigned i = 0; i < k; ++i) t[i] = i;
  auto pack = [&](const std::vector<Point> &v) {
    uint64_t key = 0;
    for (Point x : v) key = (key << bits) | x;
    return key;
  };
  // dense bitmap when the key space is small, hash set otherwise
  bool dense = bits * k <= 27;
  std::vector<bool> bitmap;
  if (dense) bitmap.assign(uint64_t(1) << (bits * k), false);
  std::unordered_set<uint64_t> seen;
  uint64_t count = 1;
  auto visit = [&](uint64_t key) {
    if (dense) {
      if (bitmap[key]) return false;
      bitmap[key] = true;
      return true;
    }
    return seen.insert(key).second;
  };
  visit(pack(t));
  std::vector<std::vector<Point>> queue{t};
  while (!queue.empty()) {
    std::vector<Point> cur = std::move(queue.back());
    queue.pop_back();
    for (const auto &p : g.generators()) {
      std::vector<Point> img(k);
      for (unsigned i = 0; i < k; ++i) img[i] = p[cur[i]];
      if (visit(pack(img))) {
        if (++count == target) return true;
        queue.push_back(std::move(img));
      }
    }
  }
  return count == target;
}

// Single orbit on k-subsets.
inline bool is_k_homogeneous(const PermGroup &g, unsigned k) {
  unsigned n = g.degree();
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  if (k > n - k) k = n - k;  // orbit counts on k-sets and (n-k)-sets agree
  if (k == 0) return true;
  uint64_t target = 1, div = 1;
  for (unsigned i = 0; i < k; ++i) { target *= (n - i); div *= (i + 1); }
  target /= div;

  PointSet s(k);
  for (unsigned i = 0; i < k; ++i) s[i] = i;
  std::unordered_set<uint64_t> seen;
  auto pack = [&](const PointSet &v) {
    uint64_t key = 0;
    for (Point x : v) key |= uint64_t(1) << x;  // degrees beyond 64 handled below
    return key;
  };
  if (n <= 64) {
    std::vector<PointSet> queue{s};
    seen.insert(pack(s));
    while (!queue.empty()) {
      PointSet cur = std::move(queue.back());
      queue.pop_back();
      for (const auto &p : g.generators()) {
        PointSet img = apply_set(cur, p);
        if (seen.insert(pack(img)).second) {
          if (seen.size() == target) return true;
          queue.push_back(std::move(img));
        }
      }
    }
    return seen.size() == target;
  }
  // wide degrees: hash sorted vectors
  struct VecHash {
    size_t operator()(const PointSet &v) const {
      size_t h = 0xcbf29ce484222325ULL;
      for (Point x : v) h = (h ^ x) * 0x100000001b3ULL;
      return h;
    }
  };
  std::unordered_set<PointSet, VecHash> wide;
  std::vector<PointSet> queue{s};
  wide.insert(s);
  while (!queue.empty()) {
    PointSet cur = std::move(queue.back());
    queue.pop_back();
    for (const auto &p : g.generators()) {
      PointSet img = apply_set(cur, p);
      if (wide.insert(img).second) {
        if (wide.size() == target) return true;
        queue.push_back(std::move(img));
      }
    }
  }
  return wide.size() == target;
}

}  // namespace tvlab
