#pragma once

// Permutations of {0..n-1} with the right-action convention: points are
// written on the left, so (x)(p*q) = ((x)p)q.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvlab {

using Point = unsigned;

class Permutation {
public:
  Permutation() = default;

  explicit Permutation(unsigned degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
  }

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x])
        throw std::invalid_argument("image list is not a bijection");
      seen[x] = true;
    }
  }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  Point operator[](Point x) const { return images_[x]; }

  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const {
    for (Point x = 0; x < degree(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  // (x)(p*q) = ((x)p)q
  friend Permutation operator*(const Permutation &p, const Permutation &q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("degree mismatch in composition");
    Permutation r;
    r.images_.resize(p.degree());
    for (Point x = 0; x < p.degree(); ++x) r.images_[x] = q.images_[p.images_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(degree());
    for (Point x = 0; x < degree(); ++x) r.images_[images_[x]] = x;
    return r;
  }

  friend bool operator==(const Permutation &a, const Permutation &b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation &a, const Permutation &b) {
    return a.images_ < b.images_;
  }

  Point smallest_moved_point() const {
    for (Point x = 0; x < degree(); ++x)
      if (images_[x] != x) return x;
    return degree();  // identity
  }

  // Builds a permutation of the given degree from 0-based cycles.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<Point>> &cycles) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), 0u);
    for (const auto &c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        Point from = c[i], to = c[(i + 1) % c.size()];
        if (from >= degree || to >= degree)
          throw std::invalid_argument("cycle point out of range");
        im[from] = to;
      }
    }
    return Permutation(std::move(im));
  }

  // 1-based disjoint cycle string, e.g. "(1 2 3)(4 5)"; "()" for identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (Point x = 0; x < degree(); ++x) {
      if (seen[x] || images_[x] == x) continue;
      out += '(';
      Point y = x;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(y + 1);
        seen[y] = true;
        y = images_[y];
        first = false;
      } while (y != x);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ULL;
    for (Point x : images_) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }

private:
  std::vector<Point> images_;
};

struct PermHash {
  size_t operator()(const Permutation &p) const { return p.hash(); }
};

}  // namespace tvlab
