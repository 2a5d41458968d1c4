#pragma once

// Orbits of a group on k-subsets.
//
// The index enumerates all C(n,k) subsets in colexicographic order and labels
// each with its orbit id, giving O(k) membership via the colex rank. A
// Schreier forest over sets supports transporter recovery (an explicit group
// element mapping one set to another inside an orbit). Representatives are
// the lexicographically minimal orbit members.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tvlab/group.hpp"
#include "tvlab/partition.hpp"

namespace tvlab {

class Binomials {
public:
  Binomials(unsigned n, unsigned k) : n_(n), k_(k), table_((n + 1) * (k + 1), 0) {
    for (unsigned i = 0; i <= n; ++i) {
      at(i, 0) = 1;
      for (unsigned j = 1; j <= k && j <= i; ++j) {
        uint64_t v = get(i - 1, j - 1), w = get(i - 1, j);
        at(i, j) = (v > std::numeric_limits<uint64_t>::max() - w) ? sat() : v + w;
      }
    }
  }
  uint64_t operator()(unsigned i, unsigned j) const {
    if (j > k_ || i > n_) throw std::out_of_range("binomial table");
    return get(i, j);
  }
  static constexpr uint64_t sat() { return std::numeric_limits<uint64_t>::max(); }

private:
  uint64_t get(unsigned i, unsigned j) const { return table_[i * (k_ + 1) + j]; }
  uint64_t &at(unsigned i, unsigned j) { return table_[i * (k_ + 1) + j]; }
  unsigned n_, k_;
  std::vector<uint64_t> table_;
};

// rank(s) = sum_i C(s[i], i+1) for s sorted ascending
inline uint64_t colex_rank(const PointSet &s, const Binomials &b) {
  uint64_t r = 0;
  for (size_t i = 0; i < s.size(); ++i) r += b(s[i], static_cast<unsigned>(i) + 1);
  return r;
}

inline PointSet colex_unrank(uint64_t r, unsigned n, unsigned k, const Binomials &b) {
  PointSet s(k);
  unsigned hi = n;
  for (unsigned i = k; i-- > 0;) {
    unsigned c = hi;
    while (c > i && b(c - 1, i + 1) > r) --c;
    // now c-1 is the largest value with C(c-1, i+1) <= r
    s[i] = c - 1;
    r -= b(c - 1, i + 1);
    hi = c - 1;
  }
  return s;
}

class KSetOrbitIndex {
public:
  static constexpr uint64_t kDefaultCap = 10'000'000;

  KSetOrbitIndex(const PermGroup &g, unsigned k, uint64_t cap = kDefaultCap)
      : group_(&g), n_(g.degree()), k_(k), binom_(g.degree(), k) {
    if (k_ == 0 || k_ > n_) throw std::invalid_argument("k out of range");
    total_ = binom_(n_, k_);
    if (total_ > cap)
      throw std::runtime_error("k-set space exceeds enumeration cap (" +
                               std::to_string(total_) + " sets)");
    const auto &gens = g.generators();
    orbit_id_.assign(total_, -1);
    pred_.assign(total_, 0);
    pred_gen_.assign(total_, -1);

    std::vector<uint64_t> queue;
    for (uint64_t root = 0; root < total_; ++root) {
      if (orbit_id_[root] >= 0) continue;
      int32_t id = static_cast<int32_t>(reps_.size());
      PointSet root_set = colex_unrank(root, n_, k_, binom_);
      PointSet lexmin = root_set;
      uint64_t size = 1;
      orbit_id_[root] = id;
      queue.assign(1, root);
      while (!queue.empty()) {
        uint64_t cur = queue.back();
        queue.pop_back();
        PointSet cur_set = colex_unrank(cur, n_, k_, binom_);
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          PointSet img = apply_set(cur_set, gens[gi]);
          uint64_t r = colex_rank(img, binom_);
          if (orbit_id_[r] < 0) {
            orbit_id_[r] = id;
            pred_[r] = cur;
            pred_gen_[r] = static_cast<int16_t>(gi);
            if (img < lexmin) lexmin = img;
            ++size;
            queue.push_back(r);
          }
        }
      }
      reps_.push_back(std::move(lexmin));
      sizes_.push_back(size);
      roots_.push_back(root);
    }
  }

  unsigned degree() const { return n_; }
  unsigned k() const { return k_; }
  uint64_t total_sets() const { return total_; }
  size_t orbit_count() const { return reps_.size(); }
  const std::vector<PointSet> &representatives() const { return reps_; }
  const std::vector<uint64_t> &orbit_sizes() const { return sizes_; }
  const Binomials &binomials() const { return binom_; }

  int32_t orbit_of_rank(uint64_t r) const { return orbit_id_[r]; }
  int32_t orbit_of(const PointSet &s) const { return orbit_id_[colex_rank(s, binom_)]; }

  // Group element mapping `from` to `to`; both must lie in the same orbit.
  Permutation transporter(const PointSet &from, const PointSet &to) const {
    uint64_t ra = colex_rank(from, binom_), rb = colex_rank(to, binom_);
    if (orbit_id_[ra] != orbit_id_[rb])
      throw std::invalid_argument("transporter: sets in different orbits");
    return word_from_root(ra).inverse() * word_from_root(rb);
  }

private:
  Permutation word_from_root(uint64_t r) const {
    std::vector<int16_t> path;
    uint64_t root = roots_[orbit_id_[r]];
    while (r != root) {
      path.push_back(pred_gen_[r]);
      r = pred_[r];
    }
    Permutation g(n_);
    for (size_t i = path.size(); i-- > 0;) g = g * group_->generators()[path[i]];
    return g;
  }

  const PermGroup *group_;
  unsigned n_, k_;
  Binomials binom_;
  uint64_t total_ = 0;
  std::vector<int32_t> orbit_id_;
  std::vector<uint64_t> pred_;
  std::vector<int16_t> pred_gen_;
  std::vector<PointSet> reps_;
  std::vector<uint64_t> sizes_;
  std::vector<uint64_t> roots_;
};

}  // namespace tvlab
