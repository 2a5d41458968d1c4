#pragma once

// Generator-presented permutation groups with a deterministic Schreier-Sims
// stabilizer chain: exact order, membership by sifting, orbit machinery and
// uniform random elements.
//
// The chain is reproducible: the base point at each level is the smallest
// point moved by that level's generators, and Schreier generators are
// deduplicated before recursing.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "tvlab/bigint.hpp"
#include "tvlab/perm.hpp"

namespace tvlab {

class StabilizerChain {
public:
  struct Level {
    Point base_point = 0;
    // transversal[p] = index into reps_ of a word u with (base_point)u = p,
    // or -1 if p is outside the fundamental orbit
    std::vector<int> transversal;
    std::vector<Permutation> reps;
    std::vector<Point> orbit;  // in discovery (BFS) order
    std::vector<Permutation> strong_gens;
  };

  explicit StabilizerChain(const std::vector<Permutation> &generators, unsigned degree) {
    std::vector<Permutation> gens;
    for (const auto &g : generators)
      if (!g.is_identity()) gens.push_back(g);
    while (!gens.empty()) {
      Point b = degree;
      for (const auto &g : gens) b = std::min(b, g.smallest_moved_point());
      Level lvl;
      lvl.base_point = b;
      lvl.strong_gens = gens;
      lvl.transversal.assign(degree, -1);
      lvl.orbit.push_back(b);
      lvl.reps.push_back(Permutation(degree));
      lvl.transversal[b] = 0;
      for (size_t i = 0; i < lvl.orbit.size(); ++i) {
        Point x = lvl.orbit[i];
        for (const auto &g : gens) {
          Point y = g[x];
          if (lvl.transversal[y] < 0) {
            lvl.transversal[y] = static_cast<int>(lvl.reps.size());
            lvl.reps.push_back(lvl.reps[lvl.transversal[x]] * g);
            lvl.orbit.push_back(y);
          }
        }
      }
      // Schreier generators for the stabilizer of b, deduplicated
      std::set<Permutation> next;
      for (Point x : lvl.orbit) {
        const Permutation &ux = lvl.reps[lvl.transversal[x]];
        for (const auto &g : gens) {
          Permutation s = (ux * g) * lvl.reps[lvl.transversal[g[x]]].inverse();
          if (!s.is_identity()) next.insert(s);
        }
      }
      levels_.push_back(std::move(lvl));
      gens.assign(next.begin(), next.end());
    }
  }

  const std::vector<Level> &levels() const { return levels_; }

  BigUint order() const {
    BigUint o(1);
    for (const auto &l : levels_) o *= l.orbit.size();
    return o;
  }

  bool contains(Permutation p) const {
    for (const auto &l : levels_) {
      int t = l.transversal[p[l.base_point]];
      if (t < 0) return false;
      p = p * l.reps[t].inverse();
    }
    return p.is_identity();
  }

  Permutation random_element(std::mt19937_64 &rng, unsigned degree) const {
    Permutation p(degree);
    for (const auto &l : levels_) {
      std::uniform_int_distribution<size_t> d(0, l.reps.size() - 1);
      p = p * l.reps[d(rng)];
    }
    return p;
  }

private:
  std::vector<Level> levels_;
};

class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Permutation> generators)
      : degree_(degree), gens_(std::move(generators)) {
    for (const auto &g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (gens_.empty()) gens_.push_back(Permutation(degree_));
  }

  unsigned degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }

  const StabilizerChain &chain() const {
    std::call_once(box_->once, [this] {
      box_->chain = std::make_unique<StabilizerChain>(gens_, degree_);
    });
    return *box_->chain;
  }

  BigUint order() const { return chain().order(); }

  // Order as uint64; throws if it does not fit.
  uint64_t order_u64() const {
    BigUint o = order();
    if (!o.fits_u64()) throw std::runtime_error("group order exceeds 64 bits");
    return o.as_u64();
  }

  bool contains(const Permutation &p) const {
    if (p.degree() != degree_) return false;
    return chain().contains(p);
  }

  Permutation random_element(std::mt19937_64 &rng) const {
    return chain().random_element(rng, degree_);
  }

  std::vector<std::vector<Point>> orbits() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree_, false);
    for (Point s = 0; s < degree_; ++s) {
      if (seen[s]) continue;
      std::vector<Point> orb{s};
      seen[s] = true;
      for (size_t i = 0; i < orb.size(); ++i)
        for (const auto &g : gens_) {
          Point y = g[orb[i]];
          if (!seen[y]) { seen[y] = true; orb.push_back(y); }
        }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  std::vector<Point> orbit_of(Point s) const {
    std::vector<Point> orb{s};
    std::vector<bool> seen(degree_, false);
    seen[s] = true;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const auto &g : gens_) {
        Point y = g[orb[i]];
        if (!seen[y]) { seen[y] = true; orb.push_back(y); }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  bool is_transitive() const { return orbit_of(0).size() == degree_; }

  // Full element enumeration; guarded so it is only used at oracle scale.
  std::vector<Permutation> elements(size_t cap = 200000) const {
    std::unordered_set<Permutation, PermHash> seen;
    std::vector<Permutation> queue{Permutation(degree_)};
    seen.insert(queue[0]);
    for (size_t i = 0; i < queue.size(); ++i) {
      for (const auto &g : gens_) {
        Permutation h = queue[i] * g;
        if (seen.insert(h).second) {
          if (seen.size() > cap) throw std::runtime_error("element enumeration cap exceeded");
          queue.push_back(std::move(h));
        }
      }
    }
    return queue;
  }

  // Generators of the stabilizer of a point (Schreier generators, deduplicated).
  std::vector<Permutation> point_stabilizer_gens(Point p) const {
    std::vector<int> trans(degree_, -1);
    std::vector<Permutation> reps;
    std::vector<Point> orb{p};
    trans[p] = 0;
    reps.push_back(Permutation(degree_));
    for (size_t i = 0; i < orb.size(); ++i) {
      Point x = orb[i];
      for (const auto &g : gens_) {
        Point y = g[x];
        if (trans[y] < 0) {
          trans[y] = static_cast<int>(reps.size());
          reps.push_back(reps[trans[x]] * g);
          orb.push_back(y);
        }
      }
    }
    std::set<Permutation> out;
    for (Point x : orb)
      for (const auto &g : gens_) {
        Permutation s = (reps[trans[x]] * g) * reps[trans[g[x]]].inverse();
        if (!s.is_identity()) out.insert(s);
      }
    return {out.begin(), out.end()};
  }

private:
  // The chain cache sits behind a shared_ptr so groups stay copyable; copies
  // share the (immutable once built) chain.
  struct ChainBox {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  unsigned degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<ChainBox> box_ = std::make_shared<ChainBox>();
};

}  // namespace tvlab
