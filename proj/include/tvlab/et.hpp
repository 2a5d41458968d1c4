#pragma once

// Decision procedures for the k-existential-transversal (k-et), weak k-et and
// k-universal-transversal (k-ut) properties.
//
// The search: a k-set B witnesses k-et iff every full k-partition of the
// domain has some image of B as a section. We look for a counterexample by
// depth-first extension of partial partitions. Seeds are the orbit
// representatives of k-sets outside B's orbit, placed as k singletons (any
// refuting partition contains a section, which can be translated onto such a
// representative, so the seeded tree is exhaustive). Points are added in
// ascending order, blocks tried in index order, and a branch is pruned as
// soon as the partial partition acquires a section in B's orbit: sections
// survive extension, so no descendant can refute. Only sections through the
// newly placed point need checking at each step.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tvlab/bigint.hpp"
#include "tvlab/blocks.hpp"
#include "tvlab/group.hpp"
#include "tvlab/homogeneity.hpp"
#include "tvlab/ksets.hpp"
#include "tvlab/partition.hpp"

namespace tvlab {

enum class Verdict { Yes, No, Unknown };

inline const char *verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

struct EtOptions {
  uint64_t max_nodes = 2'000'000'000ull;
  double timeout_seconds = 0;  // 0 = unlimited
  unsigned threads = 1;
  bool deterministic = false;
  bool force = false;  // allow k > n/2
  uint64_t kset_cap = KSetOrbitIndex::kDefaultCap;

  static unsigned env_threads() {
    if (const char *env = std::getenv("TRANSVERSAL_LAB_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
  }
};

struct SearchBudget {
  std::atomic<uint64_t> nodes{0};
  uint64_t max_nodes;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
  std::atomic<bool> exceeded{false};

  explicit SearchBudget(const EtOptions &opt) : max_nodes(opt.max_nodes) {
    if (opt.timeout_seconds > 0) {
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(opt.timeout_seconds));
      has_deadline = true;
    }
  }

  // Cheap per-node tick; time is polled every 64k nodes.
  bool tick() {
    uint64_t c = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (c > max_nodes) {
      exceeded.store(true, std::memory_order_relaxed);
      return false;
    }
    if (has_deadline && (c & 0xffff) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      exceeded.store(true, std::memory_order_relaxed);
      return false;
    }
    return !exceeded.load(std::memory_order_relaxed);
  }
  bool ok() const { return !exceeded.load(std::memory_order_relaxed); }
};

struct OrderBound {
  bool pass = true;
  // when it fails at k, it fails for every k' with k <= k' <= n/2
  bool fails_upward = false;
  BigUint binom;  // C(n, k-1)
};

// Necessary order bounds: |G| >= C(n,k-1)/k for weak k-et and
// |G| >= 2 C(n,k-1)/(k+1) for k-et. Checked exactly.
inline OrderBound order_bound(unsigned n, unsigned k, const BigUint &order,
                              const std::string &variant) {
  OrderBound r;
  r.binom = BigUint::binomial(n, k - 1);
  BigUint lhs = order;
  BigUint rhs = r.binom;
  if (variant == "weak") {
    lhs *= k;
  } else if (variant == "et") {
    lhs *= (k + 1);
    rhs *= 2;
  } else {
    throw std::invalid_argument("order_bound variant must be 'weak' or 'et'");
  }
  r.pass = rhs <= lhs;
  r.fails_upward = !r.pass;
  return r;
}

struct EtCertificate {
  PointSet witness;
};

struct EtRefutation {
  PointSet candidate;
  SetPartition partition;
};

struct OrbitStatus {
  PointSet rep;
  uint64_t orbit_size = 0;
  Verdict witness = Verdict::Unknown;
};

struct EtReport {
  Verdict decision = Verdict::Unknown;
  unsigned k = 0;
  std::string rule;
  std::string unknown_reason;
  std::vector<EtCertificate> witnesses;
  std::vector<EtRefutation> refutations;
  std::vector<PointSet> weak_candidates;
  std::vector<OrbitStatus> orbit_statuses;  // populated by ut runs
  uint64_t nodes = 0;
};

// ---------------------------------------------------------------------------
// The candidate search engine.
// ---------------------------------------------------------------------------

class EtSearch {
public:
  EtSearch(const PermGroup &g, unsigned k, const KSetOrbitIndex &idx, SearchBudget &budget)
      : g_(g), n_(g.degree()), k_(k), idx_(idx), budget_(budget) {}

  // Searches for a full k-partition none of whose sections lie in orbit
  // `target`, starting from the given seed representative (placed as
  // singletons). first_block (when >= 0) pins the block of the first added
  // point, so callers can split the root fan-out across workers.
  std::optional<SetPartition> find_refutation(int32_t target, const PointSet &seed,
                                              int first_block = -1) {
    target_ = target;
    blocks_.assign(k_, {});
    for (unsigned j = 0; j < k_; ++j) blocks_[j].push_back(seed[j]);
    rest_.clear();
    {
      std::vector<bool> in_seed(n_, false);
      for (Point p : seed) in_seed[p] = true;
      for (Point p = 0; p < n_; ++p)
        if (!in_seed[p]) rest_.push_back(p);
    }
    found_.reset();
    dfs(0, first_block);
    return std::move(found_);
  }

  // True iff the partial partition given by `blocks` has a section through
  // point x placed in block j (all other choices one point per block).
  static bool section_through(const std::vector<std::vector<Point>> &blocks, unsigned j,
                              Point x, int32_t target, const KSetOrbitIndex &idx) {
    unsigned k = static_cast<unsigned>(blocks.size());
    std::vector<Point> combo(k);
    combo[0] = x;
    return section_rec(blocks, j, target, idx, combo, 1, 0);
  }

private:
  static bool section_rec(const std::vector<std::vector<Point>> &blocks, unsigned skip,
                          int32_t target, const KSetOrbitIndex &idx, std::vector<Point> &combo,
                          unsigned filled, unsigned bi) {
    unsigned k = static_cast<unsigned>(blocks.size());
    if (bi == skip) ++bi;
    if (filled == k) {
      // sort and rank
      Point tmp[16];
      for (unsigned i = 0; i < k; ++i) tmp[i] = combo[i];
      for (unsigned i = 1; i < k; ++i) {
        Point v = tmp[i];
        unsigned j = i;
        while (j > 0 && tmp[j - 1] > v) { tmp[j] = tmp[j - 1]; --j; }
        tmp[j] = v;
      }
      uint64_t r = 0;
      const Binomials &b = idx.binomials();
      for (unsigned i = 0; i < k; ++i) r += b(tmp[i], i + 1);
      return idx.orbit_of_rank(r) == target;
    }
    for (Point p : blocks[bi]) {
      combo[filled] = p;
      if (section_rec(blocks, skip, target, idx, combo, filled + 1, bi + 1)) return true;
    }
    return false;
  }

  void dfs(size_t depth, int forced_block) {
    if (found_ || !budget_.ok()) return;
    if (depth == rest_.size()) {
      std::vector<PointSet> bs;
      bs.reserve(k_);
      for (auto &b : blocks_) {
        PointSet s = b;
        std::sort(s.begin(), s.end());
        bs.push_back(std::move(s));
      }
      found_ = SetPartition(n_, std::move(bs));
      return;
    }
    Point x = rest_[depth];
    for (unsigned j = 0; j < k_; ++j) {
      if (depth == 0 && forced_block >= 0 && j != static_cast<unsigned>(forced_block)) continue;
      if (!budget_.tick()) return;
      if (!section_through(blocks_, j, x, target_, idx_)) {
        blocks_[j].push_back(x);
        dfs(depth + 1, forced_block);
        blocks_[j].pop_back();
        if (found_ || !budget_.ok()) return;
      }
    }
  }

  const PermGroup &g_;
  unsigned n_, k_;
  const KSetOrbitIndex &idx_;
  SearchBudget &budget_;
  int32_t target_ = -1;
  std::vector<std::vector<Point>> blocks_;
  std::vector<Point> rest_;
  std::optional<SetPartition> found_;
};

// Backtracking test whether some image of B is a section of P; returns a
// transporter element when one exists. P may be partial; it must have
// exactly |B| blocks.
inline std::optional<Permutation> orbit_contains_section(const PermGroup &g, const PointSet &b,
                                                         const SetPartition &p,
                                                         const KSetOrbitIndex *idx = nullptr) {
  if (p.blocks.size() != b.size())
    throw std::invalid_argument("orbit_contains_section: block count differs from |B|");
  std::optional<KSetOrbitIndex> own;
  if (!idx) {
    own.emplace(g, static_cast<unsigned>(b.size()));
    idx = &own.value();
  }
  int32_t target = idx->orbit_of(b);
  unsigned k = static_cast<unsigned>(b.size());
  std::vector<Point> combo(k);
  // order blocks by size for fail-fast enumeration
  std::vector<unsigned> order(k);
  for (unsigned i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](unsigned a, unsigned c) {
    return p.blocks[a].size() < p.blocks[c].size();
  });
  std::function<std::optional<PointSet>(unsigned)> rec =
      [&](unsigned d) -> std::optional<PointSet> {
    if (d == k) {
      PointSet s(combo.begin(), combo.end());
      std::sort(s.begin(), s.end());
      if (idx->orbit_of(s) == target) return s;
      return std::nullopt;
    }
    for (Point x : p.blocks[order[d]]) {
      combo[d] = x;
      if (auto r = rec(d + 1)) return r;
    }
    return std::nullopt;
  };
  auto hit = rec(0);
  if (!hit) return std::nullopt;
  return idx->transporter(b, *hit);
}

// ---------------------------------------------------------------------------
// weak k-et and the k-et / k-ut decisions
// ---------------------------------------------------------------------------

// Orbit representatives of k-sets containing representatives of every orbit
// on (k-1)-sets. Empty means weak k-et fails.
inline std::vector<PointSet> weak_ket(const PermGroup &g, unsigned k,
                                      const KSetOrbitIndex &idx_k,
                                      const KSetOrbitIndex &idx_km1) {
  std::vector<PointSet> out;
  size_t want = idx_km1.orbit_count();
  if (want > k) return out;  // cannot cover more than k orbits
  for (const auto &rep : idx_k.representatives()) {
    std::vector<bool> covered(want, false);
    size_t cnt = 0;
    PointSet sub(k - 1);
    for (unsigned omit = 0; omit < k; ++omit) {
      unsigned w = 0;
      for (unsigned i = 0; i < k; ++i)
        if (i != omit) sub[w++] = rep[i];
      int32_t oid = idx_km1.orbit_of(sub);
      if (!covered[oid]) { covered[oid] = true; ++cnt; }
    }
    if (cnt == want) out.push_back(rep);
  }
  return out;
}

inline std::vector<PointSet> weak_ket(const PermGroup &g, unsigned k,
                                      uint64_t cap = KSetOrbitIndex::kDefaultCap) {
  KSetOrbitIndex idx_k(g, k, cap), idx_km1(g, k - 1, cap);
  return weak_ket(g, k, idx_k, idx_km1);
}

namespace et_detail {

// Runs the refutation search for every candidate; fills witnesses/refutations.
// Each candidate is decided Yes (witness), No (refutation stored) or Unknown
// (budget exhausted).
struct CandidateOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<SetPartition> refutation;
};

inline CandidateOutcome decide_candidate(const PermGroup &g, unsigned k,
                                         const KSetOrbitIndex &idx, const PointSet &cand,
                                         SearchBudget &budget, unsigned threads) {
  int32_t target = idx.orbit_of(cand);
  std::vector<std::pair<const PointSet *, int>> tasks;  // (seed, first_block)
  for (size_t o = 0; o < idx.orbit_count(); ++o) {
    if (static_cast<int32_t>(o) == target) continue;
    const PointSet &seed = idx.representatives()[o];
    if (threads <= 1) {
      tasks.emplace_back(&seed, -1);
    } else {
      for (unsigned j = 0; j < k; ++j) tasks.emplace_back(&seed, static_cast<int>(j));
    }
  }
  CandidateOutcome out;
  if (tasks.empty()) {  // single orbit: B itself sections everything
    out.verdict = Verdict::Yes;
    return out;
  }
  if (threads <= 1) {
    for (auto &[seed, fb] : tasks) {
      EtSearch search(g, k, idx, budget);
      auto ref = search.find_refutation(target, *seed, fb);
      if (!budget.ok()) { out.verdict = Verdict::Unknown; return out; }
      if (ref) {
        out.verdict = Verdict::No;
        out.refutation = std::move(ref);
        return out;
      }
    }
    out.verdict = Verdict::Yes;
    return out;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mtx;
  std::optional<SetPartition> found;
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed) && budget.ok()) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      EtSearch search(g, k, idx, budget);
      auto ref = search.find_refutation(target, *tasks[i].first, tasks[i].second);
      if (ref) {
        std::lock_guard<std::mutex> lk(mtx);
        if (!found) found = std::move(ref);
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto &th : pool) th.join();
  if (found) {
    out.verdict = Verdict::No;
    out.refutation = std::move(found);
  } else if (!budget.ok()) {
    out.verdict = Verdict::Unknown;
  } else {
    out.verdict = Verdict::Yes;
  }
  return out;
}

}  // namespace et_detail

// Decides the k-et property. Fast paths: k-homogeneous (yes), intransitive
// dispatch, k=2 via orbit-graph connectivity, order bound (no), weak k-et
// empty (no). Otherwise the pruned partition search runs per weak candidate.
inline EtReport ket_decide(const PermGroup &g, unsigned k, const EtOptions &opt = {}) {
  unsigned n = g.degree();
  if (k < 2 || k > n) throw std::invalid_argument("ket_decide: k out of range 2..n");
  if (2 * k > n && !opt.force)
    throw std::invalid_argument("ket_decide: k > n/2 requires the force option");

  EtReport rep;
  rep.k = k;

  // k = 2: a 2-set witnesses iff its orbit graph is connected.
  if (k == 2) {
    rep.rule = "2et-orbit-graph";
    KSetOrbitIndex idx(g, 2, opt.kset_cap);
    for (const auto &r : idx.representatives()) {
      // orbit of the pair as an edge set
      std::vector<std::vector<Point>> adj(n);
      std::vector<PointSet> queue{r};
      std::vector<bool> seen_edge(n * n, false);
      seen_edge[r[0] * n + r[1]] = true;
      for (size_t i = 0; i < queue.size(); ++i) {
        adj[queue[i][0]].push_back(queue[i][1]);
        adj[queue[i][1]].push_back(queue[i][0]);
        for (const auto &p : g.generators()) {
          PointSet im = apply_set(queue[i], p);
          if (!seen_edge[im[0] * n + im[1]]) {
            seen_edge[im[0] * n + im[1]] = true;
            queue.push_back(im);
          }
        }
      }
      std::vector<bool> vis(n, false);
      std::vector<Point> stack{0};
      vis[0] = true;
      size_t cnt = 1;
      while (!stack.empty()) {
        Point x = stack.back();
        stack.pop_back();
        for (Point y : adj[x])
          if (!vis[y]) { vis[y] = true; ++cnt; stack.push_back(y); }
      }
      if (cnt == n) rep.witnesses.push_back({r});
    }
    rep.decision = rep.witnesses.empty() ? Verdict::No : Verdict::Yes;
    return rep;
  }

  // intransitive dispatch for 2 < k < n
  if (!g.is_transitive() && k < n) {
    rep.rule = "intransitive";
    auto orbs = g.orbits();
    const std::vector<Point> *fixed = nullptr;
    const std::vector<Point> *big = nullptr;
    if (orbs.size() == 2) {
      for (const auto &o : orbs)
        (o.size() == 1 ? fixed : big) = &o;
    }
    bool ok = false;
    if (fixed && big) {
      // restrict to the big orbit and test (k-1)-homogeneity
      std::vector<Point> relabel(n, 0);
      for (size_t i = 0; i < big->size(); ++i) relabel[(*big)[i]] = static_cast<Point>(i);
      std::vector<Permutation> rg;
      for (const auto &p : g.generators()) {
        std::vector<Point> im(big->size());
        for (size_t i = 0; i < big->size(); ++i) im[relabel[(*big)[i]]] = relabel[p[(*big)[i]]];
        rg.push_back(Permutation(std::move(im)));
      }
      PermGroup h(static_cast<unsigned>(big->size()), std::move(rg));
      ok = is_k_homogeneous(h, k - 1);
    }
    if (!ok) {
      rep.decision = Verdict::No;
      return rep;
    }
    Point x = (*fixed)[0];
    // witnesses are exactly the k-sets containing the fixed point
    KSetOrbitIndex idx(g, k, opt.kset_cap);
    for (const auto &r : idx.representatives())
      if (std::binary_search(r.begin(), r.end(), x)) rep.witnesses.push_back({r});
    rep.decision = Verdict::Yes;
    return rep;
  }

  if (is_k_homogeneous(g, k)) {
    rep.rule = "k-homogeneous";
    rep.decision = Verdict::Yes;
    KSetOrbitIndex idx(g, k, opt.kset_cap);
    rep.witnesses.push_back({idx.representatives()[0]});
    return rep;
  }

  OrderBound ob = order_bound(n, k, g.order(), "et");
  if (!ob.pass) {
    rep.rule = "order-bound";
    rep.decision = Verdict::No;
    return rep;
  }

  KSetOrbitIndex idx_k(g, k, opt.kset_cap), idx_km1(g, k - 1, opt.kset_cap);
  rep.weak_candidates = weak_ket(g, k, idx_k, idx_km1);
  if (rep.weak_candidates.empty()) {
    rep.rule = "weak-et-empty";
    rep.decision = Verdict::No;
    return rep;
  }

  rep.rule = "partition-search";
  SearchBudget budget(opt);
  bool any_unknown = false;
  for (const auto &cand : rep.weak_candidates) {
    auto outcome = et_detail::decide_candidate(g, k, idx_k, cand, budget,
                                               opt.deterministic ? 1 : opt.threads);
    if (outcome.verdict == Verdict::Yes) {
      rep.witnesses.push_back({cand});
    } else if (outcome.verdict == Verdict::No) {
      rep.refutations.push_back({cand, std::move(*outcome.refutation)});
    } else {
      any_unknown = true;
      break;  // budget is global; no point continuing
    }
  }
  rep.nodes = budget.nodes.load();
  if (!rep.witnesses.empty())
    rep.decision = Verdict::Yes;
  else if (any_unknown) {
    rep.decision = Verdict::Unknown;
    rep.unknown_reason = budget.ok() ? "budget" : (budget.has_deadline ? "timeout-or-nodes" : "node-cap");
  } else {
    rep.decision = Verdict::No;
  }
  return rep;
}

// Decides k-ut: every orbit representative on k-sets must witness k-et.
inline EtReport kut_decide(const PermGroup &g, unsigned k, const EtOptions &opt = {}) {
  unsigned n = g.degree();
  if (k < 2 || k > n) throw std::invalid_argument("kut_decide: k out of range 2..n");
  if (2 * k > n && !opt.force)
    throw std::invalid_argument("kut_decide: k > n/2 requires the force option");

  EtReport rep;
  rep.k = k;
  if (is_k_homogeneous(g, k) && k >= 2) {
    // single orbit; any section of any partition lies in it
    rep.rule = "k-homogeneous";
    rep.decision = Verdict::Yes;
    KSetOrbitIndex idx(g, k, opt.kset_cap);
    rep.orbit_statuses.push_back({idx.representatives()[0], idx.orbit_sizes()[0], Verdict::Yes});
    rep.witnesses.push_back({idx.representatives()[0]});
    return rep;
  }

  rep.rule = "per-orbit-search";
  KSetOrbitIndex idx_k(g, k, opt.kset_cap), idx_km1(g, k - 1, opt.kset_cap);
  SearchBudget budget(opt);
  bool all_yes = true, any_unknown = false;
  for (size_t o = 0; o < idx_k.orbit_count(); ++o) {
    OrbitStatus st;
    st.rep = idx_k.representatives()[o];
    st.orbit_size = idx_k.orbit_sizes()[o];
    // quick necessary condition: the rep must cover all (k-1)-orbits
    std::vector<bool> covered(idx_km1.orbit_count(), false);
    size_t cnt = 0;
    PointSet sub(k - 1);
    int32_t missing = -1;
    for (unsigned omit = 0; omit < k; ++omit) {
      unsigned w = 0;
      for (unsigned i = 0; i < k; ++i)
        if (i != omit) sub[w++] = st.rep[i];
      int32_t oid = idx_km1.orbit_of(sub);
      if (!covered[oid]) { covered[oid] = true; ++cnt; }
    }
    if (cnt < idx_km1.orbit_count()) {
      // build the refuting partition: an uncovered (k-1)-orbit rep as
      // singletons plus the remainder
      for (size_t m = 0; m < idx_km1.orbit_count(); ++m)
        if (!covered[m]) { missing = static_cast<int32_t>(m); break; }
      const PointSet &a = idx_km1.representatives()[missing];
      std::vector<PointSet> blocks;
      for (Point p : a) blocks.push_back({p});
      PointSet rest;
      for (Point p = 0; p < n; ++p)
        if (!std::binary_search(a.begin(), a.end(), p)) rest.push_back(p);
      blocks.push_back(std::move(rest));
      st.witness = Verdict::No;
      rep.refutations.push_back({st.rep, SetPartition(n, std::move(blocks))});
      all_yes = false;
    } else {
      auto outcome = et_detail::decide_candidate(g, k, idx_k, st.rep, budget,
                                                 opt.deterministic ? 1 : opt.threads);
      st.witness = outcome.verdict;
      if (outcome.verdict == Verdict::No) {
        rep.refutations.push_back({st.rep, std::move(*outcome.refutation)});
        all_yes = false;
      } else if (outcome.verdict == Verdict::Unknown) {
        any_unknown = true;
        all_yes = false;
      } else {
        rep.witnesses.push_back({st.rep});
      }
    }
    rep.orbit_statuses.push_back(std::move(st));
    if (!budget.ok()) break;
  }
  rep.nodes = budget.nodes.load();
  if (all_yes)
    rep.decision = Verdict::Yes;
  else if (any_unknown && rep.refutations.empty()) {
    rep.decision = Verdict::Unknown;
    rep.unknown_reason = "budget";
  } else if (!rep.refutations.empty())
    rep.decision = Verdict::No;
  else
    rep.decision = Verdict::Unknown;
  return rep;
}

}  // namespace tvlab
