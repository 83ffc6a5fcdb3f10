#include "tdq/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tdq {
namespace {

// Fixed-width bit vector for the search kernels. Four words cover every
// instance the guards admit (products up to 9*16 = 144 vertices).
constexpr int kWords = 4;
constexpr int kMaxSolverVertices = kWords * 64;

struct Bits {
  std::uint64_t w[kWords] = {};

  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void clear(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }

  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits minus(Bits a, const Bits& b) { return a.subtract(b); }

  bool none() const {
    for (auto x : w) if (x) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }
  int next(int v) const {
    if (v >= kMaxSolverVertices) return -1;
    int wi = v >> 6;
    std::uint64_t x = w[wi] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (x) return wi * 64 + std::countr_zero(x);
      if (++wi == kWords) return -1;
      x = w[wi];
    }
  }
};

Bits from_vertex_set(const VertexSet& s) {
  Bits b;
  for (int v : s) b.set(v);
  return b;
}

VertexSet to_vertex_set(const Bits& b, int n) {
  VertexSet s(n);
  for (int v = b.first(); v >= 0; v = b.next(v + 1)) s.add(v);
  return s;
}

// Branch-and-bound kernel for minimum covering problems of the form
// "smallest S with target subseteq union of cover[v] over v in S".
// gamma_t uses cover[v] = N(v); gamma uses cover[v] = N[v]. Both relations are
// symmetric, so the candidate dominators of a vertex t are exactly cover[t].
//
// Branching follows the covering-code standard: pick an uncovered target
// vertex with the fewest remaining candidates and split on which candidate
// joins S (earlier candidates become forbidden in later branches, which keeps
// the branches disjoint and the enumeration exact). The lower bound greedily
// packs uncovered targets whose candidate sets are pairwise disjoint.
class CoverEngine {
 public:
  CoverEngine(const Graph& g, bool closed) : n_(g.vertex_count()) {
    if (n_ > kMaxSolverVertices)
      throw TooLargeError("solver guard: graphs up to " +
                          std::to_string(kMaxSolverVertices) + " vertices");
    cover_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      cover_[v] = from_vertex_set(g.neighbors(v));
      if (closed) cover_[v].set(v);
    }
  }

  // Optimum size, or -1 when the target cannot be covered at all.
  int minimize(const Bits& target) {
    target_ = target;
    Bits greedy_set;
    int ub = greedy(target, &greedy_set);
    if (ub < 0) return -1;
    best_ = ub;
    Bits s, covered, forbidden;
    opt_rec(s, 0, covered, forbidden);
    return best_;
  }

  // Does a cover of size <= v containing `forced` and avoiding `forbidden`
  // exist? Sound for v equal to the optimum (covers cannot be smaller).
  bool decide(const Bits& target, int v, const Bits& forced, const Bits& forbidden) {
    target_ = target;
    limit_ = v;
    Bits covered;
    int cnt = 0;
    for (int u = forced.first(); u >= 0; u = forced.next(u + 1)) {
      covered |= cover_[u];
      ++cnt;
    }
    if (cnt > v) return false;
    return decide_rec(cnt, covered, forbidden);
  }

  // All covers of size exactly v; complete when v is the optimum size (every
  // member of a minimum cover has a private target, which the branching
  // scheme relies on). Throws LimitExceededError past `limit` solutions.
  std::vector<Bits> enumerate(const Bits& target, int v, std::size_t limit) {
    target_ = target;
    limit_ = v;
    enum_limit_ = limit;
    solutions_.clear();
    Bits s, covered, forbidden;
    enum_rec(s, 0, covered, forbidden);
    return std::move(solutions_);
  }

  // Lexicographically least cover of size v (v must be the optimum).
  Bits lex_least(const Bits& target, int v) {
    Bits chosen, forbidden;
    int cnt = 0;
    for (int u = 0; u < n_ && cnt < v; ++u) {
      Bits with = chosen;
      with.set(u);
      if (decide(target, v, with, forbidden)) {
        chosen = with;
        ++cnt;
      } else {
        forbidden.set(u);
      }
    }
    return chosen;
  }

 private:
  int greedy(const Bits& target, Bits* out) {
    Bits covered, s;
    int size = 0;
    while (!target.subset_of(covered)) {
      Bits uncovered = minus(target, covered);
      int best_v = -1, best_gain = 0;
      for (int v = 0; v < n_; ++v) {
        int gain = (cover_[v] & uncovered).count();
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      if (best_v < 0) return -1;
      s.set(best_v);
      covered |= cover_[best_v];
      ++size;
    }
    *out = s;
    return size;
  }

  // Greedy packing bound plus branch vertex selection. Returns -1 when some
  // uncovered target has no remaining candidate (dead branch); otherwise the
  // bound, with *branch set to an uncovered target of minimum candidate count.
  int bound_and_branch(const Bits& covered, const Bits& forbidden, int* branch) {
    int cnt_of[kMaxSolverVertices];
    int verts[kMaxSolverVertices];
    int m = 0;
    int best_cnt = 1 << 30;
    Bits uncovered = minus(target_, covered);
    for (int t = uncovered.first(); t >= 0; t = uncovered.next(t + 1)) {
      int c = (minus(cover_[t], forbidden)).count();
      if (c == 0) return -1;
      verts[m] = t;
      cnt_of[m] = c;
      ++m;
      if (c < best_cnt) {
        best_cnt = c;
        *branch = t;
      }
    }
    if (m == 0) {
      *branch = -1;
      return 0;
    }
    int lb = 0;
    Bits used;
    for (int pass = 1; pass <= 4; ++pass) {
      for (int i = 0; i < m; ++i) {
        if (pass < 4 ? cnt_of[i] != pass : cnt_of[i] < 4) continue;
        Bits cand = minus(cover_[verts[i]], forbidden);
        if (!cand.intersects(used)) {
          ++lb;
          used |= cand;
        }
      }
    }
    return lb;
  }

  void opt_rec(const Bits& s, int size, const Bits& covered, const Bits& forbidden) {
    if (target_.subset_of(covered)) {
      if (size < best_) best_ = size;
      return;
    }
    int branch = -1;
    int lb = bound_and_branch(covered, forbidden, &branch);
    if (lb < 0 || size + lb >= best_) return;
    Bits avail = minus(cover_[branch], forbidden);
    // Try candidates covering more first; incumbents improve sooner.
    int order[kMaxSolverVertices];
    int m = order_by_gain(avail, covered, order);
    Bits forb = forbidden;
    for (int i = 0; i < m; ++i) {
      int c = order[i];
      Bits s2 = s;
      s2.set(c);
      opt_rec(s2, size + 1, covered | cover_[c], forb);
      forb.set(c);
    }
  }

  bool decide_rec(int size, const Bits& covered, const Bits& forbidden) {
    if (target_.subset_of(covered)) return true;
    int branch = -1;
    int lb = bound_and_branch(covered, forbidden, &branch);
    if (lb < 0 || size + lb > limit_) return false;
    Bits avail = minus(cover_[branch], forbidden);
    int order[kMaxSolverVertices];
    int m = order_by_gain(avail, covered, order);
    Bits forb = forbidden;
    for (int i = 0; i < m; ++i) {
      int c = order[i];
      if (decide_rec(size + 1, covered | cover_[c], forb)) return true;
      forb.set(c);
    }
    return false;
  }

  void enum_rec(const Bits& s, int size, const Bits& covered, const Bits& forbidden) {
    if (target_.subset_of(covered)) {
      if (size == limit_) {
        if (solutions_.size() >= enum_limit_)
          throw LimitExceededError("more than " + std::to_string(enum_limit_) +
                                   " minimum covers exist");
        solutions_.push_back(s);
      }
      return;
    }
    int branch = -1;
    int lb = bound_and_branch(covered, forbidden, &branch);
    if (lb < 0 || size + lb > limit_) return;
    Bits avail = minus(cover_[branch], forbidden);
    Bits forb = forbidden;
    for (int c = avail.first(); c >= 0; c = avail.next(c + 1)) {
      Bits s2 = s;
      s2.set(c);
      enum_rec(s2, size + 1, covered | cover_[c], forb);
      forb.set(c);
    }
  }

  int order_by_gain(const Bits& avail, const Bits& covered, int* order) {
    struct Entry {
      int gain, v;
    };
    Entry entries[kMaxSolverVertices];
    int m = 0;
    for (int c = avail.first(); c >= 0; c = avail.next(c + 1)) {
      Bits fresh = cover_[c];
      fresh &= target_;
      fresh.subtract(covered);
      entries[m++] = {fresh.count(), c};
    }
    std::sort(entries, entries + m, [](const Entry& a, const Entry& b) {
      return a.gain != b.gain ? a.gain > b.gain : a.v < b.v;
    });
    for (int i = 0; i < m; ++i) order[i] = entries[i].v;
    return m;
  }

  int n_;
  std::vector<Bits> cover_;
  Bits target_;
  int best_ = 0;
  int limit_ = 0;
  std::size_t enum_limit_ = 0;
  std::vector<Bits> solutions_;
};

SolveResult solve_min_cover(const Graph& g, bool closed, const Bits& target) {
  CoverEngine engine(g, closed);
  int v = engine.minimize(target);
  if (v < 0) throw Error("target cannot be covered in this graph");
  Bits cert = engine.lex_least(target, v);
  return {v, to_vertex_set(cert, g.vertex_count())};
}

Bits full_bits(int n) {
  Bits b;
  for (int v = 0; v < n; ++v) b.set(v);
  return b;
}

void require_no_isolated(const Graph& g) {
  if (has_isolated_vertex(g))
    throw IsolatedVertexError("gamma_t is undefined: the graph has an isolated vertex");
}

// --- 2-packing search: maximum independent set in the conflict relation
// conflict(u,v) <=> N[u] and N[v] intersect. ---

class PackingEngine {
 public:
  explicit PackingEngine(const Graph& g) : n_(g.vertex_count()) {
    if (n_ > kMaxSolverVertices)
      throw TooLargeError("solver guard: graphs up to " +
                          std::to_string(kMaxSolverVertices) + " vertices");
    std::vector<Bits> closed(n_);
    for (int v = 0; v < n_; ++v) {
      closed[v] = from_vertex_set(g.neighbors(v));
      closed[v].set(v);
    }
    conflict_.resize(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (closed[u].intersects(closed[v])) conflict_[u].set(v);
    // conflict_[v] includes v itself; convenient below.
  }

  int maximize() {
    best_ = 0;
    max_rec(full_bits(n_), 0);
    return best_;
  }

  bool decide(const Bits& forced, int want) {
    Bits allowed = full_bits(n_);
    int have = 0;
    for (int u = forced.first(); u >= 0; u = forced.next(u + 1)) {
      if (!allowed.test(u)) return false;  // forced set conflicts internally
      allowed.subtract(conflict_[u]);
      ++have;
    }
    return have >= want || decide_rec(allowed, want - have);
  }

  Bits lex_least(int v) {
    Bits chosen;
    int cnt = 0;
    for (int u = 0; u < n_ && cnt < v; ++u) {
      Bits with = chosen;
      with.set(u);
      if (decide(with, v)) {
        chosen = with;
        ++cnt;
      }
    }
    return chosen;
  }

 private:
  void max_rec(const Bits& allowed, int size) {
    if (size + allowed.count() <= best_) return;
    int c = allowed.first();
    if (c < 0) {
      best_ = size;
      return;
    }
    Bits incl = allowed;
    incl.subtract(conflict_[c]);
    max_rec(incl, size + 1);
    Bits excl = allowed;
    excl.clear(c);
    max_rec(excl, size);
  }

  bool decide_rec(const Bits& allowed, int need) {
    if (need <= 0) return true;
    if (allowed.count() < need) return false;
    int c = allowed.first();
    Bits incl = allowed;
    incl.subtract(conflict_[c]);
    if (decide_rec(incl, need - 1)) return true;
    Bits excl = allowed;
    excl.clear(c);
    return decide_rec(excl, need);
  }

  int n_;
  std::vector<Bits> conflict_;
  int best_ = 0;
};

// --- naive oracles: cardinality-ascending combination scan ---

constexpr int kNaiveMaxVertices = 24;

void require_naive_size(const Graph& g) {
  if (g.vertex_count() > kNaiveMaxVertices)
    throw TooLargeError("naive oracle guard: graphs up to " +
                        std::to_string(kNaiveMaxVertices) + " vertices");
}

// Visits k-subsets of 0..n-1 in lexicographic order of their sorted member
// lists; stops early when fn returns true. Returns whether fn accepted one.
bool scan_combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k > n) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (fn(c)) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

SolveResult naive_min_cover(const Graph& g, bool closed) {
  require_naive_size(g);
  int n = g.vertex_count();
  VertexSet all = VertexSet::full(n);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> hit;
    bool found = scan_combinations(n, k, [&](const std::vector<int>& c) {
      VertexSet covered(n);
      for (int v : c) {
        covered |= g.neighbors(v);
        if (closed) covered.add(v);
      }
      if (covered != all) return false;
      hit = c;
      return true;
    });
    if (found) {
      VertexSet cert(n);
      for (int v : hit) cert.add(v);
      return {k, cert};
    }
  }
  throw Error("graph cannot be covered");  // unreachable for valid inputs
}

}  // namespace

SolveResult gamma_t(const Graph& g) {
  require_no_isolated(g);
  return solve_min_cover(g, /*closed=*/false, full_bits(g.vertex_count()));
}

SolveResult gamma(const Graph& g) {
  return solve_min_cover(g, /*closed=*/true, full_bits(g.vertex_count()));
}

SolveResult rho_2(const Graph& g) {
  PackingEngine engine(g);
  int v = engine.maximize();
  Bits cert = engine.lex_least(v);
  return {v, to_vertex_set(cert, g.vertex_count())};
}

std::vector<VertexSet> all_min_td_sets(const Graph& g, std::size_t limit) {
  if (limit < 1) throw InvalidArgumentError("limit must be at least 1");
  require_no_isolated(g);
  return all_min_total_dominators(g, VertexSet::full(g.vertex_count()), limit);
}

SolveResult min_total_dominator(const Graph& g, const VertexSet& target) {
  return solve_min_cover(g, /*closed=*/false, from_vertex_set(target));
}

std::vector<VertexSet> all_min_total_dominators(const Graph& g, const VertexSet& target,
                                                std::size_t limit) {
  CoverEngine engine(g, /*closed=*/false);
  Bits t = from_vertex_set(target);
  int v = engine.minimize(t);
  if (v < 0) throw Error("target cannot be covered in this graph");
  std::vector<Bits> raw = engine.enumerate(t, v, limit);
  std::vector<VertexSet> out;
  out.reserve(raw.size());
  for (const Bits& b : raw) out.push_back(to_vertex_set(b, g.vertex_count()));
  std::sort(out.begin(), out.end(), VertexSet::lex_less);
  return out;
}

SolveResult gamma_t_naive(const Graph& g) {
  require_no_isolated(g);
  return naive_min_cover(g, /*closed=*/false);
}

SolveResult gamma_naive(const Graph& g) { return naive_min_cover(g, /*closed=*/true); }

SolveResult rho2_naive(const Graph& g) {
  require_naive_size(g);
  int n = g.vertex_count();
  std::vector<VertexSet> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = closed_neighborhood(g, v);
  SolveResult best{0, VertexSet(n)};
  for (int k = 1; k <= n; ++k) {
    std::vector<int> hit;
    bool found = scan_combinations(n, k, [&](const std::vector<int>& c) {
      VertexSet seen(n);
      for (int v : c) {
        if (seen.intersects(closed[v])) return false;
        seen |= closed[v];
      }
      hit = c;
      return true;
    });
    if (!found) break;  // packings are hereditary, so no larger one exists
    VertexSet cert(n);
    for (int v : hit) cert.add(v);
    best = {k, cert};
  }
  return best;
}

}  // namespace tdq
