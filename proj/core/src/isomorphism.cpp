#include "tdq/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tdq {
namespace {

// Permutation DFS minimizing the column-major upper-triangle bit string.
// Slot k's column contributes the bits x(perm[0],v) .. x(perm[k-1],v), so the
// string grows column by column and prefixes compare on the fly. The search
// prunes branches whose prefix exceeds the incumbent; the moment a prefix
// drops strictly below the incumbent, any completion is smaller, so the branch
// is completed greedily, the incumbent replaced, and the search restarted.
// Each restart strictly decreases the incumbent, so this terminates.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.vertex_count()) {
    adj_.assign(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (int u : g.neighbors(v)) adj_[v] |= std::uint64_t{1} << u;
    best_ = adjacency_bits(g);
    cur_.resize(best_.size());
    perm_.resize(n_);
    best_perm_.resize(n_);
    for (int v = 0; v < n_; ++v) best_perm_[v] = v;
  }

  void run() {
    while (dfs(0, 0)) {
    }
  }

  std::vector<std::uint8_t> take_best() { return std::move(best_); }
  std::vector<int> take_best_perm() { return std::move(best_perm_); }

 private:
  // Returns true when the incumbent was improved (caller restarts).
  bool dfs(int k, std::size_t pos) {
    if (k == n_) return false;  // identical to incumbent
    int order[64];
    int m = ordered_candidates(k, order);
    for (int ci = 0; ci < m; ++ci) {
      int v = order[ci];
      int cmp = 0;  // -1 below incumbent, 0 equal, +1 above
      for (int i = 0; i < k; ++i) {
        std::uint8_t bit = (adj_[v] >> perm_[i]) & 1;
        cur_[pos + i] = bit;  // the full column must land in cur_ either way
        if (cmp == 0 && bit != best_[pos + i]) cmp = bit < best_[pos + i] ? -1 : 1;
      }
      if (cmp > 0) continue;
      place(k, v);
      if (cmp < 0) {
        complete_greedily(k + 1, pos + k);
        unplace(v);
        return true;
      }
      if (dfs(k + 1, pos + k)) {
        unplace(v);
        return true;
      }
      unplace(v);
    }
    return false;
  }

  // Fill the remaining slots in heuristic order and adopt the result, which is
  // guaranteed smaller than the incumbent because the prefix already diverged
  // below it. Placements are undone before returning.
  void complete_greedily(int k, std::size_t pos) {
    int filled_from = k;
    for (; k < n_; ++k) {
      int order[64];
      ordered_candidates(k, order);
      int v = order[0];
      for (int i = 0; i < k; ++i) cur_[pos + i] = (adj_[v] >> perm_[i]) & 1;
      place(k, v);
      pos += k;
    }
    best_.assign(cur_.begin(), cur_.end());
    for (int v = 0; v < n_; ++v) best_perm_[v] = slot_of_[v];
    for (int s = filled_from; s < n_; ++s) unplace(perm_[s]);
  }

  int ordered_candidates(int k, int* order) {
    struct Cand {
      int within, v;
    };
    Cand cands[64];
    int m = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1) continue;
      cands[m++] = {std::popcount(adj_[v] & placed_), v};
    }
    std::sort(cands, cands + m, [](const Cand& a, const Cand& b) {
      return a.within != b.within ? a.within < b.within : a.v < b.v;
    });
    for (int i = 0; i < m; ++i) order[i] = cands[i].v;
    (void)k;
    return m;
  }

  void place(int k, int v) {
    perm_[k] = v;
    slot_of_[v] = k;
    used_ |= std::uint64_t{1} << v;
    placed_ |= std::uint64_t{1} << v;
  }
  void unplace(int v) {
    used_ &= ~(std::uint64_t{1} << v);
    placed_ &= ~(std::uint64_t{1} << v);
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint8_t> best_, cur_;
  std::vector<int> perm_, best_perm_;
  std::vector<int> slot_of_ = std::vector<int>(64, 0);
  std::uint64_t used_ = 0, placed_ = 0;
};

}  // namespace

std::vector<std::uint8_t> adjacency_bits(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
  return bits;
}

std::vector<std::uint8_t> canonical_form(const Graph& g) {
  if (g.vertex_count() > 64) throw TooLargeError("canonical form limited to 64 vertices");
  if (g.vertex_count() == 1) return {};
  Canonicalizer c(g);
  c.run();
  return c.take_best();
}

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.vertex_count() > 64) throw TooLargeError("canonical form limited to 64 vertices");
  if (g.vertex_count() == 1) return {0};
  Canonicalizer c(g);
  c.run();
  return c.take_best_perm();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence_sorted() != b.degree_sequence_sorted()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace tdq
