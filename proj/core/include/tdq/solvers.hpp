#pragma once

#include <vector>

#include "tdq/graph.hpp"

namespace tdq {

struct SolveResult {
  int value = 0;
  VertexSet certificate;
};

// Exact total domination number with a certificate that is the
// lexicographically least optimum in bitmap order. Throws IsolatedVertexError
// when gamma_t is undefined.
SolveResult gamma_t(const Graph& g);

// Exact domination number (defined for every graph).
SolveResult gamma(const Graph& g);

// Exact 2-packing number: maximum number of vertices with pairwise disjoint
// closed neighborhoods; the certificate holds the centers.
SolveResult rho_2(const Graph& g);

// Every minimum TD-set, in bitmap order. Throws LimitExceededError when more
// than `limit` optima exist, so callers fail loudly instead of truncating.
std::vector<VertexSet> all_min_td_sets(const Graph& g, std::size_t limit = 100000);

// Generalized forms used by the family machinery: minimum S with
// target subseteq N(S), i.e. a minimum set that totally dominates `target`.
SolveResult min_total_dominator(const Graph& g, const VertexSet& target);
std::vector<VertexSet> all_min_total_dominators(const Graph& g, const VertexSet& target,
                                                std::size_t limit = 100000);

// Independent oracles: cardinality-ascending subset enumeration with no
// pruning beyond cardinality. Guarded to |V| <= 24.
SolveResult gamma_t_naive(const Graph& g);
SolveResult gamma_naive(const Graph& g);
SolveResult rho2_naive(const Graph& g);

}  // namespace tdq
