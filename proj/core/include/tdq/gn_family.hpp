#pragma once

#include "tdq/graph.hpp"
#include "tdq/rational.hpp"
#include "tdq/solvers.hpp"

namespace tdq {

// The graph obtained from K_n by attaching a pendant path b_i - c_i to each
// clique vertex a_i. Label convention is fixed so constructed sets are
// reproducible bit for bit: a_i = i, b_i = n + i, c_i = 2n + i for 0 <= i < n.
struct GnGraph {
  int n;
  Graph graph;

  int a(int i) const { return i; }
  int b(int i) const { return n + i; }
  int c(int i) const { return 2 * n + i; }
};

GnGraph build_gn(int n);

// The explicit TD-set of G_k box G_n of size 2kn + 2k:
// (A x {x1,z1}) u (B x ((Y\{y1}) u (Z\{z1}))) u (C x {x1,y1}),
// over the product with indexing (u,v) -> u*3n + v. Requires 2 <= k <= n.
VertexSet gn_product_tdset(int k, int n);

struct GnBounds {
  long long lower = 0;  // 2kn + k
  long long upper = 0;  // 2kn + 2k
  SolveResult exact;    // solver's gamma_t of the 9kn-vertex product
};

// Exact gamma_t of G_k box G_n next to the proven bounds. The kn cap keeps
// the branch-and-bound at desk scale; callers may raise it explicitly.
GnBounds gn_bounds_check(int k, int n, int kn_cap = 16);

struct GnQuotientCheck {
  Rational qt;            // gamma_t(G_k box G_n) / (2k * 2n)
  Rational lower, upper;  // 1/2 + 1/(4n), 1/2 + 1/(2n)
  bool within = false;
};

GnQuotientCheck gn_quotient_check(int k, int n, int kn_cap = 16);

}  // namespace tdq
