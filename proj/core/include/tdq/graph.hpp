#pragma once

#include <utility>
#include <vector>

#include "tdq/errors.hpp"
#include "tdq/vertex_set.hpp"

namespace tdq {

// A finite simple undirected graph on vertices 0..n-1, stored as per-vertex
// neighbor sets. Immutable after construction; all operations are pure.
class Graph {
 public:
  explicit Graph(int n) : adj_(n > 0 ? n : throw InvalidArgumentError("graph needs n >= 1"),
                                VertexSet(n)) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_internal(u, v);
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  const VertexSet& neighbors(int v) const {
    check_range(v);
    return adj_[v];
  }
  bool has_edge(int u, int v) const {
    check_range(u);
    return adj_[u].contains(v);
  }
  int degree(int v) const { return neighbors(v).count(); }
  int edge_count() const {
    int twice = 0;
    for (const auto& nb : adj_) twice += nb.count();
    return twice / 2;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
  std::vector<int> degree_sequence_sorted() const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  friend Graph graph_with_edges(int, const std::vector<std::pair<int, int>>&);
  void add_edge_internal(int u, int v) {
    check_range(u);
    check_range(v);
    if (u == v) throw InvalidArgumentError("loops are not allowed");
    adj_[u].add(v);
    adj_[v].add(u);
  }
  void check_range(int v) const {
    if (v < 0 || v >= vertex_count())
      throw OutOfRangeError("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<VertexSet> adj_;
};

// The Cartesian product G box H together with the factor graphs and the fixed
// vertex bijection (g,h) <-> g*|V(H)| + h.
struct ProductGraph {
  Graph product;
  Graph factor_g;
  Graph factor_h;

  int index_of(int g, int h) const { return g * factor_h.vertex_count() + h; }
  std::pair<int, int> coords_of(int idx) const {
    int nh = factor_h.vertex_count();
    return {idx / nh, idx % nh};
  }
};

// --- neighborhood algebra ---

VertexSet neighborhood(const Graph& g, int v);
VertexSet set_neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, int v);

// N(w) cap X = {u} for each returned w; requires u in X.
VertexSet private_neighbors(const Graph& g, int u, const VertexSet& x);

// Vertex set X of g, relabeled 0..|X|-1 preserving order. `old_of_new[i]` is
// the original label of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_of_new;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

// --- products, fibers, projections ---

ProductGraph cartesian_product(const Graph& g, const Graph& h);
VertexSet g_fiber(const ProductGraph& p, int h);
VertexSet h_fiber(const ProductGraph& p, int g);
VertexSet project_g(const ProductGraph& p, const VertexSet& s);
VertexSet project_h(const ProductGraph& p, const VertexSet& s);

// --- domination predicates ---

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);

// --- builders ---

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& g, const Graph& h);
// k disjoint edges with the pairing (i, i+k) for i in 0..k-1.
Graph k_copies_k2(int k);

// --- structure queries ---

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace tdq
