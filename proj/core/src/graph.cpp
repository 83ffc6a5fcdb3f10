#include "tdq/graph.hpp"

#include <algorithm>

namespace tdq {

std::vector<int> Graph::degree_sequence_sorted() const {
  std::vector<int> d(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

VertexSet set_neighborhood(const Graph& g, const VertexSet& x) {
  if (x.universe_size() != g.vertex_count())
    throw InvalidArgumentError("vertex set does not match graph");
  VertexSet out(g.vertex_count());
  for (int v : x) out |= g.neighbors(v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet out = g.neighbors(v);
  out.add(v);
  return out;
}

VertexSet private_neighbors(const Graph& g, int u, const VertexSet& x) {
  if (!x.contains(u)) throw InvalidArgumentError("u must be a member of X");
  VertexSet out(g.vertex_count());
  VertexSet just_u = VertexSet::of(g.vertex_count(), {u});
  for (int w = 0; w < g.vertex_count(); ++w)
    if ((g.neighbors(w) & x) == just_u) out.add(w);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw InvalidArgumentError("induced subgraph of empty set");
  std::vector<int> old_of_new = x.members();
  std::vector<int> new_of_old(g.vertex_count(), -1);
  for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = static_cast<int>(i);
  Graph sub(static_cast<int>(old_of_new.size()));
  std::vector<std::pair<int, int>> edges;
  for (int u : x)
    for (int v : g.neighbors(u) & x)
      if (u < v) edges.emplace_back(new_of_old[u], new_of_old[v]);
  return {Graph(static_cast<int>(old_of_new.size()), edges), std::move(old_of_new)};
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(ng) * h.edge_count() +
                static_cast<std::size_t>(nh) * g.edge_count());
  for (int a = 0; a < ng; ++a)
    for (auto [u, v] : h.edges()) edges.emplace_back(a * nh + u, a * nh + v);
  for (auto [a, b] : g.edges())
    for (int u = 0; u < nh; ++u) edges.emplace_back(a * nh + u, b * nh + u);
  return {Graph(ng * nh, edges), g, h};
}

VertexSet g_fiber(const ProductGraph& p, int h) {
  if (h < 0 || h >= p.factor_h.vertex_count()) throw OutOfRangeError("h out of range");
  VertexSet out(p.product.vertex_count());
  for (int g = 0; g < p.factor_g.vertex_count(); ++g) out.add(p.index_of(g, h));
  return out;
}

VertexSet h_fiber(const ProductGraph& p, int g) {
  if (g < 0 || g >= p.factor_g.vertex_count()) throw OutOfRangeError("g out of range");
  VertexSet out(p.product.vertex_count());
  for (int h = 0; h < p.factor_h.vertex_count(); ++h) out.add(p.index_of(g, h));
  return out;
}

VertexSet project_g(const ProductGraph& p, const VertexSet& s) {
  VertexSet out(p.factor_g.vertex_count());
  for (int idx : s) out.add(p.coords_of(idx).first);
  return out;
}

VertexSet project_h(const ProductGraph& p, const VertexSet& s) {
  VertexSet out(p.factor_h.vertex_count());
  for (int idx : s) out.add(p.coords_of(idx).second);
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  return (s | set_neighborhood(g, s)) == VertexSet::full(g.vertex_count());
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
  return set_neighborhood(g, s) == VertexSet::full(g.vertex_count());
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgumentError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int ng = g.vertex_count();
  std::vector<std::pair<int, int>> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + ng, v + ng);
  return Graph(ng + h.vertex_count(), e);
}

Graph k_copies_k2(int k) {
  if (k < 1) throw InvalidArgumentError("kK_2 needs k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, i + k);
  return Graph(2 * k, e);
}

bool is_connected(const Graph& g) {
  VertexSet seen = VertexSet::of(g.vertex_count(), {0});
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = set_neighborhood(g, frontier) - seen;
    seen |= next;
    frontier = next;
  }
  return seen.count() == g.vertex_count();
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(v).empty()) return true;
  return false;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp = VertexSet::of(g.vertex_count(), {v});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = set_neighborhood(g, frontier) - comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace tdq
