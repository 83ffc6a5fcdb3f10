#include "tdq/families.hpp"

#include <algorithm>

#include "tdq/isomorphism.hpp"

namespace tdq {
namespace {

bool is_k2(const Graph& g) { return g.vertex_count() == 2 && g.edge_count() == 1; }

VertexSet map_to_host(const VertexSet& sub_set, const std::vector<int>& old_of_new, int host_n) {
  VertexSet out(host_n);
  for (int v : sub_set) out.add(old_of_new[v]);
  return out;
}

bool f2_split_valid(const Graph& g, const VertexSet& d1, const VertexSet& d2) {
  VertexSet all = VertexSet::full(g.vertex_count());
  return d1 == (all - set_neighborhood(g, d2)) && d2 == (all - set_neighborhood(g, d1));
}

// 1-regular induced subgraph, i.e. a perfect matching on the set (kK_2 with
// k = |set|/2; vacuously true for the empty set).
bool induces_perfect_matching(const Graph& g, const VertexSet& set) {
  for (int v : set)
    if ((g.neighbors(v) & set).count() != 1) return false;
  return true;
}

bool no_common_neighbor_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int u : a)
    for (int v : b)
      if (u != v && g.neighbors(u).intersects(g.neighbors(v))) return false;
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    default: return "n/a";
  }
}

std::optional<F1Witness> in_f1(const Graph& g) {
  SolveResult gt = gamma_t(g);  // throws IsolatedVertexError when undefined
  SolveResult dom = gamma(g);
  if (gt.value != 2 * dom.value) return std::nullopt;
  return F1Witness{dom.certificate};
}

std::optional<F2Witness> in_f2(const Graph& g, std::size_t limit) {
  int n = g.vertex_count();
  for (const VertexSet& d : all_min_td_sets(g, limit)) {
    std::vector<int> members = d.members();
    int k = static_cast<int>(members.size());
    for (std::uint32_t split = 1; split + 1 < (std::uint32_t{1} << k); ++split) {
      VertexSet d1(n), d2(n);
      for (int j = 0; j < k; ++j)
        ((split >> j) & 1 ? d1 : d2).add(members[j]);
      if (f2_split_valid(g, d1, d2)) return F2Witness{d, d1, d2};
    }
  }
  return std::nullopt;
}

std::optional<F3Witness> in_f3(const Graph& g, int vertex_cap, std::size_t limit) {
  int n = g.vertex_count();
  if (n > vertex_cap)
    throw TooLargeError("F3 search is exhaustive over bipartitions; cap is " +
                        std::to_string(vertex_cap) + " vertices");
  int gt = gamma_t(g).value;
  for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
    VertexSet v1(n), v2(n);
    for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? v1 : v2).add(v);
    InducedSubgraph g1 = induced_subgraph(g, v1);
    if (has_isolated_vertex(g1.graph)) continue;
    InducedSubgraph g2 = induced_subgraph(g, v2);
    if (has_isolated_vertex(g2.graph)) continue;
    if (gamma_t(g1.graph).value + gamma_t(g2.graph).value != gt) continue;
    auto w1 = in_f1(g1.graph);
    if (!w1) continue;
    auto w2 = in_f2(g2.graph, limit);
    if (!w2) continue;
    return F3Witness{
        v1, v2,
        F1Witness{map_to_host(w1->dominating_set, g1.old_of_new, n)},
        F2Witness{map_to_host(w2->d, g2.old_of_new, n), map_to_host(w2->d1, g2.old_of_new, n),
                  map_to_host(w2->d2, g2.old_of_new, n)}};
  }
  return std::nullopt;
}

FamilyClassification classify(const Graph& g, int f3_vertex_cap, std::size_t limit) {
  FamilyClassification c;
  c.f1 = in_f1(g);
  c.f2 = in_f2(g, limit);
  c.f3 = in_f3(g, f3_vertex_cap, limit);
  return c;
}

DecompositionReport decompose_product_tdset(const Graph& g, const Graph& h,
                                            const VertexSet& d) {
  if (g.vertex_count() < 2 || !is_connected(g))
    throw HypothesisError("G must be a nontrivial connected graph");
  if (h.vertex_count() < 2 || !is_connected(h))
    throw HypothesisError("H must be a nontrivial connected graph");
  if (gamma_t(h).value != 2) throw HypothesisError("gamma_t(H) = 2 required");
  ProductGraph prod = cartesian_product(g, h);
  int gt_g = gamma_t(g).value;
  int gt_prod = gamma_t(prod.product).value;
  if (gt_g != gt_prod)
    throw HypothesisError("gamma_t(G) = gamma_t(G box H) required");
  if (d.universe_size() != prod.product.vertex_count() || !is_total_dominating(prod.product, d) ||
      d.count() != gt_prod)
    throw NotMinimumTdSetError("D is not a minimum TD-set of G box H");

  int ng = g.vertex_count(), nh = h.vertex_count();
  DecompositionReport r;
  r.d = d;
  r.d_prime = VertexSet(d.universe_size());
  // (g,h) lands in D' when some other fiber of the same column meets D.
  std::vector<int> column_count(ng, 0);
  for (int idx : d) ++column_count[prod.coords_of(idx).first];
  for (int idx : d)
    if (column_count[prod.coords_of(idx).first] > 1) r.d_prime.add(idx);
  r.d_dprime = d - r.d_prime;
  r.d_dprime_i.assign(nh, VertexSet(d.universe_size()));
  for (int idx : r.d_dprime) r.d_dprime_i[prod.coords_of(idx).second].add(idx);

  r.s = project_g(prod, r.d);
  r.s_prime = project_g(prod, r.d_prime);
  r.s_dprime = project_g(prod, r.d_dprime);
  r.p = set_neighborhood(g, r.s) - r.s;
  r.p_prime = set_neighborhood(g, r.s_prime) - r.s_prime;
  r.p_dprime = set_neighborhood(g, r.s_dprime) - r.s_dprime;
  r.s_dprime_i.reserve(nh);
  for (int i = 0; i < nh; ++i) r.s_dprime_i.push_back(project_g(prod, r.d_dprime_i[i]));

  r.t_prime = min_total_dominator(g, r.s_prime).certificate;
  r.x = r.s_prime | r.t_prime | r.s_dprime;
  r.statements = check_proposition_statements(r, g, h);
  return r;
}

std::map<std::string, Verdict> check_proposition_statements(const DecompositionReport& r,
                                                            const Graph& g, const Graph& h) {
  std::map<std::string, Verdict> out;
  int n = g.vertex_count();
  int gt_g = gamma_t(g).value;
  auto verdict = [](bool ok) { return ok ? Verdict::kPass : Verdict::kFail; };

  out["A"] = verdict((r.s | r.p) == VertexSet::full(n));
  out["B"] = verdict(gt_g == 2 * r.s_prime.count() + r.s_dprime.count());

  bool c_ok = no_common_neighbor_between(g, r.s_prime, r.s_prime);
  for (int u : r.s_prime)
    if ((g.neighbors(u) & r.s_prime).count() > 0) c_ok = false;  // independence
  out["C"] = verdict(c_ok);

  bool d_ok = true;
  for (int u : r.s_prime)
    if (g.neighbors(u).intersects(r.s_dprime)) d_ok = false;
  out["D"] = verdict(d_ok);

  out["E"] = verdict(induces_perfect_matching(g, r.s_dprime));

  // E' quantifies over every minimum set totally dominating S'.
  bool eprime_ok = true;
  {
    std::vector<VertexSet> t_candidates = all_min_total_dominators(g, r.s_prime);
    for (const VertexSet& t : t_candidates) {
      if (!t.subset_of(r.p_prime)) eprime_ok = false;
      if (t.count() != r.s_prime.count()) eprime_ok = false;
      VertexSet x = r.s_prime | t | r.s_dprime;
      if (x.count() != gt_g || !is_total_dominating(g, x)) {
        eprime_ok = false;
        continue;
      }
      for (int v : r.s_dprime) {
        VertexSet pn = private_neighbors(g, v, x);
        if (pn.count() != 1 || !pn.subset_of(r.s_dprime)) eprime_ok = false;
      }
    }
    out["E'"] = verdict(eprime_ok);
  }

  bool f_ok = true, g_ok = true, h_ok = true;
  for (const VertexSet& si : r.s_dprime_i) {
    if (!induces_perfect_matching(g, si)) f_ok = false;
    if (!(r.p_dprime | si).subset_of(set_neighborhood(g, si))) g_ok = false;
    if (!no_common_neighbor_between(g, si, si)) h_ok = false;
  }
  out["F"] = verdict(f_ok);
  out["G"] = verdict(g_ok);
  out["H"] = verdict(h_ok);

  out["I"] = verdict(no_common_neighbor_between(g, r.s_prime, r.s_dprime));

  bool j_ok = !r.s_prime.intersects(r.s_dprime) && !r.s_prime.intersects(r.p_prime) &&
              !r.s_prime.intersects(r.p_dprime) && !r.s_dprime.intersects(r.p_prime) &&
              !r.s_dprime.intersects(r.p_dprime) && !r.p_prime.intersects(r.p_dprime);
  out["J"] = verdict(j_ok);

  VertexSet ku = r.s_prime | r.p_prime;
  if (ku.empty()) {
    out["K"] = Verdict::kNotApplicable;
  } else {
    InducedSubgraph sub = induced_subgraph(g, ku);
    if (has_isolated_vertex(sub.graph)) {
      out["K"] = Verdict::kFail;
    } else {
      int gt = gamma_t(sub.graph).value;
      out["K"] = verdict(gt == 2 * gamma(sub.graph).value && gt == 2 * r.s_prime.count());
    }
  }

  VertexSet lu = r.s_dprime | r.p_dprime;
  if (lu.empty()) {
    out["L"] = Verdict::kNotApplicable;
  } else {
    InducedSubgraph sub = induced_subgraph(g, lu);
    if (has_isolated_vertex(sub.graph)) {
      out["L"] = Verdict::kFail;
    } else {
      out["L"] = verdict(gamma_t(sub.graph).value == r.s_dprime.count());
    }
  }

  if (is_k2(h)) {
    out["M"] = Verdict::kNotApplicable;
  } else {
    out["M"] = verdict(r.s_prime.empty());
  }
  return out;
}

bool theorem3_rhs(const Graph& g, const Graph& h) {
  if (g.vertex_count() < 2 || !is_connected(g))
    throw HypothesisError("G must be a nontrivial connected graph");
  if (h.vertex_count() < 2 || !is_connected(h))
    throw HypothesisError("H must be a nontrivial connected graph");
  if (gamma_t(h).value != 2) throw HypothesisError("gamma_t(H) = 2 required");
  if (is_k2(g) && gamma(h).value == 1) return true;
  return is_k2(h) && classify(g).in_any();
}

bool equality_holds(const Graph& g, const Graph& h) {
  if (has_isolated_vertex(g) || has_isolated_vertex(h))
    throw IsolatedVertexError("both factors must be free of isolated vertices");
  return gamma_t(g).value == gamma_t(cartesian_product(g, h).product).value;
}

VertexSet build_equality_tdset(const Graph& g) {
  FamilyClassification c = classify(g);
  int n = g.vertex_count();
  VertexSet out(2 * n);
  auto put = [&](const VertexSet& set, int fiber) {
    for (int v : set) out.add(v * 2 + fiber);
  };
  if (c.f1) {
    put(c.f1->dominating_set, 0);
    put(c.f1->dominating_set, 1);
  } else if (c.f2) {
    put(c.f2->d1, 0);
    put(c.f2->d2, 1);
  } else if (c.f3) {
    put(c.f3->f1_part.dominating_set | c.f3->f2_part.d1, 0);
    put(c.f3->f1_part.dominating_set | c.f3->f2_part.d2, 1);
  } else {
    throw NotInFamiliesError("G lies in none of F1, F2, F3");
  }
  return out;
}

}  // namespace tdq
