#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdq/graph.hpp"
#include "tdq/solvers.hpp"

namespace tdq {

// F1: gamma_t(G) = 2*gamma(G). Witness: a minimum dominating set.
struct F1Witness {
  VertexSet dominating_set;
};

// F2: some minimum TD-set D splits into nonempty D1, D2 with
// D1 = V \ N(D2) and D2 = V \ N(D1).
struct F2Witness {
  VertexSet d, d1, d2;
};

// F3: V splits into V1, V2 with G[V1] in F1, G[V2] in F2 and additive
// gamma_t. Sub-witnesses are expressed in G's vertex labels.
struct F3Witness {
  VertexSet v1, v2;
  F1Witness f1_part;
  F2Witness f2_part;
};

struct FamilyClassification {
  std::optional<F1Witness> f1;
  std::optional<F2Witness> f2;
  std::optional<F3Witness> f3;
  bool in_any() const { return f1.has_value() || f2.has_value() || f3.has_value(); }
};

std::optional<F1Witness> in_f1(const Graph& g);
std::optional<F2Witness> in_f2(const Graph& g, std::size_t limit = 100000);
std::optional<F3Witness> in_f3(const Graph& g, int vertex_cap = 14,
                               std::size_t limit = 100000);
FamilyClassification classify(const Graph& g, int f3_vertex_cap = 14,
                              std::size_t limit = 100000);

enum class Verdict { kPass, kFail, kNotApplicable };
std::string to_string(Verdict v);

// Everything the Proposition-1 bookkeeping derives from one minimum TD-set D
// of G box H: the split of D by fiber multiplicity, its projections, their
// external neighborhoods, and the per-statement verdicts. Statement keys are
// "A".."M" plus "E'".
struct DecompositionReport {
  VertexSet d, d_prime, d_dprime;          // over V(G box H)
  std::vector<VertexSet> d_dprime_i;       // indexed by h = 0..|V(H)|-1
  VertexSet s, s_prime, s_dprime;          // over V(G)
  VertexSet p, p_prime, p_dprime;          // over V(G)
  std::vector<VertexSet> s_dprime_i;
  VertexSet t_prime;  // lexicographically least minimum total dominator of S'
  VertexSet x;        // S' union T' union S''
  std::map<std::string, Verdict> statements;
};

// Requires: G, H connected, gamma_t(H) = 2, gamma_t(G) = gamma_t(G box H)
// (HypothesisError otherwise) and D a minimum TD-set of the product
// (NotMinimumTdSetError otherwise).
DecompositionReport decompose_product_tdset(const Graph& g, const Graph& h,
                                            const VertexSet& d);

std::map<std::string, Verdict> check_proposition_statements(
    const DecompositionReport& report, const Graph& g, const Graph& h);

// Condition (i) G = K_2 and gamma(H) = 1, or (ii) H = K_2 and G in F1uF2uF3.
// Requires nontrivial connected factors with gamma_t(H) = 2.
bool theorem3_rhs(const Graph& g, const Graph& h);

// gamma_t(G) == gamma_t(G box H); requires both factors free of isolated
// vertices.
bool equality_holds(const Graph& g, const Graph& h);

// A TD-set of G box K_2 of size gamma_t(G), built from the family witness
// (F1: a minimum dominating set copied into both G-fibers; F2: D1 in one
// fiber, D2 in the other; F3: D' u D1'' and D' u D2''). NotInFamiliesError
// when G is in none of the families.
VertexSet build_equality_tdset(const Graph& g);

}  // namespace tdq
