#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "tdq/gn_family.hpp"
#include "tdq/graph6.hpp"
#include "tdq/solvers.hpp"

using namespace tdq;

namespace {

Graph random_no_isolated(int n, int permille, std::mt19937& rng) {
  while (true) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng() % 1000) < permille) e.emplace_back(u, v);
    Graph g(n, e);
    if (!has_isolated_vertex(g)) return g;
  }
}

}  // namespace

TEST_CASE("gamma_t on small fixtures") {
  CHECK(gamma_t(complete_graph(2)).value == 2);
  CHECK(gamma_t(path_graph(3)).value == 2);
  CHECK(gamma_t(path_graph(4)).value == 2);
  CHECK(gamma_t(cycle_graph(6)).value == gamma_t_naive(cycle_graph(6)).value);
  CHECK(gamma_t(cycle_graph(6)).value == 4);
  for (int n = 2; n <= 6; ++n) CHECK(gamma_t(build_gn(n).graph).value == 2 * n);
  CHECK_THROWS_AS(gamma_t(Graph(1)), IsolatedVertexError);
  CHECK_THROWS_AS(gamma_t(disjoint_union(complete_graph(2), Graph(1))), IsolatedVertexError);
}

TEST_CASE("gamma_t of kK_2 is 2k") {
  for (int k = 1; k <= 5; ++k) CHECK(gamma_t(k_copies_k2(k)).value == 2 * k);
}

TEST_CASE("gamma on small fixtures") {
  for (int n = 1; n <= 6; ++n) CHECK(gamma(complete_graph(n)).value == 1);
  CHECK(gamma(path_graph(6)).value == gamma_naive(path_graph(6)).value);
  CHECK(gamma(path_graph(6)).value == 2);
  CHECK(gamma(k_copies_k2(2)).value == 2);
  CHECK(gamma(Graph(1)).value == 1);  // gamma is defined for every graph
}

TEST_CASE("rho_2 on small fixtures") {
  for (int n = 1; n <= 6; ++n) CHECK(rho_2(complete_graph(n)).value == 1);
  CHECK(rho_2(path_graph(6)).value == rho2_naive(path_graph(6)).value);
  CHECK(rho_2(path_graph(6)).value == 2);
  CHECK(rho_2(cycle_graph(6)).value == 2);
  CHECK(rho_2(path_graph(4)).value == 2);  // P_4 is a (rho, gamma_t)-graph
  CHECK(gamma_t(path_graph(4)).value == 2);
}

TEST_CASE("certificates satisfy their defining predicates and are lex-least") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = random_no_isolated(2 + static_cast<int>(rng() % 6), 300 + rng() % 500, rng);
    SolveResult t = gamma_t(g);
    CHECK(is_total_dominating(g, t.certificate));
    CHECK(t.certificate.count() == t.value);
    SolveResult naive = gamma_t_naive(g);
    CHECK(t.value == naive.value);
    CHECK(t.certificate == naive.certificate);  // both lexicographically least

    SolveResult d = gamma(g);
    CHECK(is_dominating(g, d.certificate));
    CHECK(d.certificate.count() == d.value);
    SolveResult dn = gamma_naive(g);
    CHECK(d.value == dn.value);
    CHECK(d.certificate == dn.certificate);

    SolveResult r = rho_2(g);
    SolveResult rn = rho2_naive(g);
    CHECK(r.value == rn.value);
    CHECK(r.certificate == rn.certificate);
    std::vector<int> centers = r.certificate.members();
    for (std::size_t i = 0; i < centers.size(); ++i)
      for (std::size_t j = i + 1; j < centers.size(); ++j)
        CHECK_FALSE(closed_neighborhood(g, centers[i])
                        .intersects(closed_neighborhood(g, centers[j])));
  }
}

TEST_CASE("solver agrees with the naive oracle on every connected graph up to 6 vertices") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      CHECK(gamma_t(g).value == gamma_t_naive(g).value);
      CHECK(gamma(g).value == gamma_naive(g).value);
      CHECK(rho_2(g).value == rho2_naive(g).value);
    }
}

TEST_CASE("classic inequalities hold across the small corpus") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      int gt = gamma_t(g).value, gd = gamma(g).value, r2 = rho_2(g).value;
      CHECK(2 <= gt);
      CHECK(gt <= 2 * gd);
      CHECK(gd <= gt);
      CHECK(r2 <= gd);
    }
}

TEST_CASE("all_min_td_sets enumerates exactly the optima, in bitmap order") {
  CHECK(all_min_td_sets(complete_graph(2)) == std::vector<VertexSet>{VertexSet::of(2, {0, 1})});
  CHECK(all_min_td_sets(path_graph(4)) == std::vector<VertexSet>{VertexSet::of(4, {1, 2})});

  // independent oracle: scan all 4-subsets of C_6
  Graph c6 = cycle_graph(6);
  std::vector<VertexSet> expected;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          VertexSet s = VertexSet::of(6, {a, b, c, d});
          if (is_total_dominating(c6, s)) expected.push_back(s);
        }
  std::sort(expected.begin(), expected.end(), VertexSet::lex_less);
  REQUIRE(expected.size() == 9);  // 3 rotations of {0,1,3,4} plus 6 runs {i..i+3}
  CHECK(all_min_td_sets(c6) == expected);

  CHECK_THROWS_AS(all_min_td_sets(c6, 3), LimitExceededError);
  CHECK_THROWS_AS(all_min_td_sets(Graph(1)), IsolatedVertexError);
}

TEST_CASE("all_min_td_sets matches brute force on random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_no_isolated(4 + static_cast<int>(rng() % 4), 300 + rng() % 400, rng);
    int n = g.vertex_count();
    int gt = gamma_t_naive(g).value;
    std::vector<VertexSet> expected;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != gt) continue;
      VertexSet s(n);
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.add(v);
      if (is_total_dominating(g, s)) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), VertexSet::lex_less);
    CHECK(all_min_td_sets(g) == expected);
  }
}

TEST_CASE("min_total_dominator covers an arbitrary target") {
  Graph c6 = cycle_graph(6);
  SolveResult r = min_total_dominator(c6, VertexSet::of(6, {0}));
  CHECK(r.value == 1);
  CHECK(r.certificate == VertexSet::of(6, {1}));  // lex-least of {1}, {5}
  CHECK(min_total_dominator(c6, VertexSet(6)).value == 0);
  CHECK(all_min_total_dominators(c6, VertexSet(6)) == std::vector<VertexSet>{VertexSet(6)});
}

TEST_CASE("naive guards") {
  CHECK_THROWS_AS(gamma_t_naive(cartesian_product(path_graph(5), path_graph(5)).product),
                  TooLargeError);
}
