#include <doctest.h>

#include "tdq/gn_family.hpp"
#include "tdq/graph6.hpp"
#include "tdq/isomorphism.hpp"

using namespace tdq;

TEST_CASE("isomorphism basics") {
  CHECK(is_isomorphic(build_gn(2).graph, path_graph(6)));
  CHECK_FALSE(is_isomorphic(complete_graph(3), path_graph(3)));
  CHECK(is_isomorphic(cycle_graph(4), cartesian_product(complete_graph(2), complete_graph(2)).product));

  // relabeled cycle
  Graph shuffled(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
  CHECK(is_isomorphic(shuffled, cycle_graph(5)));
  CHECK_FALSE(is_isomorphic(path_graph(5), cycle_graph(5)));
}

TEST_CASE("canonical form is invariant under relabeling") {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  Graph relabeled(6, {{3, 5}, {5, 0}, {0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(canonical_form(g) == canonical_form(relabeled));
}

TEST_CASE("cartesian product commutes up to isomorphism") {
  // exhaustive over connected factors of at most 4 vertices (16-vertex
  // products keep the brute-force canonicalizer honest and fast)
  std::vector<Graph> factors;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_connected(n)) factors.push_back(g);
  for (const Graph& g : factors)
    for (const Graph& h : factors) {
      Graph gh = cartesian_product(g, h).product;
      Graph hg = cartesian_product(h, g).product;
      CHECK(is_isomorphic(gh, hg));
    }
}
