#pragma once

#include <cstdint>
#include <vector>

#include "tdq/graph.hpp"

namespace tdq {

// Upper-triangle adjacency bits of g in column-major order
// x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ... (same order graph6 uses).
std::vector<std::uint8_t> adjacency_bits(const Graph& g);

// The lexicographically smallest adjacency bit string over all vertex
// relabelings, found by permutation search with prefix pruning. Brute force by
// design: meant for graphs of at most ~16 vertices.
std::vector<std::uint8_t> canonical_form(const Graph& g);

// Relabeling of g that realizes canonical_form(g); new_of_old[v] is the slot
// of original vertex v.
std::vector<int> canonical_labeling(const Graph& g);

// Canonical form equality with an (n, edge count, degree sequence) pre-filter.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace tdq
