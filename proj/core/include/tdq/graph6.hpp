#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "tdq/graph.hpp"

namespace tdq {

// graph6 text codec, one-byte size form only (n <= 62). Size byte n+63, then
// the upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... zero-padded to a
// multiple of 6, each group emitted as value+63.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// One representative per isomorphism class, deduplicated by canonical form,
// sorted by canonical adjacency bit string (equivalently by graph6 text).
std::vector<Graph> enumerate_connected(int n, int jobs = 0);
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs = 0);

struct GraphRecord {
  Graph graph = Graph(1);
  std::string g6;
  std::string source;  // "<file>:<line>" or "enumerated"
};

struct CorpusFilter {
  bool connected = false;
  bool no_isolated = false;
  bool nontrivial = false;  // drops K_1
  std::optional<int> gamma_t_equals;

  bool keep(const Graph& g) const;
};

// Streams records from graph6 text, one graph per line, applying the filter
// lazily in input order. An optional ">>graph6<<" header line is skipped.
// Parse failures carry the 1-based line number.
void for_each_record(std::istream& in, const std::string& source_name,
                     const CorpusFilter& filter,
                     const std::function<void(const GraphRecord&)>& fn);

std::vector<GraphRecord> load_corpus(const std::string& path, const CorpusFilter& filter);

// Connected graphs with min_n..max_n vertices, as records sorted by g6 line.
std::vector<GraphRecord> enumerate_corpus(int min_n, int max_n, const CorpusFilter& filter);

}  // namespace tdq
