#include "tdq/graph6.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <thread>

#include "tdq/solvers.hpp"

namespace tdq {
namespace {

constexpr int kMaxEnumVertices = 7;

std::size_t triangle_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

// --- fast mask-level helpers for enumeration (n <= 7) ---

void mask_to_adj(int n, std::uint32_t mask, std::uint8_t* adj) {
  std::fill(adj, adj + n, 0);
  int p = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++p)
      if ((mask >> p) & 1) {
        adj[u] |= std::uint8_t(1) << v;
        adj[v] |= std::uint8_t(1) << u;
      }
}

bool mask_connected(int n, const std::uint8_t* adj) {
  std::uint8_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= adj[v];
    frontier = next & static_cast<std::uint8_t>(~seen);
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

// Is the identity labeling's bit string minimal over all permutations?
// DFS with prefix pruning; aborts as soon as any smaller string is possible.
class MinMaskCheck {
 public:
  MinMaskCheck(int n, std::uint32_t mask, const std::uint8_t* adj) : n_(n), adj_(adj) {
    for (std::size_t p = 0; p < triangle_bits(n); ++p) id_[p] = (mask >> p) & 1;
  }

  bool is_canonical() { return !smaller(0, 0); }

 private:
  bool smaller(int k, int pos) {
    if (k == n_) return false;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1) continue;
      int cmp = 0;
      for (int i = 0; i < k && cmp == 0; ++i) {
        int bit = (adj_[v] >> perm_[i]) & 1;
        if (bit != id_[pos + i]) cmp = bit < id_[pos + i] ? -1 : 1;
      }
      if (cmp < 0) return true;
      if (cmp > 0) continue;
      perm_[k] = v;
      used_ |= std::uint8_t(1) << v;
      bool found = smaller(k + 1, pos + k);
      used_ &= static_cast<std::uint8_t>(~(std::uint8_t(1) << v));
      if (found) return true;
    }
    return false;
  }

  int n_;
  const std::uint8_t* adj_;
  std::uint8_t id_[24] = {};
  int perm_[8] = {};
  std::uint8_t used_ = 0;
};

Graph mask_to_graph(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int p = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++p)
      if ((mask >> p) & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<std::uint32_t> canonical_masks_in_range(int n, bool connected_only,
                                                    std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  std::size_t full = triangle_bits(n);
  std::uint8_t adj[8];
  for (std::uint32_t mask = lo; mask < hi; ++mask) {
    // A canonical string starts with a 0 bit whenever any non-edge exists.
    if ((mask & 1) && std::popcount(mask) < static_cast<int>(full)) continue;
    mask_to_adj(n, mask, adj);
    if (connected_only && !mask_connected(n, adj)) continue;
    if (!MinMaskCheck(n, mask, adj).is_canonical()) continue;
    out.push_back(mask);
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 line");
  unsigned first = static_cast<unsigned char>(line[0]);
  if (first == 126) throw ParseError("multi-byte graph6 size form is not supported (n > 62)");
  if (first < 63 || first > 126) throw ParseError("bad graph6 byte (outside 63..126)");
  int n = static_cast<int>(first) - 63;
  if (n == 0) throw ParseError("graph6 with zero vertices");
  std::size_t bits = triangle_bits(n);
  std::size_t need = 1 + (bits + 5) / 6;
  if (line.size() != need)
    throw ParseError("bad graph6 length: expected " + std::to_string(need) + " bytes, got " +
                     std::to_string(line.size()));
  std::vector<std::pair<int, int>> edges;
  std::size_t p = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++p) {
      unsigned byte = static_cast<unsigned char>(line[1 + p / 6]);
      if (byte < 63 || byte > 126) throw ParseError("bad graph6 byte (outside 63..126)");
      unsigned group = byte - 63;
      if ((group >> (5 - p % 6)) & 1) edges.emplace_back(u, v);
    }
  // Remaining bytes were validated by the length check; padding bits are ignored.
  for (std::size_t q = (p + 5) / 6; q < need - 1; ++q) {
    unsigned byte = static_cast<unsigned char>(line[1 + q]);
    if (byte < 63 || byte > 126) throw ParseError("bad graph6 byte (outside 63..126)");
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw TooLargeError("graph6 one-byte size form requires n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  unsigned group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs) {
  if (n < 1 || n > kMaxEnumVertices)
    throw TooLargeError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumVertices));
  if (n == 1) return {Graph(1)};
  std::uint32_t space = std::uint32_t{1} << triangle_bits(n);
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (space < (1u << 15)) jobs = 1;

  std::vector<std::vector<std::uint32_t>> parts(jobs);
  if (jobs == 1) {
    parts[0] = canonical_masks_in_range(n, connected_only, 0, space);
  } else {
    std::vector<std::thread> workers;
    std::uint32_t chunk = space / jobs + 1;
    for (int t = 0; t < jobs; ++t) {
      std::uint32_t lo = t * chunk, hi = std::min(space, lo + chunk);
      workers.emplace_back([&, t, lo, hi] {
        parts[t] = canonical_masks_in_range(n, connected_only, lo, hi);
      });
    }
    for (auto& w : workers) w.join();
  }
  std::vector<Graph> out;
  for (const auto& part : parts)
    for (std::uint32_t mask : part) out.push_back(mask_to_graph(n, mask));
  return out;
}

std::vector<Graph> enumerate_connected(int n, int jobs) {
  return enumerate_graphs(n, /*connected_only=*/true, jobs);
}

bool CorpusFilter::keep(const Graph& g) const {
  if (nontrivial && g.vertex_count() < 2) return false;
  if (no_isolated && has_isolated_vertex(g)) return false;
  if (connected && !is_connected(g)) return false;
  if (gamma_t_equals) {
    if (has_isolated_vertex(g)) return false;
    if (gamma_t(g).value != *gamma_t_equals) return false;
  }
  return true;
}

void for_each_record(std::istream& in, const std::string& source_name,
                     const CorpusFilter& filter,
                     const std::function<void(const GraphRecord&)>& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    if (lineno == 1 && sv.starts_with(">>graph6<<")) {
      sv.remove_prefix(10);
      if (sv.empty()) continue;
    }
    if (sv.empty() || (sv.size() == 1 && sv[0] == '\r')) continue;
    Graph g(1);
    try {
      g = parse_graph6(sv);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    if (!filter.keep(g)) continue;
    fn({g, write_graph6(g), source_name + ":" + std::to_string(lineno)});
  }
}

std::vector<GraphRecord> load_corpus(const std::string& path, const CorpusFilter& filter) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::vector<GraphRecord> out;
  for_each_record(in, path, filter, [&](const GraphRecord& r) { out.push_back(r); });
  return out;
}

std::vector<GraphRecord> enumerate_corpus(int min_n, int max_n, const CorpusFilter& filter) {
  std::vector<GraphRecord> out;
  for (int n = std::max(1, min_n); n <= max_n; ++n)
    for (const Graph& g : enumerate_connected(n))
      if (filter.keep(g)) out.push_back({g, write_graph6(g), "enumerated"});
  return out;
}

}  // namespace tdq
