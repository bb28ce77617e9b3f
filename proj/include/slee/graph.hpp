#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slee {

// Adjacency rows are 32-bit masks, so graph order is capped here.
inline constexpr int kMaxOrder = 32;

enum class Errc {
  order_out_of_range,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  missing_edge,
  parse_error,
  cap_exceeded,
  invalid_parameter,
  no_convergence,
  precondition_failed,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
// Mutating members validate and throw; the free functions below give the
// pure copy-on-edit form used throughout the library.
class Graph {
public:
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept;  // number of edges

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::uint32_t neighbor_mask(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;      // u < v, lexicographic
  std::vector<std::pair<int, int>> non_edges() const;  // complement, same order

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

private:
  void check_vertex(int v) const;

  int n_;
  std::vector<std::uint32_t> adj_;
};

Graph empty_graph(int n);
Graph add_edge(Graph g, int u, int v);
Graph remove_edge(Graph g, int u, int v);

// graph6 interchange (McKay convention, no ">>graph6<<" header).
// The writer emits the canonical form: zero padding bits, minimal length.
// The parser is strict: bad header, short body, trailing bytes and nonzero
// padding are all rejected.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

struct StructuralSummary {
  bool connected = false;
  std::optional<int> diameter;     // nullopt when disconnected
  std::vector<int> cut_vertices;   // ascending
  std::vector<int> eccentricities; // -1 marks infinite (disconnected graph)
};

StructuralSummary structural_summary(const Graph& g);

// Distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Exact isomorphism test by degree-pruned backtracking. Intended for small
// orders (tie sets, family members); order mismatch returns false.
bool are_isomorphic(const Graph& a, const Graph& b);

// Identify vertex x of g with vertex y of h. Vertices of g keep their
// labels; vertices z of h other than y become order(g) + z, minus one when
// z > y. Edge counts add exactly.
Graph coalescence(const Graph& g, int x, const Graph& h, int y);

// Hang a path of m new vertices off x: x - n - n+1 - ... - n+m-1.
// m = 0 returns g unchanged.
Graph attach_pendent_path(const Graph& g, int x, int m);

}  // namespace slee
