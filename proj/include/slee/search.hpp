#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "slee/families.hpp"
#include "slee/graph.hpp"
#include "slee/walks.hpp"

namespace slee {

using ordered_json = nlohmann::ordered_json;

// Fixed-width significand formatting shared by every report and the CLI
// (12 significant digits: below solver tolerance, above comparison noise).
std::string format_real(double v);

// Two SLEE values within this relative distance count as tied.
inline constexpr double kSleeTieTolerance = 1e-10;
// Margin demanded of every "strictly larger" assertion.
inline constexpr double kSleeStrictMargin = 1e-9;
// Labeled sweeps enumerate 2^(n(n-1)/2) graphs; n = 7 is the last feasible.
inline constexpr int kMaxSweepOrder = 7;

struct ClassFilter {
  enum class Kind { diameter_equals, cut_vertices_equals, all_connected };

  Kind kind = Kind::all_connected;
  int value = 0;

  static ClassFilter diameter(int d) { return {Kind::diameter_equals, d}; }
  static ClassFilter cut_vertices(int r) {
    return {Kind::cut_vertices_equals, r};
  }
  static ClassFilter all_connected() { return {Kind::all_connected, 0}; }

  void validate_for(int n) const;
  bool passes(const StructuralSummary& summary) const;
  std::string describe() const;
};

struct SearchReport {
  int n = 0;
  std::string filter;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t class_size = 0;
  std::optional<double> max_slee;
  std::vector<std::string> tie_set;  // graph6, ascending
  int iso_classes = 0;
  std::optional<bool> matched_prediction;

  ordered_json to_json() const;
};

// Exhaustive scan of every labeled graph on n vertices. Keeps the connected,
// filter-passing ones, maximizes SLEE (eigenvalue route), and collects the
// tie set. workers <= 0 selects the hardware thread count; the report is
// identical for every worker count.
SearchReport sweep(int n, const ClassFilter& filter,
                   const std::optional<Graph>& predicted = std::nullopt,
                   int workers = 0);

// Diameter theorem at desk scale: sweep the diameter-d class against
// h_extremal(n, d). Requires n > 4, 2 < d < n-1, n <= 7.
SearchReport verify_theorem_diameter(int n, int d, int workers = 0);

// Cut-vertex theorem: sweep the r-cut-vertex class against g_extremal(n, r).
// Requires 1 <= r <= n-3, n <= 7.
SearchReport verify_theorem_cut(int n, int r, int workers = 0);

ordered_json dominance_to_json(const DominanceVerdict& verdict);

struct EdgeShiftReport {
  int n = 0;
  int v = -1;
  int u = -1;
  std::vector<int> ws;
  bool hypotheses_met = false;
  DominanceVerdict base_verdict;                 // (G;v) vs (G;u)
  std::vector<DominanceVerdict> pair_verdicts;   // (G;w_i,v) vs (G;w_i,u)
  std::optional<double> slee_with_v_edges;
  std::optional<double> slee_with_u_edges;
  std::optional<double> gap;
  bool passed = false;  // vacuously true when hypotheses are unmet

  ordered_json to_json() const;
};

// Edge-shifting comparison: with E_v = {vw_i} and E_u = {uw_i} disjoint
// from E(G), checks the dominance hypotheses to depth k_max and then the
// numeric conclusion SLEE(G+E_v) < SLEE(G+E_u).
EdgeShiftReport verify_edge_shift(const Graph& g, int v, int u,
                                  const std::vector<int>& ws, int k_max = -1);

struct RelocationReport {
  int n = 0;
  int s = 0;
  bool degenerate = false;  // y had no neighbors to move
  std::string graph_before;  // graph6
  std::string graph_after;
  double slee_before = 0.0;
  double slee_after = 0.0;
  double gap = 0.0;
  int cut_before = 0;
  int cut_after = 0;
  bool order_preserved = false;
  bool passed = false;

  ordered_json to_json() const;
};

// Pendent-path relocation: builds G = (H1(y) . P_s(y0))(x) . H2(u), moves
// the edges at y (other than xy) onto the second vertex of the supplied
// path u, x_1, ..., x_{s+1} of H2, and checks that SLEE strictly grows.
// h2_path l's first vertex is u; its length fixes s = |h2_path| - 2.
RelocationReport verify_pendant_relocation(const Graph& h1, int x, int y,
                                           const Graph& h2,
                                           const std::vector<int>& h2_path);

// Twenty fixed clique-plus-path instances used by the CLI and the
// acceptance suite.
std::vector<RelocationReport> relocation_battery();

struct DescentReport {
  int n = 0;
  int d = 0;
  int j = 0;
  bool vacuous = false;  // j == 1: nothing to descend from
  int members = 0;
  int members_in_lower_family = 0;
  double extremal_slee = 0.0;
  std::optional<double> max_lower_slee;
  std::vector<std::string> violations;  // graph6 of members breaking a bound
  bool passed = false;

  ordered_json to_json() const;
};

// Family descent: every H_{d,j} member not already in H_{d,j-1} (directly
// or after mirroring the path) must fall strictly below the best H_{d,j-1}
// member; every member must sit at or below SLEE(h_extremal(n,d)), with
// ties only for graphs isomorphic to it.
DescentReport verify_h_descent(int n, int d, int j);

struct NeighborBoundReport {
  int n = 0;
  int diameter = 0;
  std::vector<int> diametral_path;
  int max_observed = 0;
  bool passed = false;

  ordered_json to_json() const;
};

// Picks the lexicographically first diametral path and checks that every
// off-path vertex has at most 3 neighbors on it.
NeighborBoundReport verify_diametral_neighbor_bound(const Graph& g);

// Labeled graph on n vertices from an edge-slot mask; slots run in graph6
// bit order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_edge_mask(int n, std::uint32_t mask);

struct MomentWalkReport {
  int n_max = 0;
  int k_max = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t trace_failures = 0;
  std::uint64_t entry_failures = 0;
  std::vector<std::string> failures;  // graph6 of offending graphs
  bool passed = false;

  ordered_json to_json() const;
};

// Exact agreement between the walk enumerator and the powers of Q, checked
// at trace and entry level on every connected labeled graph of order
// <= n_max and every length <= k_max.
MomentWalkReport verify_moment_walk(int n_max, int k_max);

struct NeighborBoundSweepReport {
  int n_max = 0;
  std::uint64_t graphs_checked = 0;
  int max_observed = 0;
  std::vector<std::string> failures;
  bool passed = false;

  ordered_json to_json() const;
};

// Diametral neighbor bound over every connected labeled graph of order
// <= n_max.
NeighborBoundSweepReport verify_neighbor_bound_all(int n_max);

struct EdgeAdditionReport {
  int n_max = 0;
  int samples = 0;
  unsigned seed = 0;
  double min_gap = 0.0;
  std::vector<std::string> failures;  // graph6 of any non-increasing instance
  bool passed = false;

  ordered_json to_json() const;
};

// SLEE strictly grows under edge addition: random connected graphs of
// order 2..n_max, one random absent edge each, deterministic in the seed.
EdgeAdditionReport verify_edge_addition(int n_max, int samples,
                                        unsigned seed);

}  // namespace slee
