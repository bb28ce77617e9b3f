#include "slee/walks.hpp"

#include <algorithm>

namespace slee {

namespace {

void check_enum_caps(const Graph& g, int k) {
  if (g.order() > kWalkEnumMaxOrder)
    throw Error(Errc::cap_exceeded,
                "walk enumeration capped at order " +
                    std::to_string(kWalkEnumMaxOrder));
  if (k < 0)
    throw Error(Errc::invalid_parameter, "walk length must be >= 0");
  if (k > kWalkEnumMaxDepth)
    throw Error(Errc::cap_exceeded, "walk enumeration capped at length " +
                                        std::to_string(kWalkEnumMaxDepth));
}

void check_vertex(const Graph& g, int v, const char* name) {
  if (v < 0 || v >= g.order())
    throw Error(Errc::vertex_out_of_range,
                std::string(name) + " = " + std::to_string(v) +
                    " out of range [0, " + std::to_string(g.order()) + ")");
}

void enumerate_rec(const Graph& g, int y, int k, SemiEdgeWalk& walk,
                   std::vector<SemiEdgeWalk>& out) {
  const int at = walk.vertices.back();
  if (static_cast<int>(walk.edges.size()) == k) {
    if (at == y) out.push_back(walk);
    return;
  }
  for (int z : g.neighbors(at)) {
    const std::pair<int, int> e{std::min(at, z), std::max(at, z)};
    walk.edges.push_back(e);
    // stay on the current vertex, then cross the edge
    walk.vertices.push_back(at);
    enumerate_rec(g, y, k, walk, out);
    walk.vertices.back() = z;
    enumerate_rec(g, y, k, walk, out);
    walk.vertices.pop_back();
    walk.edges.pop_back();
  }
}

}  // namespace

std::vector<SemiEdgeWalk> enumerate_walks(const Graph& g, int x, int y, int k) {
  check_enum_caps(g, k);
  check_vertex(g, x, "x");
  check_vertex(g, y, "y");
  std::vector<SemiEdgeWalk> out;
  SemiEdgeWalk walk;
  walk.vertices.push_back(x);
  enumerate_rec(g, y, k, walk, out);
  return out;
}

namespace {

void count_rec(const Graph& g, int at, int depth, int k_max, int x,
               WalkCountTable& table) {
  ++table.counts(depth, x, at);
  if (depth == k_max) return;
  for (int z : g.neighbors(at)) {
    count_rec(g, at, depth + 1, k_max, x, table);
    count_rec(g, z, depth + 1, k_max, x, table);
  }
}

}  // namespace

std::uint64_t WalkCountTable::closed_total(int k) const {
  std::uint64_t total = 0;
  for (int x = 0; x < n_; ++x) total += counts(k, x, x);
  return total;
}

WalkCountTable count_walks_by_enumeration(const Graph& g, int k_max) {
  check_enum_caps(g, k_max);
  WalkCountTable table(g.order(), k_max);
  for (int x = 0; x < g.order(); ++x) count_rec(g, x, 0, k_max, x, table);
  return table;
}

IntMatrix walk_counts(const Graph& g, int k) {
  if (k < 0)
    throw Error(Errc::invalid_parameter, "walk_counts: k must be >= 0");
  return moment_table(g, k).power_entries.back();
}

BigInt closed_walks_through_edge(const Graph& g, int x, std::pair<int, int> e,
                                 int k) {
  check_vertex(g, x, "x");
  if (!g.has_edge(e.first, e.second))
    throw Error(Errc::missing_edge,
                "closed_walks_through_edge: edge {" + std::to_string(e.first) +
                    "," + std::to_string(e.second) + "} not in graph");
  // A closed walk avoids e exactly when it is a walk of G - e.
  const BigInt with = walk_counts(g, k).at(x, x);
  const BigInt without =
      walk_counts(remove_edge(g, e.first, e.second), k).at(x, x);
  return with - without;
}

int default_dominance_depth(int order) { return 2 * order * order; }

namespace {

DominanceVerdict compare_power_entries(const Graph& g, int row_v, int col_v,
                                       int row_u, int col_u, int k_max) {
  if (k_max < 0) k_max = default_dominance_depth(g.order());
  if (k_max < 1)
    throw Error(Errc::invalid_parameter, "dominance depth must be >= 1");

  DominanceVerdict verdict;
  verdict.depth_checked = k_max;
  const IntMatrix q = signless_laplacian_int(g);
  IntMatrix power = IntMatrix::identity(g.order());
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) power = power.multiply(q);
    const BigInt& cv = power.at(row_v, col_v);
    const BigInt& cu = power.at(row_u, col_u);
    if (cv > cu && !verdict.failure_k) verdict.failure_k = k;
    if (cv < cu && !verdict.first_strict_k) verdict.first_strict_k = k;
  }
  if (verdict.failure_k) {
    verdict.relation = Dominance::fails;
    verdict.first_strict_k.reset();
  } else if (verdict.first_strict_k) {
    verdict.relation = Dominance::strict;
  } else {
    verdict.relation = Dominance::weak;
  }
  return verdict;
}

}  // namespace

DominanceVerdict s_dominance(const Graph& g, int v, int u, int k_max) {
  check_vertex(g, v, "v");
  check_vertex(g, u, "u");
  return compare_power_entries(g, v, v, u, u, k_max);
}

DominanceVerdict s_dominance_pair(const Graph& g, int x, int v, int u,
                                  int k_max) {
  check_vertex(g, x, "x");
  check_vertex(g, v, "v");
  check_vertex(g, u, "u");
  return compare_power_entries(g, x, v, x, u, k_max);
}

}  // namespace slee
