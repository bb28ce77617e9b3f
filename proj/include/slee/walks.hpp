#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "slee/graph.hpp"
#include "slee/spectra.hpp"

namespace slee {

// Alternating sequence v_1 e_1 v_2 ... e_k v_{k+1}; consecutive vertices are
// endpoints of the edge between them, not necessarily distinct (a walk may
// "stay" on a vertex via an incident edge).
struct SemiEdgeWalk {
  std::vector<int> vertices;                  // k+1 entries
  std::vector<std::pair<int, int>> edges;     // k entries, stored u < v
};

// Hard caps on the exponential enumerator. Exceeding them is an error, not
// a silent truncation.
inline constexpr int kWalkEnumMaxOrder = 8;
inline constexpr int kWalkEnumMaxDepth = 8;

// Every semi-edge walk of length k from x to y, in deterministic order
// (incident edges ascending by far endpoint; stay before cross).
std::vector<SemiEdgeWalk> enumerate_walks(const Graph& g, int x, int y, int k);

// Leaf counts of the same recursion tree, without materializing the walks.
// counts(k, x, y) = number of length-k semi-edge walks from x to y.
class WalkCountTable {
public:
  WalkCountTable(int n, int k_max)
      : n_(n), k_max_(k_max),
        counts_(static_cast<std::size_t>(k_max + 1) *
                    static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                0) {}
  int order() const { return n_; }
  int k_max() const { return k_max_; }
  std::uint64_t counts(int k, int x, int y) const {
    return counts_[idx(k, x, y)];
  }
  std::uint64_t& counts(int k, int x, int y) { return counts_[idx(k, x, y)]; }
  std::uint64_t closed_total(int k) const;

private:
  std::size_t idx(int k, int x, int y) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) +
            static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
  }
  int n_;
  int k_max_;
  std::vector<std::uint64_t> counts_;
};

WalkCountTable count_walks_by_enumeration(const Graph& g, int k_max);

// Entry (x,y) = number of length-k semi-edge walks from x to y, as the
// exact integer power Q^k. Same multiply path as moment_table.
IntMatrix walk_counts(const Graph& g, int k);

// Closed length-k walks at x that use edge e at least once:
// (Q_G^k)_xx - (Q_{G-e}^k)_xx.
BigInt closed_walks_through_edge(const Graph& g, int x, std::pair<int, int> e,
                                 int k);

enum class Dominance { strict, weak, fails };

// Finite-depth certificate for the walk-count preorder. "strict" and "weak"
// mean counts for v stayed <= counts for u at every k <= depth_checked, with
// and without a strictly smaller index; they are evidence, not proofs.
struct DominanceVerdict {
  Dominance relation = Dominance::weak;
  std::optional<int> first_strict_k;  // least k with a strict inequality
  std::optional<int> failure_k;       // least k violating <=
  int depth_checked = 0;
};

// Depth used when the caller does not pick one.
int default_dominance_depth(int order);

// Compares (Q^k)_vv against (Q^k)_uu for k = 0..k_max. k_max < 0 selects
// the default depth 2n^2.
DominanceVerdict s_dominance(const Graph& g, int v, int u, int k_max = -1);

// Same, on the anchored pairs (Q^k)_xv vs (Q^k)_xu.
DominanceVerdict s_dominance_pair(const Graph& g, int x, int v, int u,
                                  int k_max = -1);

}  // namespace slee
