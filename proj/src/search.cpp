#include "slee/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <random>
#include <thread>

#include "slee/spectra.hpp"

namespace slee {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void ClassFilter::validate_for(int n) const {
  switch (kind) {
    case Kind::all_connected:
      return;
    case Kind::diameter_equals: {
      const int lo = (n == 1) ? 0 : 1;
      if (value < lo || value > n - 1)
        throw Error(Errc::invalid_parameter,
                    "diameter " + std::to_string(value) +
                        " outside legal range [" + std::to_string(lo) + ", " +
                        std::to_string(n - 1) + "] for n = " +
                        std::to_string(n));
      return;
    }
    case Kind::cut_vertices_equals: {
      const int hi = std::max(0, n - 2);
      if (value < 0 || value > hi)
        throw Error(Errc::invalid_parameter,
                    "cut-vertex count " + std::to_string(value) +
                        " outside legal range [0, " + std::to_string(hi) +
                        "] for n = " + std::to_string(n));
      return;
    }
  }
}

bool ClassFilter::passes(const StructuralSummary& summary) const {
  if (!summary.connected) return false;
  switch (kind) {
    case Kind::all_connected:
      return true;
    case Kind::diameter_equals:
      return summary.diameter && *summary.diameter == value;
    case Kind::cut_vertices_equals:
      return static_cast<int>(summary.cut_vertices.size()) == value;
  }
  return false;
}

std::string ClassFilter::describe() const {
  switch (kind) {
    case Kind::all_connected:
      return "all_connected";
    case Kind::diameter_equals:
      return "diameter=" + std::to_string(value);
    case Kind::cut_vertices_equals:
      return "cut_vertices=" + std::to_string(value);
  }
  return "?";
}

ordered_json SearchReport::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["filter"] = filter;
  j["graphs_scanned"] = graphs_scanned;
  j["class_size"] = class_size;
  j["max_slee"] = max_slee ? ordered_json(format_real(*max_slee))
                           : ordered_json(nullptr);
  j["tie_set"] = tie_set;
  j["iso_classes"] = iso_classes;
  j["matched_prediction"] = matched_prediction
                                ? ordered_json(*matched_prediction)
                                : ordered_json(nullptr);
  return j;
}

Graph graph_from_edge_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int slot = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++slot)
      if ((mask >> slot) & 1u) g.add_edge(i, j);
  return g;
}

namespace {

struct SweepShard {
  std::uint64_t class_size = 0;
  double max_slee = -1.0;
  std::vector<std::pair<double, std::uint32_t>> candidates;  // (slee, mask)

  void offer(double slee, std::uint32_t mask) {
    if (slee > max_slee) {
      max_slee = slee;
      std::erase_if(candidates, [&](const auto& c) {
        return c.first < max_slee * (1.0 - kSleeTieTolerance);
      });
    }
    if (slee >= max_slee * (1.0 - kSleeTieTolerance))
      candidates.emplace_back(slee, mask);
  }
};

void run_shard(int n, const ClassFilter& filter, std::uint64_t lo,
               std::uint64_t hi, SweepShard& shard) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const Graph g = graph_from_edge_mask(n, static_cast<std::uint32_t>(mask));
    const StructuralSummary summary = structural_summary(g);
    if (!filter.passes(summary)) continue;
    ++shard.class_size;
    shard.offer(slee_eigen(g), static_cast<std::uint32_t>(mask));
  }
}

}  // namespace

SearchReport sweep(int n, const ClassFilter& filter,
                   const std::optional<Graph>& predicted, int workers) {
  if (n < 1 || n > kMaxSweepOrder)
    throw Error(Errc::invalid_parameter,
                "sweep order must be in [1, " +
                    std::to_string(kMaxSweepOrder) + "], got " +
                    std::to_string(n));
  filter.validate_for(n);

  const int m = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t(1) << m;
  if (workers <= 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));

  std::vector<SweepShard> shards(static_cast<std::size_t>(workers));
  {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(
        static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total / workers;
    const std::uint64_t rem = total % workers;
    std::uint64_t lo = 0;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t hi =
          lo + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
      pool.emplace_back([&, w, lo, hi]() {
        try {
          run_shard(n, filter, lo, hi,
                    shards[static_cast<std::size_t>(w)]);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
      lo = hi;
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SearchReport report;
  report.n = n;
  report.filter = filter.describe();
  report.graphs_scanned = total;
  double max_slee = -1.0;
  for (const auto& shard : shards) {
    report.class_size += shard.class_size;
    max_slee = std::max(max_slee, shard.max_slee);
  }

  std::vector<Graph> ties;
  if (report.class_size > 0) {
    report.max_slee = max_slee;
    std::vector<std::uint32_t> masks;
    for (const auto& shard : shards)
      for (const auto& [slee, mask] : shard.candidates)
        if (slee >= max_slee * (1.0 - kSleeTieTolerance))
          masks.push_back(mask);
    for (std::uint32_t mask : masks) {
      Graph g = graph_from_edge_mask(n, mask);
      // Re-validate: every reported tie member must pass the filter.
      if (!filter.passes(structural_summary(g)))
        throw Error(Errc::precondition_failed,
                    "sweep: tie member failed filter re-validation");
      ties.push_back(std::move(g));
    }
    std::sort(ties.begin(), ties.end(),
              [](const Graph& a, const Graph& b) {
                return write_graph6(a) < write_graph6(b);
              });
    for (const Graph& g : ties) report.tie_set.push_back(write_graph6(g));
  }

  std::vector<const Graph*> reps;
  for (const Graph& g : ties) {
    bool known = false;
    for (const Graph* rep : reps)
      if (are_isomorphic(*rep, g)) {
        known = true;
        break;
      }
    if (!known) reps.push_back(&g);
  }
  report.iso_classes = static_cast<int>(reps.size());

  if (predicted) {
    bool matched = !ties.empty();
    for (const Graph& g : ties)
      if (!are_isomorphic(g, *predicted)) {
        matched = false;
        break;
      }
    report.matched_prediction = matched;
  }
  return report;
}

SearchReport verify_theorem_diameter(int n, int d, int workers) {
  if (n <= 4 || n > kMaxSweepOrder)
    throw Error(Errc::invalid_parameter,
                "theorem-diameter requires 4 < n <= " +
                    std::to_string(kMaxSweepOrder) + ", got n = " +
                    std::to_string(n));
  if (!(2 < d && d < n - 1))
    throw Error(Errc::invalid_parameter,
                "theorem-diameter requires 2 < d < n-1, got d = " +
                    std::to_string(d) + " with n = " + std::to_string(n));
  return sweep(n, ClassFilter::diameter(d), h_extremal(n, d), workers);
}

SearchReport verify_theorem_cut(int n, int r, int workers) {
  if (n < 4 || n > kMaxSweepOrder)
    throw Error(Errc::invalid_parameter,
                "theorem-cut requires 4 <= n <= " +
                    std::to_string(kMaxSweepOrder) + ", got n = " +
                    std::to_string(n));
  if (!(1 <= r && r <= n - 3))
    throw Error(Errc::invalid_parameter,
                "theorem-cut requires 1 <= r <= n-3, got r = " +
                    std::to_string(r) + " with n = " + std::to_string(n));
  return sweep(n, ClassFilter::cut_vertices(r), g_extremal(n, r), workers);
}

ordered_json dominance_to_json(const DominanceVerdict& verdict) {
  ordered_json j;
  switch (verdict.relation) {
    case Dominance::strict: j["relation"] = "strict"; break;
    case Dominance::weak: j["relation"] = "weak"; break;
    case Dominance::fails: j["relation"] = "fails"; break;
  }
  j["first_strict_k"] = verdict.first_strict_k
                            ? ordered_json(*verdict.first_strict_k)
                            : ordered_json(nullptr);
  j["failure_k"] = verdict.failure_k ? ordered_json(*verdict.failure_k)
                                     : ordered_json(nullptr);
  j["depth_checked"] = verdict.depth_checked;
  return j;
}

ordered_json EdgeShiftReport::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["v"] = v;
  j["u"] = u;
  j["ws"] = ws;
  j["hypotheses_met"] = hypotheses_met;
  j["base_verdict"] = dominance_to_json(base_verdict);
  ordered_json pairs = ordered_json::array();
  for (const auto& verdict : pair_verdicts)
    pairs.push_back(dominance_to_json(verdict));
  j["pair_verdicts"] = pairs;
  j["slee_with_v_edges"] = slee_with_v_edges
                               ? ordered_json(format_real(*slee_with_v_edges))
                               : ordered_json(nullptr);
  j["slee_with_u_edges"] = slee_with_u_edges
                               ? ordered_json(format_real(*slee_with_u_edges))
                               : ordered_json(nullptr);
  j["gap"] = gap ? ordered_json(format_real(*gap)) : ordered_json(nullptr);
  j["passed"] = passed;
  return j;
}

EdgeShiftReport verify_edge_shift(const Graph& g, int v, int u,
                                  const std::vector<int>& ws, int k_max) {
  const int n = g.order();
  auto check = [&](int z, const char* name) {
    if (z < 0 || z >= n)
      throw Error(Errc::vertex_out_of_range,
                  std::string(name) + " out of range");
  };
  check(v, "v");
  check(u, "u");
  if (v == u)
    throw Error(Errc::invalid_parameter, "edge shift requires v != u");
  if (ws.empty())
    throw Error(Errc::invalid_parameter,
                "edge shift requires at least one w vertex");
  for (int w : ws) {
    check(w, "w");
    if (w == v || w == u)
      throw Error(Errc::invalid_parameter,
                  "w vertices must differ from v and u");
    if (g.has_edge(v, w))
      throw Error(Errc::precondition_failed,
                  "edge {" + std::to_string(v) + "," + std::to_string(w) +
                      "} must be absent");
    if (g.has_edge(u, w))
      throw Error(Errc::precondition_failed,
                  "edge {" + std::to_string(u) + "," + std::to_string(w) +
                      "} must be absent");
  }
  std::vector<int> sorted_ws = ws;
  std::sort(sorted_ws.begin(), sorted_ws.end());
  if (std::adjacent_find(sorted_ws.begin(), sorted_ws.end()) !=
      sorted_ws.end())
    throw Error(Errc::invalid_parameter, "duplicate w vertex");

  EdgeShiftReport report;
  report.n = n;
  report.v = v;
  report.u = u;
  report.ws = ws;
  report.base_verdict = s_dominance(g, v, u, k_max);
  bool met = report.base_verdict.relation == Dominance::strict;
  for (int w : ws) {
    report.pair_verdicts.push_back(s_dominance_pair(g, w, v, u, k_max));
    if (report.pair_verdicts.back().relation == Dominance::fails) met = false;
  }
  report.hypotheses_met = met;
  if (!met) {
    report.passed = true;  // nothing asserted
    return report;
  }

  Graph gv = g, gu = g;
  for (int w : ws) {
    gv.add_edge(v, w);
    gu.add_edge(u, w);
  }
  report.slee_with_v_edges = slee_eigen(gv);
  report.slee_with_u_edges = slee_eigen(gu);
  report.gap = *report.slee_with_u_edges - *report.slee_with_v_edges;
  report.passed = *report.gap > kSleeStrictMargin;
  return report;
}

ordered_json RelocationReport::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["s"] = s;
  j["degenerate"] = degenerate;
  j["graph_before"] = graph_before;
  j["graph_after"] = graph_after;
  j["slee_before"] = format_real(slee_before);
  j["slee_after"] = format_real(slee_after);
  j["gap"] = format_real(gap);
  j["cut_before"] = cut_before;
  j["cut_after"] = cut_after;
  j["order_preserved"] = order_preserved;
  j["passed"] = passed;
  return j;
}

RelocationReport verify_pendant_relocation(const Graph& h1, int x, int y,
                                           const Graph& h2,
                                           const std::vector<int>& h2_path) {
  if (x == y)
    throw Error(Errc::invalid_parameter, "relocation requires x != y");
  if (!h1.has_edge(x, y))
    throw Error(Errc::precondition_failed, "xy must be an edge of H1");
  if (h2_path.size() < 3)
    throw Error(Errc::precondition_failed,
                "H2 path must have at least 3 vertices (u, x1, x2)");
  for (std::size_t i = 0; i < h2_path.size(); ++i) {
    const int z = h2_path[i];
    if (z < 0 || z >= h2.order())
      throw Error(Errc::vertex_out_of_range, "H2 path vertex out of range");
    for (std::size_t t = i + 1; t < h2_path.size(); ++t)
      if (h2_path[t] == z)
        throw Error(Errc::precondition_failed,
                    "H2 path vertices must be distinct");
    if (i + 1 < h2_path.size() && !h2.has_edge(z, h2_path[i + 1]))
      throw Error(Errc::precondition_failed,
                  "H2 lacks the required path: {" + std::to_string(z) + "," +
                      std::to_string(h2_path[i + 1]) + "} missing");
  }

  const int s = static_cast<int>(h2_path.size()) - 2;
  const int u = h2_path[0];
  const int x1 = h2_path[1];

  // H1 keeps its labels through both coalescences; H2's vertex z lands at
  // |H1| + s - 1 + z, minus one when z > u.
  const Graph stem = coalescence(h1, y, path(s), 0);
  const Graph g = coalescence(stem, x, h2, u);
  const int x1_in_g = stem.order() + x1 - (x1 > u ? 1 : 0);

  std::vector<int> targets;
  for (int w : h1.neighbors(y))
    if (w != x) targets.push_back(w);

  Graph relocated = g;
  for (int w : targets) {
    relocated.remove_edge(y, w);
    relocated.add_edge(x1_in_g, w);
  }

  RelocationReport report;
  report.n = g.order();
  report.s = s;
  report.degenerate = targets.empty();
  report.graph_before = write_graph6(g);
  report.graph_after = write_graph6(relocated);
  report.slee_before = slee_eigen(g);
  report.slee_after = slee_eigen(relocated);
  report.gap = report.slee_after - report.slee_before;
  report.cut_before =
      static_cast<int>(structural_summary(g).cut_vertices.size());
  report.cut_after =
      static_cast<int>(structural_summary(relocated).cut_vertices.size());
  report.order_preserved = g.order() == relocated.order();
  report.passed = report.order_preserved &&
                  (report.degenerate ? report.gap == 0.0
                                     : report.gap > kSleeStrictMargin);
  return report;
}

std::vector<RelocationReport> relocation_battery() {
  std::vector<RelocationReport> reports;
  for (int m = 3; m <= 6 && reports.size() < 20; ++m) {
    for (int s = 1; s <= 3 && reports.size() < 20; ++s) {
      for (int t = s + 2; t <= s + 3 && reports.size() < 20; ++t) {
        std::vector<int> h2_path;
        for (int i = 0; i <= s + 1; ++i) h2_path.push_back(i);
        reports.push_back(
            verify_pendant_relocation(complete(m), 0, 1, path(t), h2_path));
      }
    }
  }
  return reports;
}

ordered_json DescentReport::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["d"] = d;
  j["j"] = this->j;
  j["vacuous"] = vacuous;
  j["members"] = members;
  j["members_in_lower_family"] = members_in_lower_family;
  j["extremal_slee"] = format_real(extremal_slee);
  j["max_lower_slee"] = max_lower_slee
                            ? ordered_json(format_real(*max_lower_slee))
                            : ordered_json(nullptr);
  j["violations"] = violations;
  j["passed"] = passed;
  return j;
}

DescentReport verify_h_descent(int n, int d, int j) {
  DescentReport report;
  report.n = n;
  report.d = d;
  report.j = j;
  const Graph extremal = h_extremal(n, d);
  report.extremal_slee = slee_eigen(extremal);
  if (j == 1) {
    report.vacuous = true;
    report.members = 1;
    report.passed = true;
    return report;
  }

  const auto specs = enumerate_h_specs(n, d, j);  // validates bounds
  const auto lower_specs = enumerate_h_specs(n, d, j - 1);
  double max_lower = 0.0;
  for (const auto& spec : lower_specs)
    max_lower = std::max(max_lower, slee_eigen(h_member(spec)));
  report.max_lower_slee = max_lower;

  const auto [lo, hi] = h_window(d, j - 1);
  auto in_lower = [&](const std::vector<int>& assignment) {
    bool direct = true, mirrored = true;
    for (int i : assignment) {
      if (i < lo || i > hi) direct = false;
      const int mi = d - 2 - i;  // path reversal maps start i to d-2-i
      if (mi < lo || mi > hi) mirrored = false;
    }
    return direct || mirrored;
  };

  report.members = static_cast<int>(specs.size());
  for (const auto& spec : specs) {
    const Graph member = h_member(spec);
    const double slee = slee_eigen(member);
    bool ok = true;
    if (in_lower(spec.assignment)) {
      ++report.members_in_lower_family;
    } else if (!(slee < max_lower - kSleeStrictMargin)) {
      ok = false;
    }
    // Chain bound: nothing in the family tops the extremal member, and
    // ties must be isomorphic to it.
    if (slee > report.extremal_slee * (1.0 + kSleeTieTolerance)) {
      ok = false;
    } else if (slee >= report.extremal_slee * (1.0 - kSleeTieTolerance) &&
               !are_isomorphic(member, extremal)) {
      ok = false;
    }
    if (!ok) report.violations.push_back(write_graph6(member));
  }
  report.passed = report.violations.empty();
  return report;
}

ordered_json NeighborBoundReport::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["diameter"] = diameter;
  j["diametral_path"] = diametral_path;
  j["max_observed"] = max_observed;
  j["passed"] = passed;
  return j;
}

NeighborBoundReport verify_diametral_neighbor_bound(const Graph& g) {
  const StructuralSummary summary = structural_summary(g);
  if (!summary.connected)
    throw Error(Errc::precondition_failed,
                "diametral neighbor bound requires a connected graph");
  const int n = g.order();
  const int d = *summary.diameter;

  NeighborBoundReport report;
  report.n = n;
  report.diameter = d;

  // Lexicographically first endpoints, then the lexicographically first
  // shortest path between them.
  int a = -1, b = -1;
  for (int i = 0; i < n && a < 0; ++i) {
    const auto dist = bfs_distances(g, i);
    for (int k = 0; k < n; ++k)
      if (dist[static_cast<std::size_t>(k)] == d) {
        a = i;
        b = k;
        break;
      }
  }
  const auto dist_b = bfs_distances(g, b);
  std::vector<int> on_path;
  int cur = a;
  on_path.push_back(a);
  for (int step = 1; step <= d; ++step) {
    for (int z : g.neighbors(cur))
      if (dist_b[static_cast<std::size_t>(z)] == d - step) {
        cur = z;
        break;
      }
    on_path.push_back(cur);
  }
  report.diametral_path = on_path;

  std::uint32_t path_mask = 0;
  for (int z : on_path) path_mask |= 1u << z;
  int worst = 0;
  for (int v = 0; v < n; ++v) {
    if ((path_mask >> v) & 1u) continue;
    worst = std::max(
        worst, std::popcount(g.neighbor_mask(v) & path_mask));
  }
  report.max_observed = worst;
  report.passed = worst <= 3;
  return report;
}

ordered_json MomentWalkReport::to_json() const {
  ordered_json j;
  j["n_max"] = n_max;
  j["k_max"] = k_max;
  j["graphs_checked"] = graphs_checked;
  j["trace_failures"] = trace_failures;
  j["entry_failures"] = entry_failures;
  j["failures"] = failures;
  j["passed"] = passed;
  return j;
}

MomentWalkReport verify_moment_walk(int n_max, int k_max) {
  if (n_max < 1 || n_max > kWalkEnumMaxOrder)
    throw Error(Errc::invalid_parameter,
                "moment-walk order must be in [1, " +
                    std::to_string(kWalkEnumMaxOrder) + "]");
  if (k_max < 0 || k_max > kWalkEnumMaxDepth)
    throw Error(Errc::invalid_parameter,
                "moment-walk depth must be in [0, " +
                    std::to_string(kWalkEnumMaxDepth) + "]");
  MomentWalkReport report;
  report.n_max = n_max;
  report.k_max = k_max;
  for (int n = 1; n <= n_max; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
      const Graph g = graph_from_edge_mask(n, static_cast<std::uint32_t>(mask));
      if (!is_connected(g)) continue;
      ++report.graphs_checked;
      const WalkCountTable oracle = count_walks_by_enumeration(g, k_max);
      const MomentTable table = moment_table(g, k_max);
      bool bad = false;
      for (int k = 0; k <= k_max; ++k) {
        if (table.traces[static_cast<std::size_t>(k)] !=
            BigInt(oracle.closed_total(k))) {
          ++report.trace_failures;
          bad = true;
        }
        const IntMatrix& power = table.power_entries[static_cast<std::size_t>(k)];
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (power.at(x, y) != BigInt(oracle.counts(k, x, y))) {
              ++report.entry_failures;
              bad = true;
            }
      }
      if (bad) report.failures.push_back(write_graph6(g));
    }
  }
  report.passed = report.failures.empty();
  return report;
}

ordered_json NeighborBoundSweepReport::to_json() const {
  ordered_json j;
  j["n_max"] = n_max;
  j["graphs_checked"] = graphs_checked;
  j["max_observed"] = max_observed;
  j["failures"] = failures;
  j["passed"] = passed;
  return j;
}

NeighborBoundSweepReport verify_neighbor_bound_all(int n_max) {
  if (n_max < 1 || n_max > kMaxSweepOrder)
    throw Error(Errc::invalid_parameter,
                "neighbor-bound order must be in [1, " +
                    std::to_string(kMaxSweepOrder) + "]");
  NeighborBoundSweepReport report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
      const Graph g = graph_from_edge_mask(n, static_cast<std::uint32_t>(mask));
      if (!is_connected(g)) continue;
      ++report.graphs_checked;
      const NeighborBoundReport one = verify_diametral_neighbor_bound(g);
      report.max_observed = std::max(report.max_observed, one.max_observed);
      if (!one.passed) report.failures.push_back(write_graph6(g));
    }
  }
  report.passed = report.failures.empty();
  return report;
}

ordered_json EdgeAdditionReport::to_json() const {
  ordered_json j;
  j["n_max"] = n_max;
  j["samples"] = samples;
  j["seed"] = seed;
  j["min_gap"] = format_real(min_gap);
  j["failures"] = failures;
  j["passed"] = passed;
  return j;
}

EdgeAdditionReport verify_edge_addition(int n_max, int samples,
                                        unsigned seed) {
  // A connected graph with an absent edge needs at least 3 vertices.
  if (n_max < 3 || n_max > kMaxOrder)
    throw Error(Errc::invalid_parameter, "edge-addition order must be >= 3");
  if (samples < 1)
    throw Error(Errc::invalid_parameter, "edge-addition needs >= 1 sample");
  std::mt19937 rng(seed);
  EdgeAdditionReport report;
  report.n_max = n_max;
  report.samples = samples;
  report.seed = seed;
  report.min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const int n =
        std::uniform_int_distribution<int>(3, n_max)(rng);
    Graph g(1);
    for (;;) {
      Graph candidate(n);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (rng() & 1u) candidate.add_edge(a, b);
      if (is_connected(candidate) && candidate.size() < n * (n - 1) / 2) {
        g = std::move(candidate);
        break;
      }
    }
    const auto non = g.non_edges();
    const auto [a, b] = non[std::uniform_int_distribution<std::size_t>(
        0, non.size() - 1)(rng)];
    const double gap = slee_eigen(add_edge(g, a, b)) - slee_eigen(g);
    report.min_gap = std::min(report.min_gap, gap);
    if (!(gap > kSleeStrictMargin)) report.failures.push_back(write_graph6(g));
  }
  report.passed = report.min_gap > kSleeStrictMargin;
  return report;
}

}  // namespace slee
