#include "slee/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace slee {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw Error(Errc::order_out_of_range,
                "graph order must be in [1, " + std::to_string(kMaxOrder) +
                    "], got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0u);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(n_) + ")");
}

int Graph::size() const noexcept {
  int twice = 0;
  for (std::uint32_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::uint32_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::neighbors(int v) const {
  std::uint32_t m = neighbor_mask(v);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m) {
    int w = std::countr_zero(m);
    out.push_back(w);
    m &= m - 1;
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[static_cast<std::size_t>(u)] >> v) & 1u) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!((adj_[static_cast<std::size_t>(u)] >> v) & 1u))
        out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
  if ((adj_[static_cast<std::size_t>(u)] >> v) & 1u)
    throw Error(Errc::duplicate_edge, "edge {" + std::to_string(u) + "," +
                                          std::to_string(v) +
                                          "} already present");
  adj_[static_cast<std::size_t>(u)] |= 1u << v;
  adj_[static_cast<std::size_t>(v)] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
  if (!((adj_[static_cast<std::size_t>(u)] >> v) & 1u))
    throw Error(Errc::missing_edge, "edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} not present");
  adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
  adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
}

Graph empty_graph(int n) { return Graph(n); }

Graph add_edge(Graph g, int u, int v) {
  g.add_edge(u, v);
  return g;
}

Graph remove_edge(Graph g, int u, int v) {
  g.remove_edge(u, v);
  return g;
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~', long-form marker

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty())
    throw Error(Errc::parse_error, "graph6: empty string");
  const unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == kG6Hi)
    throw Error(Errc::cap_exceeded,
                "graph6: long-form order (n >= 63) exceeds the order cap " +
                    std::to_string(kMaxOrder));
  if (head < kG6Lo || head > kG6Hi)
    throw Error(Errc::parse_error, "graph6: malformed header byte");
  const int n = head - kG6Lo;
  if (n < 1 || n > kMaxOrder)
    throw Error(n > kMaxOrder ? Errc::cap_exceeded : Errc::parse_error,
                "graph6: order " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxOrder) + "]");

  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) < 1 + nbytes)
    throw Error(Errc::parse_error, "graph6: truncated bit stream");
  if (static_cast<int>(text.size()) > 1 + nbytes)
    throw Error(Errc::parse_error, "graph6: trailing garbage after body");

  Graph g(n);
  int bit = 0;
  for (int byte = 0; byte < nbytes; ++byte) {
    const unsigned char c = static_cast<unsigned char>(text[1 + byte]);
    if (c < kG6Lo || c > kG6Hi)
      throw Error(Errc::parse_error, "graph6: body byte out of range");
    const unsigned value = static_cast<unsigned>(c - kG6Lo);
    for (int s = 5; s >= 0; --s, ++bit) {
      const bool set = (value >> s) & 1u;
      if (bit >= nbits) {
        if (set)
          throw Error(Errc::parse_error, "graph6: nonzero padding bits");
        continue;
      }
      if (set) {
        // Bit order: column-major upper triangle, (0,1), (0,2), (1,2), ...
        int j = 1, before = 0;
        while (before + j <= bit) before += j, ++j;
        g.add_edge(bit - before, j);
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + kG6Lo));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Lo));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Lo));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  const int n = g.order();
  if (source < 0 || source >= n)
    throw Error(Errc::vertex_out_of_range,
                "bfs source " + std::to_string(source) + " out of range");
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::uint32_t seen = 1u << source;
  std::uint32_t frontier = seen;
  int level = 0;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbor_mask(v);
    }
    next &= ~seen;
    ++level;
    std::uint32_t m = next;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      dist[static_cast<std::size_t>(v)] = level;
    }
    seen |= next;
    frontier = next;
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] =
              1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] ==
                   color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

StructuralSummary structural_summary(const Graph& g) {
  const int n = g.order();
  StructuralSummary s;

  s.eccentricities.assign(static_cast<std::size_t>(n), -1);
  s.connected = true;
  int diameter = 0;
  for (int v = 0; v < n && s.connected; ++v) {
    const auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) {
      if (d < 0) {
        s.connected = false;
        break;
      }
      ecc = std::max(ecc, d);
    }
    if (s.connected) {
      s.eccentricities[static_cast<std::size_t>(v)] = ecc;
      diameter = std::max(diameter, ecc);
    }
  }
  if (s.connected) {
    s.diameter = diameter;
  } else {
    s.diameter = std::nullopt;
    std::fill(s.eccentricities.begin(), s.eccentricities.end(), -1);
  }

  // Cut vertices, computed per component so disconnected inputs work too.
  std::vector<int> tin(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> cut(static_cast<std::size_t>(n), false);
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    std::size_t idx;
    int children;
  };
  std::vector<Frame> stack;
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbors(v);

  for (int root = 0; root < n; ++root) {
    if (tin[static_cast<std::size_t>(root)] != -1) continue;
    tin[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] =
        timer++;
    stack.push_back({root, -1, 0, 0});
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = nbrs[static_cast<std::size_t>(f.v)];
      if (f.idx < adj.size()) {
        int w = adj[f.idx++];
        if (w == f.parent) continue;
        if (tin[static_cast<std::size_t>(w)] != -1) {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)],
                       tin[static_cast<std::size_t>(w)]);
        } else {
          tin[static_cast<std::size_t>(w)] =
              low[static_cast<std::size_t>(w)] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0, 0});
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[static_cast<std::size_t>(p.v)] =
              std::min(low[static_cast<std::size_t>(p.v)],
                       low[static_cast<std::size_t>(done.v)]);
          if (p.v != root && low[static_cast<std::size_t>(done.v)] >=
                                 tin[static_cast<std::size_t>(p.v)])
            cut[static_cast<std::size_t>(p.v)] = true;
        }
      }
    }
    if (root_children >= 2) cut[static_cast<std::size_t>(root)] = true;
  }
  for (int v = 0; v < n; ++v)
    if (cut[static_cast<std::size_t>(v)]) s.cut_vertices.push_back(v);

  return s;
}

namespace {

bool isomorphism_backtrack(const Graph& a, const Graph& b,
                           const std::vector<int>& order, std::vector<int>& map,
                           std::uint32_t used, std::size_t pos) {
  if (pos == order.size()) return true;
  const int va = order[pos];
  const int n = b.order();
  for (int vb = 0; vb < n; ++vb) {
    if ((used >> vb) & 1u) continue;
    if (a.degree(va) != b.degree(vb)) continue;
    bool ok = true;
    for (std::size_t p = 0; p < pos && ok; ++p) {
      const int wa = order[p];
      if (a.has_edge(va, wa) != b.has_edge(vb, map[static_cast<std::size_t>(wa)]))
        ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(va)] = vb;
    if (isomorphism_backtrack(a, b, order, map, used | (1u << vb), pos + 1))
      return true;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.size() != b.size()) return false;
  const int n = a.order();

  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < n; ++v) db.push_back(b.degree(v));
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Map high-degree vertices first; they prune hardest.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return da[static_cast<std::size_t>(x)] >
                                       da[static_cast<std::size_t>(y)]; });

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  return isomorphism_backtrack(a, b, order, map, 0u, 0);
}

Graph coalescence(const Graph& g, int x, const Graph& h, int y) {
  if (x < 0 || x >= g.order())
    throw Error(Errc::vertex_out_of_range,
                "coalescence: x = " + std::to_string(x) + " out of range");
  if (y < 0 || y >= h.order())
    throw Error(Errc::vertex_out_of_range,
                "coalescence: y = " + std::to_string(y) + " out of range");
  const int ng = g.order();
  Graph out(ng + h.order() - 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  auto relabel = [&](int z) {
    if (z == y) return x;
    return ng + z - (z > y ? 1 : 0);
  };
  for (auto [u, v] : h.edges()) out.add_edge(relabel(u), relabel(v));
  return out;
}

Graph attach_pendent_path(const Graph& g, int x, int m) {
  if (x < 0 || x >= g.order())
    throw Error(Errc::vertex_out_of_range,
                "attach_pendent_path: x = " + std::to_string(x) +
                    " out of range");
  if (m < 0)
    throw Error(Errc::invalid_parameter,
                "attach_pendent_path: negative path order");
  if (m == 0) return g;
  const int n = g.order();
  Graph out(n + m);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.add_edge(x, n);
  for (int i = 1; i < m; ++i) out.add_edge(n + i - 1, n + i);
  return out;
}

}  // namespace slee
