#include "slee/families.hpp"

#include <algorithm>
#include <string>

namespace slee {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_minus_edge(int n) {
  if (n < 2)
    throw Error(Errc::order_out_of_range,
                "complete_minus_edge needs n >= 2, got " + std::to_string(n));
  Graph g = complete(n);
  g.remove_edge(0, 1);
  return g;
}

int h_center(int d) { return (d + 1) / 2; }

std::pair<int, int> h_window(int d, int j) {
  const int c = h_center(d);
  return {c - j, std::min(c + j - 2, d - 2)};
}

void validate_h_spec(const HFamilySpec& spec) {
  const int n = spec.n, d = spec.d, j = spec.j;
  if (n <= 4)
    throw Error(Errc::invalid_parameter,
                "H family requires n > 4, got n = " + std::to_string(n));
  if (!(2 < d && d < n - 1))
    throw Error(Errc::invalid_parameter,
                "H family requires 2 < d < n-1, got d = " + std::to_string(d) +
                    " with n = " + std::to_string(n));
  if (!(1 <= j && j <= h_center(d)))
    throw Error(Errc::invalid_parameter,
                "H family requires 1 <= j <= ceil(d/2), got j = " +
                    std::to_string(j));
  const int clique = n - d - 1;
  if (static_cast<int>(spec.assignment.size()) != clique)
    throw Error(Errc::invalid_parameter,
                "H family assignment must list " + std::to_string(clique) +
                    " window starts, got " +
                    std::to_string(spec.assignment.size()));
  const auto [lo, hi] = h_window(d, j);
  for (int i : spec.assignment)
    if (i < lo || i > hi)
      throw Error(Errc::invalid_parameter,
                  "H family window start " + std::to_string(i) +
                      " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

Graph h_member(const HFamilySpec& spec) {
  validate_h_spec(spec);
  const int n = spec.n, d = spec.d;
  Graph g(n);
  for (int i = 0; i < d; ++i) g.add_edge(i, i + 1);
  for (int s = d + 1; s < n; ++s)
    for (int t = s + 1; t < n; ++t) g.add_edge(s, t);
  for (int t = 0; t < n - d - 1; ++t) {
    const int start = spec.assignment[static_cast<std::size_t>(t)];
    for (int off = 0; off < 3; ++off) g.add_edge(d + 1 + t, start + off);
  }
  return g;
}

std::vector<HFamilySpec> enumerate_h_specs(int n, int d, int j) {
  HFamilySpec probe{n, d, j, {}};
  probe.assignment.assign(static_cast<std::size_t>(std::max(0, n - d - 1)),
                          h_window(d, j).first);
  validate_h_spec(probe);

  const auto [lo, hi] = h_window(d, j);
  const int clique = n - d - 1;
  std::vector<HFamilySpec> out;
  std::vector<int> assign(static_cast<std::size_t>(clique), lo);
  for (;;) {
    out.push_back(HFamilySpec{n, d, j, assign});
    int pos = clique - 1;
    while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == hi) {
      assign[static_cast<std::size_t>(pos)] = lo;
      --pos;
    }
    if (pos < 0) break;
    ++assign[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<Graph> enumerate_h_family(int n, int d, int j) {
  std::vector<Graph> out;
  for (const auto& spec : enumerate_h_specs(n, d, j))
    out.push_back(h_member(spec));
  return out;
}

Graph h_extremal(int n, int d) {
  HFamilySpec spec{n, d, 1, {}};
  spec.assignment.assign(static_cast<std::size_t>(n - d - 1),
                         h_center(d) - 1);
  return h_member(spec);
}

GFamilySpec g_spec(int n, int r) {
  if (n < 2 || r < 0 || r > n - 2)
    throw Error(Errc::invalid_parameter,
                "G family requires 0 <= r <= n-2, got n = " +
                    std::to_string(n) + ", r = " + std::to_string(r));
  GFamilySpec spec;
  spec.n = n;
  spec.r = r;
  const int clique = n - r;
  const int base = r / clique;
  const int longer = r % clique;
  for (int c = 0; c < clique; ++c)
    spec.path_orders.push_back(base + (c < longer ? 1 : 0));
  return spec;
}

Graph g_extremal(int n, int r) {
  const GFamilySpec spec = g_spec(n, r);
  Graph g = complete(n - r);
  for (int c = 0; c < n - r; ++c)
    g = attach_pendent_path(g, c, spec.path_orders[static_cast<std::size_t>(c)]);
  return g;
}

}  // namespace slee
