#pragma once

#include <utility>
#include <vector>

#include "slee/graph.hpp"

namespace slee {

Graph path(int n);
Graph complete(int n);
// K_n minus the edge {0,1}; every choice of removed edge is isomorphic.
Graph complete_minus_edge(int n);

// Member of the H family: vertices 0..d form the path v_0..v_d, vertices
// d+1..n-1 form a clique, and clique vertex t is joined to the three
// consecutive path vertices starting at assignment[t].
struct HFamilySpec {
  int n = 0;
  int d = 0;
  int j = 0;
  std::vector<int> assignment;  // one window start per clique vertex
};

// ceil(d/2), the center index of the path v_0..v_d.
int h_center(int d);

// Inclusive range of legal window starts for given (d, j). The nominal
// upper end center+j-2 is clipped to d-2 so the three attachment vertices
// stay on the path (the clip only bites for odd d at the top j).
std::pair<int, int> h_window(int d, int j);

// Throws Errc::invalid_parameter naming the violated bound.
void validate_h_spec(const HFamilySpec& spec);

Graph h_member(const HFamilySpec& spec);

// All assignment combinations over the legal window, in lexicographic
// order. (2j-1)^(n-d-1) members when the window is unclipped.
std::vector<HFamilySpec> enumerate_h_specs(int n, int d, int j);
std::vector<Graph> enumerate_h_family(int n, int d, int j);

// The unique j = 1 member: every clique vertex joined to
// v_{center-1}, v_center, v_{center+1}.
Graph h_extremal(int n, int d);

// K_{n-r} with one pendent path per clique vertex, orders as balanced as
// possible (they differ by at most one and sum to r).
struct GFamilySpec {
  int n = 0;
  int r = 0;
  std::vector<int> path_orders;  // one per clique vertex, length n-r
};

GFamilySpec g_spec(int n, int r);
Graph g_extremal(int n, int r);

}  // namespace slee
