#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "slee/families.hpp"
#include "slee/graph.hpp"
#include "slee/search.hpp"

using namespace slee;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_parameter;
}

}  // namespace

TEST_CASE("empty graph construction") {
  const Graph g = empty_graph(3);
  CHECK(g.order() == 3);
  CHECK(g.size() == 0);

  const Graph k1 = empty_graph(1);
  CHECK(k1.order() == 1);

  CHECK(code_of([] { empty_graph(0); }) == Errc::order_out_of_range);
  CHECK(code_of([] { empty_graph(kMaxOrder + 1); }) ==
        Errc::order_out_of_range);
}

TEST_CASE("edge edits and their error values") {
  Graph k2 = add_edge(empty_graph(2), 0, 1);
  CHECK(k2.size() == 1);
  CHECK(k2.has_edge(0, 1));
  CHECK(k2.has_edge(1, 0));

  CHECK(code_of([&] { add_edge(k2, 0, 1); }) == Errc::duplicate_edge);
  CHECK(code_of([&] { add_edge(k2, 1, 1); }) == Errc::self_loop);
  CHECK(code_of([&] { add_edge(k2, 0, 5); }) == Errc::vertex_out_of_range);
  CHECK(code_of([&] { remove_edge(empty_graph(3), 0, 1); }) ==
        Errc::missing_edge);

  const Graph p3 = remove_edge(complete(3), 0, 1);
  CHECK(p3.size() == 2);
  CHECK(are_isomorphic(p3, path(3)));
}

TEST_CASE("graph6 hand-decoded cases") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));
  CHECK(write_graph6(k2) == "A_");

  CHECK(write_graph6(path(3)) == "Bg");
  CHECK(write_graph6(complete(3)) == "Bw");
  CHECK(parse_graph6("Bw") == complete(3));

  // Single vertex: header only.
  CHECK(write_graph6(empty_graph(1)) == "@");
  CHECK(parse_graph6("@") == empty_graph(1));
}

TEST_CASE("graph6 malformed inputs") {
  CHECK(code_of([] { parse_graph6(""); }) == Errc::parse_error);
  CHECK(code_of([] { parse_graph6("A"); }) == Errc::parse_error);   // truncated
  CHECK(code_of([] { parse_graph6("A_?"); }) == Errc::parse_error); // trailing
  CHECK(code_of([] { parse_graph6("~??A_"); }) == Errc::cap_exceeded);
  CHECK(code_of([] { parse_graph6("B\x07"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_graph6(std::string(1, '\x20') + "_"); }) ==
        Errc::parse_error);
  // K_2 with a nonzero padding bit.
  CHECK(code_of([] { parse_graph6("A`"); }) == Errc::parse_error);
}

TEST_CASE("graph6 round trip on random graphs up to order 10") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g = test::random_graph(rng, n);
    const std::string text = write_graph6(g);
    CHECK(parse_graph6(text) == g);
    CHECK(write_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("structural summary of named graphs") {
  for (int n = 2; n <= 6; ++n) {
    const StructuralSummary s = structural_summary(complete(n));
    CHECK(s.connected);
    CHECK(s.diameter == 1);
    CHECK(s.cut_vertices.empty());
  }
  for (int n = 2; n <= 7; ++n) {
    const StructuralSummary s = structural_summary(path(n));
    CHECK(s.connected);
    CHECK(s.diameter == n - 1);
    CHECK(static_cast<int>(s.cut_vertices.size()) == n - 2);
  }
  const StructuralSummary p4 = structural_summary(path(4));
  CHECK(p4.cut_vertices == std::vector<int>{1, 2});
  CHECK(p4.eccentricities == std::vector<int>{3, 2, 2, 3});

  const StructuralSummary lonely = structural_summary(empty_graph(2));
  CHECK_FALSE(lonely.connected);
  CHECK_FALSE(lonely.diameter.has_value());
  CHECK(lonely.eccentricities == std::vector<int>{-1, -1});
  CHECK(lonely.cut_vertices.empty());

  const StructuralSummary k1 = structural_summary(empty_graph(1));
  CHECK(k1.connected);
  CHECK(k1.diameter == 0);
}

TEST_CASE("diameter and cut vertices agree with brute force on all connected graphs up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      const StructuralSummary s = structural_summary(g);
      CHECK(s.connected == is_connected(g));
      if (!s.connected) continue;

      const auto dist = test::floyd_warshall(g);
      int diameter = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) diameter = std::max(diameter, dist[i][j]);
      CHECK(*s.diameter == diameter);

      CHECK(s.cut_vertices == test::brute_force_cut_vertices(g));
    }
  }
}

TEST_CASE("isomorphism examples") {
  Graph relabeled(3);  // path 2-0-1
  relabeled.add_edge(2, 0);
  relabeled.add_edge(0, 1);
  CHECK(are_isomorphic(path(3), relabeled));

  CHECK_FALSE(are_isomorphic(complete(3), path(3)));
  CHECK_FALSE(are_isomorphic(path(3), path(4)));

  // C_4 is K_{2,2}.
  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  Graph k22(4);
  k22.add_edge(0, 2);
  k22.add_edge(0, 3);
  k22.add_edge(1, 2);
  k22.add_edge(1, 3);
  CHECK(are_isomorphic(c4, k22));
}

TEST_CASE("isomorphism behaves like an equivalence on a random pool") {
  std::mt19937 rng(11);
  std::vector<Graph> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(test::random_graph(rng, 6));
  // Guaranteed isomorphic mates via relabeling.
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < 4; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    pool.push_back(test::permuted(pool[static_cast<std::size_t>(i)], perm));
  }

  for (const Graph& g : pool) CHECK(are_isomorphic(g, g));
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b)
      CHECK(are_isomorphic(pool[a], pool[b]) ==
            are_isomorphic(pool[b], pool[a]));
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = 0; b < pool.size(); ++b)
      for (std::size_t c = 0; c < pool.size(); ++c)
        if (are_isomorphic(pool[a], pool[b]) &&
            are_isomorphic(pool[b], pool[c]))
          CHECK(are_isomorphic(pool[a], pool[c]));
}

TEST_CASE("coalescence") {
  const Graph p3 = coalescence(path(2), 1, path(2), 0);
  CHECK(are_isomorphic(p3, path(3)));

  const Graph pendant_triangle = coalescence(complete(3), 0, path(2), 0);
  CHECK(pendant_triangle.order() == 4);
  CHECK(pendant_triangle.size() == 4);
  CHECK(structural_summary(pendant_triangle).cut_vertices ==
        std::vector<int>{0});

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = test::random_connected_graph(rng, 5);
    const Graph h = test::random_connected_graph(rng, 4);
    const Graph joined = coalescence(g, 2, h, 1);
    CHECK(joined.order() == g.order() + h.order() - 1);
    CHECK(joined.size() == g.size() + h.size());
  }

  CHECK(code_of([] { coalescence(path(2), 5, path(2), 0); }) ==
        Errc::vertex_out_of_range);
  CHECK(code_of([] { coalescence(path(2), 0, path(2), -1); }) ==
        Errc::vertex_out_of_range);
}

TEST_CASE("attach pendent path") {
  const Graph g = attach_pendent_path(complete(3), 0, 2);
  CHECK(g.order() == 5);
  CHECK(g.size() == 5);
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(3, 4));

  CHECK(attach_pendent_path(complete(4), 2, 0) == complete(4));
  CHECK(code_of([] { attach_pendent_path(path(3), 7, 1); }) ==
        Errc::vertex_out_of_range);

  // Anchored in a block of >= 3 vertices, each new vertex adds one cut.
  for (const Graph& base : {complete(3), complete(4), complete_minus_edge(4)}) {
    const std::size_t before =
        structural_summary(base).cut_vertices.size();
    for (int m = 1; m <= 3; ++m) {
      const Graph extended = attach_pendent_path(base, 0, m);
      CHECK(structural_summary(extended).cut_vertices.size() ==
            before + static_cast<std::size_t>(m));
    }
  }
}

TEST_CASE("bipartite detection") {
  CHECK(is_bipartite(path(5)));
  CHECK(is_bipartite(empty_graph(4)));
  Graph c6 = path(6);
  c6.add_edge(5, 0);
  CHECK(is_bipartite(c6));
  Graph c5 = path(5);
  c5.add_edge(4, 0);
  CHECK_FALSE(is_bipartite(c5));
  CHECK_FALSE(is_bipartite(complete(3)));
}

TEST_CASE("bfs distances") {
  const auto dist = bfs_distances(path(4), 0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3});
  const auto parts = bfs_distances(empty_graph(3), 1);
  CHECK(parts == std::vector<int>{-1, 0, -1});
}
