#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace mdsenum {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::sorted;

TEST(LineGraph, Examples) {
  auto p4 = line_graph(path_graph(4));
  EXPECT_EQ(p4.line.n(), 3u);
  EXPECT_EQ(p4.line.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(p4.edge_of(1), (Edge{1, 2}));
  EXPECT_EQ(p4.vertex_of({4, 3}), 3u);

  auto k3 = line_graph(complete_graph(3));
  EXPECT_EQ(k3.line.m(), 3u);

  EXPECT_THROW((void)line_graph(Graph(3, {})), InputError);
  EXPECT_THROW((void)p4.vertex_of({1, 3}), InputError);
}

TEST(LineGraph, BijectionRoundTrips) {
  std::mt19937 rng(51);
  for (int round = 0; round < 50; ++round) {
    Graph root = testing::random_connected(rng, 3 + rng() % 6, 12);
    auto map = line_graph(root);
    for (Vertex x = 1; x <= map.line.n(); ++x) EXPECT_EQ(map.vertex_of(map.edge_of(x)), x);
    for (Vertex a = 1; a <= map.line.n(); ++a) {
      for (Vertex b = a + 1; b <= map.line.n(); ++b) {
        auto [p, q] = map.edge_of(a);
        auto [r, s] = map.edge_of(b);
        EXPECT_EQ(map.line.adjacent(a, b), p == r || p == s || q == r || q == s);
      }
    }
  }
}

TEST(IsBipartite, Examples) {
  EXPECT_TRUE(is_bipartite(cycle_graph(6)).bipartite);
  auto odd = is_bipartite(cycle_graph(5));
  EXPECT_FALSE(odd.bipartite);
  EXPECT_EQ(odd.odd_cycle.size() % 2, 1u);
  Graph c5 = cycle_graph(5);
  for (std::size_t i = 0; i < odd.odd_cycle.size(); ++i) {
    Vertex a = odd.odd_cycle[i];
    Vertex b = odd.odd_cycle[(i + 1) % odd.odd_cycle.size()];
    EXPECT_TRUE(c5.adjacent(a, b));
  }
}

TEST(EnumerateMinEds, Examples) {
  EXPECT_EQ(sorted(enumerate_min_eds(path_graph(4))),
            (std::vector<std::vector<Edge>>{{{1, 2}, {3, 4}}, {{2, 3}}}));
  EXPECT_EQ(sorted(enumerate_min_eds(complete_graph(3))),
            (std::vector<std::vector<Edge>>{{{1, 2}}, {{1, 3}}, {{2, 3}}}));
  EXPECT_EQ(enumerate_min_eds(Graph(2, {{1, 2}})), (std::vector<std::vector<Edge>>{{{1, 2}}}));
}

TEST(EnumerateMinEds, Dispatch) {
  EdgeDomEnumerator bip(cycle_graph(6));
  EXPECT_TRUE(bip.bipartite_root());
  EXPECT_TRUE(bip.uses_bipartite_generator());
  EdgeDomEnumerator forced(cycle_graph(6), true);
  EXPECT_FALSE(forced.uses_bipartite_generator());
  EdgeDomEnumerator odd(cycle_graph(5));
  EXPECT_FALSE(odd.uses_bipartite_generator());
}

TEST(Guards, WitnessesInMessages) {
  try {
    require_claw_free(testing::star_graph(3));
    FAIL();
  } catch (const UnsupportedInput& e) {
    EXPECT_NE(std::string(e.what()).find("center 1"), std::string::npos);
  }
  EXPECT_THROW(require_girth_at_least_7(cycle_graph(6)), UnsupportedInput);
  EXPECT_NO_THROW(require_girth_at_least_7(cycle_graph(7)));
  Graph diamond(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  EXPECT_THROW(require_diamond_free(diamond), UnsupportedInput);
}

TEST(EdgesToString, Format) {
  EXPECT_EQ(edges_to_string({{1, 2}, {3, 4}}), "1-2 3-4");
  EXPECT_EQ(edges_to_string({}), "");
}

}  // namespace
}  // namespace mdsenum
