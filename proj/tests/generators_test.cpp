#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace mdsenum {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::sorted;
using testing::star_graph;

TEST(LineContext, Examples) {
  auto c4 = build_line_context(cycle_graph(4), VertexSet{2, 4}, 1, 4);
  EXPECT_EQ(c4.k(), 0u);
  EXPECT_EQ(c4.flip_case(), FlipCase::u_attached);

  auto k3 = build_line_context(complete_graph(3), VertexSet{3}, 1, 3);
  EXPECT_EQ(k3.k(), 0u);
  EXPECT_EQ(k3.flip_case(), FlipCase::no_children);

  // P(2) \ N[1] = {3}.
  auto p3 = build_line_context(path_graph(3), VertexSet{2}, 1, 2);
  EXPECT_EQ(p3.k(), 1u);
  EXPECT_EQ(p3.flip_case(), FlipCase::no_children);
}

TEST(LineContext, RejectsNonIsolatedV) {
  EXPECT_THROW((void)build_line_context(cycle_graph(4), VertexSet{1, 2}, 4, 1), ContractViolation);
}

TEST(LineChildren, Examples) {
  EXPECT_EQ(children_line(cycle_graph(4), VertexSet{2, 4}, 1, 4), (std::vector<VertexSet>{{1, 2}}));
  EXPECT_EQ(children_line(cycle_graph(4), VertexSet{1, 3}, 2, 1), (std::vector<VertexSet>{{2, 3}}));
  EXPECT_TRUE(children_line(complete_graph(3), VertexSet{3}, 1, 3).empty());
}

TEST(BipartiteContext, Examples) {
  Graph p3 = path_graph(3);  // L(P4)
  auto a = build_bip_context(p3, VertexSet{2}, 1, 2);
  EXPECT_EQ(a.k(), 1u);
  EXPECT_EQ(a.flip_case(), FlipCase::no_children);

  // {2,3} is not minimal in P3 (3 has no private vertex), so D* = {1,3} has
  // no child under (u,v) = (2,1).
  auto b = build_bip_context(p3, VertexSet{1, 3}, 2, 1);
  EXPECT_EQ(b.k(), 0u);
  EXPECT_EQ(b.flip_case(), FlipCase::no_children);

  Graph c4 = cycle_graph(4);
  auto d = build_bip_context(c4, VertexSet{1, 3}, 2, 1);
  EXPECT_EQ(d.k(), 0u);
  EXPECT_EQ(d.flip_case(), FlipCase::u_attached);

  Graph k2(2, {{1, 2}});
  auto c = build_bip_context(k2, VertexSet{1}, 2, 1);
  EXPECT_EQ(c.flip_case(), FlipCase::no_children);
}

TEST(BipartiteContext, NeighborhoodCliques) {
  auto pieces = neighborhood_cliques(cycle_graph(6), 1);
  EXPECT_EQ(pieces, (std::vector<VertexSet>{{2}, {6}}));
  EXPECT_THROW((void)neighborhood_cliques(star_graph(3), 1), UnsupportedInput);
}

TEST(BipartiteChildren, Examples) {
  EXPECT_TRUE(children_bip(path_graph(3), VertexSet{1, 3}, 2, 1).empty());
  EXPECT_EQ(children_bip(cycle_graph(4), VertexSet{1, 3}, 2, 1), (std::vector<VertexSet>{{2, 3}}));
  EXPECT_TRUE(children_bip(path_graph(3), VertexSet{2}, 1, 2).empty());
}

// Children of D* are exactly the minimal dominating sets whose parent under
// the same flip is D*.
std::vector<VertexSet> true_children(const Graph& g, const VertexSet& d_star, Vertex u, Vertex v,
                                     ParentCheck check = ParentCheck::none) {
  std::vector<VertexSet> out;
  for (const auto& d : oracle::brute_mds(g)) {
    if (!d.contains(u) || isolated_in(g, d, u)) continue;
    if (!private_open(g, d, u).contains(v)) continue;
    if (compute_parent(g, d, u, v, check).parent == d_star) out.push_back(d);
  }
  return out;
}

TEST(BipartiteChildren, C6MatchesOracle) {
  Graph c6 = cycle_graph(6);  // L(C6)
  auto got = sorted(children_bip(c6, VertexSet{1, 4}, 2, 1));
  EXPECT_EQ(got, true_children(c6, VertexSet{1, 4}, 2, 1));
  for (const auto& d : oracle::brute_mds(c6)) {
    for (FlipPair f : flip_pairs(c6, d)) {
      EXPECT_EQ(sorted(children_bip(c6, d, f.u, f.v)), true_children(c6, d, f.u, f.v))
          << "D*=" << d << " u=" << f.u << " v=" << f.v;
    }
  }
}

TEST(GirthContext, StarHasNoChildren) {
  Graph star = star_graph(4);
  auto ctx = build_girth_context(star, VertexSet{1}, 2, 1);
  EXPECT_EQ(ctx.y_list.size(), 3u);
  EXPECT_TRUE(ctx.no_children);
  EXPECT_TRUE(children_girth(star, VertexSet{1}, 2, 1).empty());
}

TEST(GirthChildren, StarK13MatchesOracle) {
  Graph star = star_graph(3);
  auto got = children_girth(star, VertexSet{1}, 2, 1);
  auto want = true_children(star, VertexSet{1}, 2, 1, ParentCheck::girth7);
  for (const auto& c : want) EXPECT_NE(std::find(got.begin(), got.end(), c), got.end());
}

TEST(GirthChildren, P7Triple) {
  Graph p7 = path_graph(7);
  const VertexSet d_star{2, 5, 7};
  ASSERT_TRUE(is_minimal_dominating(p7, d_star));
  auto got = children_girth(p7, d_star, 1, 2);
  auto all = oracle::brute_mds(p7);
  for (const auto& c : got) {
    EXPECT_NE(std::find(all.begin(), all.end(), c), all.end()) << c;
  }
  for (const auto& c : true_children(p7, d_star, 1, 2, ParentCheck::girth7)) {
    EXPECT_NE(std::find(got.begin(), got.end(), c), got.end()) << c;
  }
  for (const auto& d : all) {
    for (FlipPair f : flip_pairs(p7, d)) {
      auto kids = children_girth(p7, d, f.u, f.v);
      for (const auto& c : true_children(p7, d, f.u, f.v, ParentCheck::girth7)) {
        EXPECT_NE(std::find(kids.begin(), kids.end(), c), kids.end()) << c;
      }
    }
  }
}

// Property: generator output contains every true child, on small corpora of
// each graph class.
TEST(GeneratorProperties, ChildrenContainTrueChildren) {
  std::mt19937 rng(41);
  for (int round = 0; round < 40; ++round) {
    Graph root = testing::random_connected(rng, 4 + rng() % 3, 8);
    auto map = line_graph(root);
    const Graph& g = map.line;
    for (const auto& d : oracle::brute_mds(g)) {
      for (FlipPair f : flip_pairs(g, d)) {
        auto got = children_line(g, d, f.u, f.v);
        for (const auto& c : true_children(g, d, f.u, f.v, ParentCheck::line_graph)) {
          EXPECT_NE(std::find(got.begin(), got.end(), c), got.end());
        }
      }
    }
  }
  for (int round = 0; round < 30; ++round) {
    Graph g = testing::random_tree(rng, 4 + rng() % 8);
    for (const auto& d : oracle::brute_mds(g)) {
      for (FlipPair f : flip_pairs(g, d)) {
        auto got = children_girth(g, d, f.u, f.v);
        for (const auto& c : true_children(g, d, f.u, f.v, ParentCheck::girth7)) {
          EXPECT_NE(std::find(got.begin(), got.end(), c), got.end());
        }
      }
    }
  }
}

// Property: the bipartite generator emits exactly the true children.
TEST(GeneratorProperties, BipartiteChildrenAreExact) {
  std::mt19937 rng(42);
  for (int round = 0; round < 40; ++round) {
    Graph root = testing::random_connected_bipartite(rng, 4 + rng() % 3, 8);
    auto map = line_graph(root);
    const Graph& g = map.line;
    for (const auto& d : oracle::brute_mds(g)) {
      for (FlipPair f : flip_pairs(g, d)) {
        EXPECT_EQ(sorted(children_bip(g, d, f.u, f.v)), true_children(g, d, f.u, f.v));
      }
    }
  }
}

}  // namespace
}  // namespace mdsenum
