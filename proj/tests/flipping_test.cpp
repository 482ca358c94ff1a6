#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace mdsenum {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::sorted;

TEST(ComputeParent, Examples) {
  auto r = compute_parent(cycle_graph(4), VertexSet{1, 2}, 1, 4);
  EXPECT_EQ(r.parent, (VertexSet{2, 4}));
  EXPECT_TRUE(r.x_set.empty());
  EXPECT_TRUE(r.z_set.empty());

  auto s = compute_parent(cycle_graph(4), VertexSet{2, 3}, 2, 1);
  EXPECT_EQ(s.parent, (VertexSet{1, 3}));
  EXPECT_TRUE(s.x_set.empty());
  EXPECT_TRUE(s.z_set.empty());
}

TEST(ComputeParent, PreconditionViolations) {
  EXPECT_THROW((void)compute_parent(cycle_graph(4), VertexSet{1, 3}, 1, 2), ContractViolation);
  EXPECT_THROW((void)compute_parent(cycle_graph(4), VertexSet{1, 2, 3}, 1, 4), ContractViolation);
  EXPECT_THROW((void)compute_parent(cycle_graph(4), VertexSet{1, 2}, 1, 3), ContractViolation);
}

TEST(FlipPairs, Examples) {
  // Ascending (v, u): v = 2 first, then v = 4.
  EXPECT_EQ(flip_pairs(cycle_graph(4), VertexSet{2, 4}),
            (std::vector<FlipPair>{{1, 2}, {3, 2}, {1, 4}, {3, 4}}));
  EXPECT_EQ(flip_pairs(path_graph(3), VertexSet{2}), (std::vector<FlipPair>{{1, 2}, {3, 2}}));
  EXPECT_TRUE(flip_pairs(cycle_graph(4), VertexSet{1, 2}).empty());
}

TEST(FlipEnumerator, Examples) {
  EXPECT_EQ(sorted(enumerate_all<LineGenerator>(complete_graph(3))),
            (std::vector<VertexSet>{{1}, {2}, {3}}));
  EXPECT_EQ(sorted(enumerate_all<LineGenerator>(cycle_graph(4))),
            (std::vector<VertexSet>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(sorted(enumerate_all<LineGenerator>(path_graph(3))),
            (std::vector<VertexSet>{{1, 3}, {2}}));
}

TEST(FlipEnumerator, StatsCountEmissions) {
  Graph k3 = complete_graph(3);
  FlipEnumerator<LineGenerator> a(k3);
  while (a.next()) {
  }
  EXPECT_EQ(a.stats().emitted, 3u);

  Graph c4 = cycle_graph(4);
  FlipEnumerator<LineGenerator> b(c4);
  while (b.next()) {
  }
  EXPECT_EQ(b.stats().emitted, 6u);
  EXPECT_EQ(b.stats().ledger_size, 6u);

  Graph single(1, {});
  FlipEnumerator<LineGenerator> c(single);
  EXPECT_EQ(c.next(), (VertexSet{1}));
  EXPECT_FALSE(c.next().has_value());
  EXPECT_EQ(c.stats().emitted, 1u);
}

TEST(FlipEnumerator, MaximalIndependentSetsComeFirst) {
  Graph c4 = cycle_graph(4);
  FlipEnumerator<LineGenerator> e(c4);
  EXPECT_EQ(e.next(), (VertexSet{1, 3}));
}

// A generator that emits a dominating but non-minimal set.
struct BrokenGenerator {
  struct Context {
    VertexSet d;
  };
  static Context build(const Graph&, const VertexSet& d, Vertex, Vertex) { return {d}; }
  static std::optional<VertexSet> next(const Graph& g, Context&, GeneratorCursor& c) {
    if (c.exhausted) return std::nullopt;
    c.exhausted = true;
    return g.all_vertices();
  }
};

TEST(FlipEnumerator, RejectsNonMinimalEmissions) {
  Graph p3 = path_graph(3);
  FlipEnumerator<BrokenGenerator> e(p3);
  EXPECT_THROW(
      {
        while (e.next()) {
        }
      },
      InvariantFailure);
}

// Property: on random line graphs the driver never emits a set twice, the
// stack never exceeds m + 1 records, and each generator's emissions for one
// flip are pairwise distinct.
TEST(FlipProperties, DistinctEmissionsAndStackBound) {
  std::mt19937 rng(31);
  for (int round = 0; round < 60; ++round) {
    Graph root = testing::random_connected(rng, 4 + rng() % 4, 10);
    auto map = line_graph(root);
    std::map<std::pair<VertexSet, std::pair<Vertex, Vertex>>, std::set<VertexSet>> per_flip;
    bool repeated_in_flip = false;
    DriverOptions options;
    options.on_emission = [&](const VertexSet& parent, FlipPair f, const VertexSet& child) {
      auto& seen = per_flip[{parent, {f.u, f.v}}];
      if (!seen.insert(child).second) repeated_in_flip = true;
    };
    FlipEnumerator<LineGenerator> e(map.line, options);
    std::vector<VertexSet> out;
    while (auto s = e.next()) out.push_back(*s);
    EXPECT_FALSE(testing::has_duplicates(out));
    EXPECT_LE(e.stats().max_stack_depth, map.line.m() + 1);
    EXPECT_FALSE(repeated_in_flip);
  }
}

// Property: saving a generator cursor and rebuilding the context resumes the
// same stream.
TEST(FlipProperties, CursorResume) {
  std::mt19937 rng(32);
  int checked = 0;
  for (int round = 0; round < 80; ++round) {
    Graph root = testing::random_connected(rng, 4 + rng() % 4, 10);
    auto map = line_graph(root);
    const Graph& g = map.line;
    for (const auto& d : oracle::brute_mds(g)) {
      for (FlipPair f : flip_pairs(g, d)) {
        auto full = children_line(g, d, f.u, f.v);
        if (full.size() < 2) continue;
        auto ctx = LineGenerator::build(g, d, f.u, f.v);
        GeneratorCursor cursor;
        const std::size_t cut = 1 + rng() % (full.size() - 1);
        for (std::size_t i = 0; i < cut; ++i) (void)LineGenerator::next(g, ctx, cursor);
        GeneratorCursor saved = cursor;
        auto fresh = LineGenerator::build(g, d, f.u, f.v);
        std::vector<VertexSet> rest;
        while (auto s = LineGenerator::next(g, fresh, saved)) rest.push_back(*s);
        EXPECT_EQ(rest, std::vector<VertexSet>(full.begin() + static_cast<std::ptrdiff_t>(cut),
                                               full.end()));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Cursor, OdometerLastDigitFastest) {
  std::vector<std::size_t> digits{0, 0};
  std::vector<std::size_t> radices{2, 3};
  std::vector<std::vector<std::size_t>> seen{digits};
  while (advance_odometer(digits, radices)) seen.push_back(digits);
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen[1], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(seen[3], (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(digits, (std::vector<std::size_t>{0, 0}));
}

TEST(Cursor, OdometerFrozenDigit) {
  std::vector<std::size_t> digits{0, 1, 0};
  std::vector<std::size_t> radices{2, 3, 2};
  int steps = 1;
  while (advance_odometer(digits, radices, 1)) {
    EXPECT_EQ(digits[1], 1u);
    ++steps;
  }
  EXPECT_EQ(steps, 4);
}

TEST(Cursor, MaskCountsInBinary) {
  std::vector<std::uint8_t> mask(3, 0);
  int steps = 1;
  while (advance_mask(mask)) ++steps;
  EXPECT_EQ(steps, 8);
}

}  // namespace
}  // namespace mdsenum
