#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rpk/error.hpp"
#include "rpk/factory.hpp"

using namespace rpk;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.front(), 0);
  s.erase(0);
  EXPECT_EQ(th::members(s), (std::vector<int>{3, 5}));
  EXPECT_EQ(to_string(VertexSet{0, 3}), "{0, 3}");
  EXPECT_EQ(to_string(VertexSet{}), "{}");
  EXPECT_EQ((VertexSet{1, 2} | VertexSet{2, 4}), (VertexSet{1, 2, 4}));
  EXPECT_EQ((VertexSet{1, 2} & VertexSet{2, 4}), (VertexSet{2}));
  EXPECT_EQ((VertexSet{1, 2} - VertexSet{2, 4}), (VertexSet{1}));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
}

TEST(VertexSet, CanonicalOrderIsSizeThenLexicographic) {
  EXPECT_LT((VertexSet{5}), (VertexSet{0, 1}));
  EXPECT_LT((VertexSet{0}), (VertexSet{1}));
  EXPECT_LT((VertexSet{0, 3}), (VertexSet{1, 2}));
  EXPECT_LT((VertexSet{0, 1, 5}), (VertexSet{0, 2, 3}));
}

TEST(ArcColouredDigraph, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { th::coloured(2, {{0, 0, 1}}); }), Errc::InvalidDigraph);
  EXPECT_EQ(code_of([] { th::coloured(2, {{0, 1, 1}, {0, 1, 2}}); }), Errc::InvalidDigraph);
  EXPECT_EQ(code_of([] { th::coloured(2, {{0, 2, 1}}); }), Errc::InvalidDigraph);
  EXPECT_EQ(code_of([] { th::coloured(2, {{0, 1, 0}}); }), Errc::InvalidDigraph);
  EXPECT_EQ(code_of([] { th::coloured(0, {}); }), Errc::InvalidDigraph);
  EXPECT_EQ(code_of([] { th::coloured(65, {}); }), Errc::InvalidDigraph);
}

TEST(ArcColouredDigraph, SymmetricPairsHaveIndependentColours) {
  auto d = th::coloured(2, {{0, 1, 4}, {1, 0, 9}});
  EXPECT_EQ(d.colour(0, 1), 4);
  EXPECT_EQ(d.colour(1, 0), 9);
  EXPECT_TRUE(d.skeleton().symmetric(0, 1));
  EXPECT_EQ(d.colour_count(), 2);
  EXPECT_EQ(d.colour_index(0, 1), 0);
  EXPECT_EQ(d.colour_index(1, 0), 1);
}

TEST(ArcColouredDigraph, ColourCountAndAbsentArcs) {
  auto d = th::coloured(3, {{0, 1, 7}, {1, 2, 7}, {2, 0, 3}});
  EXPECT_EQ(d.colour_count(), 2);
  EXPECT_EQ(d.colour(0, 2), 0);
  EXPECT_EQ(d.colour_index(0, 2), -1);
  EXPECT_EQ(d.out_degree(0), 1);
  EXPECT_EQ(d.in_degree(0), 1);
  auto r = d.rainbow_recoloured();
  EXPECT_EQ(r.colour_count(), 3);
  EXPECT_EQ(r.skeleton(), d.skeleton());
}

TEST(StrongComponents, SingleCycle) {
  auto comps = strong_components(th::digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), 3);
}

TEST(StrongComponents, PathInOrder) {
  auto comps = strong_components(th::digraph(3, {{0, 1}, {1, 2}}));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], VertexSet{0});
  EXPECT_EQ(comps[1], VertexSet{1});
  EXPECT_EQ(comps[2], VertexSet{2});
}

TEST(StrongComponents, ReversedPathAndTieBreak) {
  // {2} and {3} start out available; the smaller one wins each tie.
  auto comps = strong_components(th::digraph(4, {{2, 1}, {1, 0}}));
  ASSERT_EQ(comps.size(), 4u);
  EXPECT_EQ(comps[0], VertexSet{2});
  EXPECT_EQ(comps[1], VertexSet{1});
  EXPECT_EQ(comps[2], VertexSet{0});
  EXPECT_EQ(comps[3], VertexSet{3});
}

TEST(StrongComponents, Qt4IsStrong) {
  // Transitive closure: every pair mutually reachable.
  auto g = fixture("QT4").graph.skeleton();
  auto comps = strong_components(g);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), 4);
}

TEST(StrongComponents, NoBackwardArcsOnRandomDigraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 12;
    auto d = random_coloured_digraph(n, 2, 0.2, rng);
    auto comps = strong_components(d.skeleton());
    std::vector<int> where(n, -1);
    VertexSet seen;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
      EXPECT_FALSE(comps[i].intersects(seen));
      seen |= comps[i];
      for (int v : comps[i]) where[v] = i;
    }
    EXPECT_EQ(seen, d.vertices());
    for (const Arc& a : d.arcs()) EXPECT_LE(where[a.from], where[a.to]);
  }
}

TEST(Cycles, ThreeCycle) {
  auto cs = cycles_up_to(th::digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 3);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0], (Cycle{0, 1, 2}));
}

TEST(Cycles, Cb5HasExactlyTwoFourCycles) {
  auto cs = cycles_up_to(fixture("CB5").graph.skeleton(), 6);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0], (Cycle{0, 1, 2, 3}));
  EXPECT_EQ(cs[1], (Cycle{1, 2, 3, 4}));
}

TEST(Cycles, AcyclicHasNone) {
  EXPECT_TRUE(cycles_up_to(th::digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), 4).empty());
}

TEST(Cycles, BoundBelowTwoRejected) {
  EXPECT_EQ(code_of([] { cycles_up_to(Digraph(3), 1); }), Errc::InvalidArgument);
}

TEST(Cycles, TwoCycleCountsOnce) {
  auto cs = cycles_up_to(th::digraph(2, {{0, 1}, {1, 0}}), 2);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0], (Cycle{0, 1}));
}

TEST(Cycles, MatchesOracleOnRandomDigraphs) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 7;
    auto g = random_coloured_digraph(n, 1, 0.35, rng).skeleton();
    auto mine = cycles_up_to(g, n);
    std::set<std::vector<int>> got(mine.begin(), mine.end());
    EXPECT_EQ(got.size(), mine.size()) << "duplicate cycle";
    EXPECT_EQ(got, oracle::cycles(g));
    for (const auto& c : mine) EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
    for (int k = 2; k <= n; ++k)
      for (const auto& c : cycles_of_length(g, k)) EXPECT_EQ(static_cast<int>(c.size()), k);
  }
}

TEST(Topological, OrderAndAcyclicity) {
  auto g = th::digraph(4, {{3, 1}, {1, 0}, {2, 0}});
  EXPECT_TRUE(is_acyclic(g));
  EXPECT_EQ(topological_order(g), (std::vector<int>{2, 3, 1, 0}));
  EXPECT_FALSE(is_acyclic(th::digraph(2, {{0, 1}, {1, 0}})));
  EXPECT_TRUE(topological_order(th::digraph(2, {{0, 1}, {1, 0}})).empty());
}

TEST(InducedSubdigraph, WholeSetIsIdentity) {
  auto d = fixture("QT4").graph;
  auto sub = induced_subdigraph(d, d.vertices());
  EXPECT_EQ(sub.graph, d);
  EXPECT_EQ(sub.back_map, (std::vector<int>{0, 1, 2, 3}));
}

TEST(InducedSubdigraph, Qt4WithoutYIsThreeCycle) {
  // x, u, v = 0, 2, 3 give x -> u -> v -> x.
  auto d = fixture("QT4").graph;
  auto sub = induced_subdigraph(d, VertexSet{0, 2, 3});
  EXPECT_EQ(sub.back_map, (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(sub.graph.arc_count(), 3);
  EXPECT_TRUE(sub.graph.has_arc(0, 1));
  EXPECT_TRUE(sub.graph.has_arc(1, 2));
  EXPECT_TRUE(sub.graph.has_arc(2, 0));
  EXPECT_EQ(sub.graph.colour(0, 1), d.colour(0, 2));
  EXPECT_EQ(sub.graph.colour(2, 0), d.colour(3, 0));
}

TEST(InducedSubdigraph, SingletonAndEmpty) {
  auto d = fixture("CB5").graph;
  auto sub = induced_subdigraph(d, VertexSet{3});
  EXPECT_EQ(sub.graph.order(), 1);
  EXPECT_EQ(sub.graph.arc_count(), 0);
  EXPECT_EQ(code_of([&] { induced_subdigraph(d, VertexSet{}); }), Errc::EmptyVertexSet);
}

TEST(InducedSubdigraph, PreservesColoursOnRandomSubsets) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto d = random_coloured_digraph(8, 5, 0.4, rng);
    VertexSet s = VertexSet::from_mask(rng() & 0xff);
    if (s.empty()) continue;
    auto sub = induced_subdigraph(d, s);
    for (int i = 0; i < sub.graph.order(); ++i)
      for (int j = 0; j < sub.graph.order(); ++j)
        if (i != j) EXPECT_EQ(sub.graph.colour(i, j), d.colour(sub.back_map[i], sub.back_map[j]));
    auto rest = remove_vertices(d, d.vertices() - s);
    EXPECT_EQ(rest.graph, sub.graph);
  }
}
