#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "rpk/conditions.hpp"
#include "rpk/factory.hpp"

using namespace rpk;

namespace {

ArcColouredDigraph recolour(const ArcColouredDigraph& d, std::vector<int> colours) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].colour = colours[i];
  return ArcColouredDigraph(d.order(), arcs);
}

}  // namespace

TEST(Classes, Semicomplete) {
  auto k3 = th::digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
  EXPECT_TRUE(is_semicomplete(k3));
  EXPECT_FALSE(is_tournament(k3));
  EXPECT_FALSE(is_semicomplete(fixture("QT4").graph.skeleton()));
  EXPECT_TRUE(is_semicomplete(Digraph(1)));
  EXPECT_TRUE(is_tournament(th::digraph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(Classes, QuasiTransitive) {
  EXPECT_TRUE(is_quasi_transitive(fixture("QT4").graph.skeleton()));
  EXPECT_FALSE(is_quasi_transitive(th::digraph(3, {{0, 1}, {1, 2}})));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    GenProfile p;
    p.cls = GenClass::Semicomplete;
    p.n = 2 + t % 7;
    p.seed = t;
    EXPECT_TRUE(is_quasi_transitive(generate(p).graph.skeleton()));
  }
}

TEST(Classes, BipartiteTournament) {
  auto fig4 = bipartite_tournament(fixture("FIG4").graph.skeleton());
  ASSERT_TRUE(fig4);
  EXPECT_EQ(fig4->x, (VertexSet{0, 1}));
  EXPECT_EQ(fig4->y, (VertexSet{2, 3, 4}));
  EXPECT_FALSE(bipartite_tournament(th::digraph(3, {{0, 1}, {1, 2}, {2, 0}})));
  auto cb5 = bipartite_tournament(fixture("CB5").graph.skeleton());
  ASSERT_TRUE(cb5);
  EXPECT_EQ(cb5->x, (VertexSet{0, 2, 4}));
  EXPECT_EQ(cb5->y, (VertexSet{1, 3}));
  // A symmetric cross pair is excluded.
  EXPECT_FALSE(bipartite_tournament(th::digraph(2, {{0, 1}, {1, 0}})));
  // A missing cross pair too.
  EXPECT_FALSE(bipartite_tournament(th::digraph(4, {{0, 2}, {0, 3}, {1, 2}})));
  EXPECT_FALSE(bipartite_tournament(Digraph(3)));
}

TEST(Classes, Unicyclic) {
  auto g = th::digraph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {4, 1}});
  auto c = unique_cycle(g);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (Cycle{0, 1, 2}));
  EXPECT_FALSE(unique_cycle(th::digraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}})));
  EXPECT_FALSE(unique_cycle(th::digraph(3, {{0, 1}, {1, 2}})));
}

TEST(SmallCycles, InjectiveColouringPassesEverything) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    auto d = random_coloured_digraph(7, 1, 0.4, rng).rainbow_recoloured();
    for (int k : {3, 4, 6}) EXPECT_TRUE(check_small_cycles_rainbow(d, k));
  }
}

TEST(SmallCycles, MonochromaticTriangle) {
  auto d = th::cycle(3, {2, 2, 2});
  auto r = check_small_cycles_rainbow(d, 3);
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(std::get<CycleWitness>(*r.witness).cycle, (Cycle{0, 1, 2}));
  EXPECT_TRUE(witness_confirms(d, Condition::ThreeCyclesRainbow, *r.witness));
}

TEST(SmallCycles, Fig4FourCyclesAreTwoColoured) {
  auto d = fixture("FIG4").graph;
  auto cycles = cycles_of_length(d.skeleton(), 4);
  ASSERT_EQ(cycles.size(), 2u);
  for (const auto& c : cycles) EXPECT_EQ(cycle_colour_count(d, c), 2);
  EXPECT_FALSE(check_small_cycles_rainbow(d, 4));
  auto r = check_4cycles_min_colours(d, 3);
  EXPECT_FALSE(r);
  EXPECT_TRUE(witness_confirms(d, Condition::FourCyclesThreeColours, *r.witness));
}

TEST(FourCycles, Thresholds) {
  EXPECT_TRUE(check_4cycles_min_colours(th::cycle(4, {1, 2, 3, 4})));
  EXPECT_TRUE(check_4cycles_min_colours(th::cycle(4, {1, 2, 1, 3})));
  EXPECT_FALSE(check_4cycles_min_colours(th::cycle(4, {1, 2, 1, 3}), 4));
  EXPECT_TRUE(check_4cycles_min_colours(th::cycle(3, {1, 1, 1})));
}

TEST(Patterns, Qt4Rainbow) {
  EXPECT_TRUE(check_induced_pattern_rainbow(th::cycle(5, {1, 1, 1, 1, 1}), qt4_pattern()));
  auto qt4 = fixture("QT4").graph;
  EXPECT_TRUE(check_induced_pattern_rainbow(qt4, qt4_pattern()));
  auto bad = recolour(qt4, {1, 2, 3, 4, 1});
  auto r = check_induced_pattern_rainbow(bad, qt4_pattern());
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(std::get<CopyWitness>(*r.witness).pattern, "QT4");
  EXPECT_TRUE(witness_confirms(bad, Condition::InducedQt4Rainbow, *r.witness));
  EXPECT_FALSE(witness_confirms(qt4, Condition::InducedQt4Rainbow, *r.witness));
}

TEST(Patterns, Tb4ProperColouring) {
  EXPECT_TRUE(check_induced_tb4_properly(th::cycle(4, {1, 1, 1, 1})));
  auto tb4 = fixture("TB4").graph;
  EXPECT_TRUE(check_induced_tb4_properly(tb4));
  // Arc order is (u1,u2), (u1,u4), (u2,u3), (u3,u4).
  auto bad = recolour(tb4, {1, 2, 1, 3});
  auto r = check_induced_tb4_properly(bad);
  EXPECT_FALSE(r);
  EXPECT_TRUE(witness_confirms(bad, Condition::InducedTb4Proper, *r.witness));
  // (u1,u4) and (u3,u4) share a head, not consecutive: still proper.
  EXPECT_TRUE(check_induced_tb4_properly(recolour(tb4, {1, 2, 3, 2})));
}

TEST(Conditions, AgreeWithDirectEnumeration) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 120; ++t) {
    const int n = 3 + t % 6;
    auto d = random_coloured_digraph(n, 3, 0.35, rng);
    for (int k : {3, 4, 6}) {
      bool direct = true;
      for (const auto& c : cycles_of_length(d.skeleton(), k))
        direct = direct && cycle_colour_count(d, c) == k;
      auto r = check_small_cycles_rainbow(d, k);
      EXPECT_EQ(r.holds, direct);
      if (!r.holds) {
        Condition c = k == 3 ? Condition::ThreeCyclesRainbow
                             : k == 4 ? Condition::FourCyclesRainbow : Condition::SixCyclesRainbow;
        EXPECT_TRUE(witness_confirms(d, c, *r.witness));
      }
    }
    for (const PatternGraph* p : {&qt4_pattern(), &cb5_pattern()}) {
      bool direct = true;
      for (const auto& m : induced_copies(d.skeleton(), *p)) {
        std::set<int> cs;
        for (auto [a, b] : p->arcs) cs.insert(d.colour(m[a], m[b]));
        direct = direct && cs.size() == p->arcs.size();
      }
      auto r = check_induced_pattern_rainbow(d, *p);
      EXPECT_EQ(r.holds, direct);
      if (!r.holds) {
        Condition c = p == &qt4_pattern() ? Condition::InducedQt4Rainbow
                                          : Condition::InducedCb5Rainbow;
        EXPECT_TRUE(witness_confirms(d, c, *r.witness));
      }
    }
    auto r = check_induced_tb4_properly(d);
    if (!r.holds) EXPECT_TRUE(witness_confirms(d, Condition::InducedTb4Proper, *r.witness));
    // Refining to fresh colours makes every condition hold.
    auto fresh = d.rainbow_recoloured();
    for (int k : {3, 4, 6}) EXPECT_TRUE(check_small_cycles_rainbow(fresh, k));
    EXPECT_TRUE(check_induced_pattern_rainbow(fresh, qt4_pattern()));
    EXPECT_TRUE(check_induced_pattern_rainbow(fresh, cb5_pattern()));
    EXPECT_TRUE(check_induced_tb4_properly(fresh));
  }
}

TEST(Classify, Fig4Report) {
  auto rep = classify(fixture("FIG4").graph);
  EXPECT_TRUE(rep.bipartite_tournament);
  EXPECT_FALSE(rep.unicyclic);
  EXPECT_FALSE(rep.holds(Condition::FourCyclesThreeColours));
  EXPECT_EQ(rep.find(Condition::UniqueCycleRainbow), nullptr);
  EXPECT_TRUE(rep.holds(Condition::ThreeCyclesRainbow));
}

TEST(Classify, ArclessDigraphPassesAllCycleConditions) {
  auto rep = classify(th::arcless(3));
  for (const auto& [c, r] : rep.conditions) EXPECT_TRUE(r.holds) << condition_key(c);
}

TEST(Classify, UnicyclicReportsItsCycleCondition) {
  auto rep = classify(th::cycle(3, {1, 1, 2}));
  EXPECT_TRUE(rep.unicyclic);
  EXPECT_TRUE(rep.semicomplete);
  ASSERT_NE(rep.find(Condition::UniqueCycleRainbow), nullptr);
  EXPECT_FALSE(rep.holds(Condition::UniqueCycleRainbow));
}
