#include "rpk/conditions.hpp"

#include <algorithm>
#include <set>

namespace rpk {

bool is_semicomplete(const Digraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    VertexSet others = g.vertices();
    others.erase(u);
    if (!others.is_subset_of(g.out(u) | g.in(u))) return false;
  }
  return true;
}

bool is_tournament(const Digraph& g) {
  if (!is_semicomplete(g)) return false;
  for (int u = 0; u < g.order(); ++u)
    if (g.out(u).intersects(g.in(u))) return false;
  return true;
}

bool is_quasi_transitive(const Digraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.in(v)) {
      for (int w : g.out(v)) {
        if (u != w && !g.adjacent(u, w)) return false;
      }
    }
  }
  return true;
}

std::optional<Bipartition> bipartite_tournament(const Digraph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  // The underlying graph of a bipartite tournament is complete bipartite, so
  // the part of vertex 0 is exactly its non-neighbourhood plus itself.
  VertexSet x = g.vertices() - (g.out(0) | g.in(0));
  VertexSet y = g.vertices() - x;
  if (y.empty()) return std::nullopt;
  for (int u = 0; u < n; ++u) {
    VertexSet same = x.contains(u) ? x : y;
    VertexSet other = x.contains(u) ? y : x;
    VertexSet nb = g.out(u) | g.in(u);
    if (nb.intersects(same)) return std::nullopt;
    if (!other.is_subset_of(nb)) return std::nullopt;
    if (g.out(u).intersects(g.in(u))) return std::nullopt;
  }
  return Bipartition{x, y};
}

std::optional<Cycle> unique_cycle(const Digraph& g) {
  std::optional<Cycle> found;
  int count = 0;
  for_each_cycle(g, g.order(), [&](std::span<const int> c) {
    if (++count > 1) return false;
    found.emplace(c.begin(), c.end());
    return true;
  });
  if (count != 1) return std::nullopt;
  return found;
}

int cycle_colour_count(const ArcColouredDigraph& d, std::span<const int> cycle) {
  std::set<int> colours;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    colours.insert(d.colour(cycle[i], cycle[(i + 1) % cycle.size()]));
  return static_cast<int>(colours.size());
}

namespace {

ConditionResult cycle_condition(const ArcColouredDigraph& d, int length, int min_colours) {
  ConditionResult result;
  for_each_cycle(d.skeleton(), length, [&](std::span<const int> c) {
    if (static_cast<int>(c.size()) != length) return true;
    if (cycle_colour_count(d, c) >= min_colours) return true;
    result.holds = false;
    result.witness = CycleWitness{Cycle(c.begin(), c.end())};
    return false;
  });
  return result;
}

// Arcs of the pattern image, as host arcs.
std::vector<std::pair<int, int>> image_arcs(const PatternGraph& p, const VertexMap& m) {
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : p.arcs) arcs.emplace_back(m[a], m[b]);
  return arcs;
}

bool copy_rainbow(const ArcColouredDigraph& d, const PatternGraph& p, const VertexMap& m) {
  std::set<int> colours;
  for (auto [u, v] : image_arcs(p, m))
    if (!colours.insert(d.colour(u, v)).second) return false;
  return true;
}

bool copy_properly_coloured(const ArcColouredDigraph& d, const PatternGraph& p,
                            const VertexMap& m) {
  for (auto [a, b] : p.arcs)
    for (auto [c, e] : p.arcs)
      if (b == c && d.colour(m[a], m[b]) == d.colour(m[c], m[e])) return false;
  return true;
}

bool is_induced_copy(const ArcColouredDigraph& d, const PatternGraph& p, const VertexMap& m) {
  if (static_cast<int>(m.size()) != p.order()) return false;
  VertexSet used;
  for (int v : m) {
    if (v < 0 || v >= d.order() || used.contains(v)) return false;
    used.insert(v);
  }
  Digraph shape = p.digraph();
  for (int i = 0; i < p.order(); ++i)
    for (int j = 0; j < p.order(); ++j)
      if (i != j && shape.has_arc(i, j) != d.has_arc(m[i], m[j])) return false;
  return true;
}

bool is_cycle_of(const ArcColouredDigraph& d, const Cycle& c) {
  if (c.size() < 2) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= d.order() || seen.contains(c[i])) return false;
    seen.insert(c[i]);
    if (!d.has_arc(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace

ConditionResult check_small_cycles_rainbow(const ArcColouredDigraph& d, int k) {
  return cycle_condition(d, k, k);
}

ConditionResult check_4cycles_min_colours(const ArcColouredDigraph& d, int threshold) {
  return cycle_condition(d, 4, threshold);
}

ConditionResult check_induced_pattern_rainbow(const ArcColouredDigraph& d,
                                              const PatternGraph& pattern) {
  ConditionResult result;
  for_each_induced_copy(d.skeleton(), pattern, [&](const VertexMap& m) {
    if (copy_rainbow(d, pattern, m)) return true;
    result.holds = false;
    result.witness = CopyWitness{pattern.name, m};
    return false;
  });
  return result;
}

ConditionResult check_induced_tb4_properly(const ArcColouredDigraph& d) {
  const PatternGraph& tb4 = tb4_pattern();
  ConditionResult result;
  for_each_induced_copy(d.skeleton(), tb4, [&](const VertexMap& m) {
    if (copy_properly_coloured(d, tb4, m)) return true;
    result.holds = false;
    result.witness = CopyWitness{tb4.name, m};
    return false;
  });
  return result;
}

std::string_view condition_key(Condition c) {
  switch (c) {
    case Condition::UniqueCycleRainbow: return "unique_cycle_rainbow";
    case Condition::ThreeCyclesRainbow: return "three_cycles_rainbow";
    case Condition::InducedQt4Rainbow: return "induced_qt4_rainbow";
    case Condition::FourCyclesThreeColours: return "four_cycles_min3_colours";
    case Condition::FourCyclesRainbow: return "four_cycles_rainbow";
    case Condition::SixCyclesRainbow: return "six_cycles_rainbow";
    case Condition::InducedCb5Rainbow: return "induced_cb5_rainbow";
    case Condition::InducedTb4Proper: return "induced_tb4_properly_coloured";
  }
  return "";
}

std::string_view condition_label(Condition c) {
  switch (c) {
    case Condition::UniqueCycleRainbow: return "unique cycle rainbow";
    case Condition::ThreeCyclesRainbow: return "3-cycles rainbow";
    case Condition::InducedQt4Rainbow: return "induced QT4 rainbow";
    case Condition::FourCyclesThreeColours: return "4-cycles >= 3 colours";
    case Condition::FourCyclesRainbow: return "4-cycles rainbow";
    case Condition::SixCyclesRainbow: return "6-cycles rainbow";
    case Condition::InducedCb5Rainbow: return "induced CB5 rainbow";
    case Condition::InducedTb4Proper: return "induced TB4 properly coloured";
  }
  return "";
}

bool witness_confirms(const ArcColouredDigraph& d, Condition c, const Witness& w) {
  if (const auto* cw = std::get_if<CycleWitness>(&w)) {
    if (!is_cycle_of(d, cw->cycle)) return false;
    const int len = static_cast<int>(cw->cycle.size());
    const int colours = cycle_colour_count(d, cw->cycle);
    switch (c) {
      case Condition::UniqueCycleRainbow: return colours < len;
      case Condition::ThreeCyclesRainbow: return len == 3 && colours < 3;
      case Condition::FourCyclesThreeColours: return len == 4 && colours < 3;
      case Condition::FourCyclesRainbow: return len == 4 && colours < 4;
      case Condition::SixCyclesRainbow: return len == 6 && colours < 6;
      default: return false;
    }
  }
  const auto& copy = std::get<CopyWitness>(w);
  const PatternGraph* p = nullptr;
  switch (c) {
    case Condition::InducedQt4Rainbow: p = &qt4_pattern(); break;
    case Condition::InducedCb5Rainbow: p = &cb5_pattern(); break;
    case Condition::InducedTb4Proper: p = &tb4_pattern(); break;
    default: return false;
  }
  if (copy.pattern != p->name || !is_induced_copy(d, *p, copy.map)) return false;
  return c == Condition::InducedTb4Proper ? !copy_properly_coloured(d, *p, copy.map)
                                          : !copy_rainbow(d, *p, copy.map);
}

const ConditionResult* ClassReport::find(Condition c) const {
  for (const auto& [cond, result] : conditions)
    if (cond == c) return &result;
  return nullptr;
}

bool ClassReport::holds(Condition c) const {
  const ConditionResult* r = find(c);
  return r != nullptr && r->holds;
}

ClassReport classify(const ArcColouredDigraph& d) {
  const Digraph& g = d.skeleton();
  ClassReport report;
  report.cycle = unique_cycle(g);
  report.unicyclic = report.cycle.has_value();
  report.semicomplete = is_semicomplete(g);
  report.tournament = is_tournament(g);
  report.quasi_transitive = is_quasi_transitive(g);
  report.bipartition = bipartite_tournament(g);
  report.bipartite_tournament = report.bipartition.has_value();

  if (report.unicyclic) {
    ConditionResult r;
    if (cycle_colour_count(d, *report.cycle) < static_cast<int>(report.cycle->size())) {
      r.holds = false;
      r.witness = CycleWitness{*report.cycle};
    }
    report.conditions.emplace_back(Condition::UniqueCycleRainbow, r);
  }
  report.conditions.emplace_back(Condition::ThreeCyclesRainbow, check_small_cycles_rainbow(d, 3));
  report.conditions.emplace_back(Condition::InducedQt4Rainbow,
                                 check_induced_pattern_rainbow(d, qt4_pattern()));
  report.conditions.emplace_back(Condition::FourCyclesThreeColours, check_4cycles_min_colours(d, 3));
  report.conditions.emplace_back(Condition::FourCyclesRainbow, check_small_cycles_rainbow(d, 4));
  report.conditions.emplace_back(Condition::SixCyclesRainbow, check_small_cycles_rainbow(d, 6));
  report.conditions.emplace_back(Condition::InducedCb5Rainbow,
                                 check_induced_pattern_rainbow(d, cb5_pattern()));
  report.conditions.emplace_back(Condition::InducedTb4Proper, check_induced_tb4_properly(d));
  return report;
}

}  // namespace rpk
