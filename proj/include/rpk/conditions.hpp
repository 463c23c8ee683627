#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rpk/digraph.hpp"
#include "rpk/pattern.hpp"

namespace rpk {

// --- digraph classes -------------------------------------------------------

/// Every pair of distinct vertices joined by at least one arc.
bool is_semicomplete(const Digraph& g);

/// Semicomplete without 2-cycles.
bool is_tournament(const Digraph& g);

/// u->v->w with u != w forces u and w to be adjacent.
bool is_quasi_transitive(const Digraph& g);

struct Bipartition {
  VertexSet x;  // holds vertex 0
  VertexSet y;
};

/// Partition into two nonempty independent parts with exactly one arc between
/// every cross pair (no 2-cycles), if one exists.
std::optional<Bipartition> bipartite_tournament(const Digraph& g);

/// The single directed cycle of g when g has exactly one.
std::optional<Cycle> unique_cycle(const Digraph& g);

// --- colour conditions -----------------------------------------------------

struct CycleWitness {
  Cycle cycle;
};

struct CopyWitness {
  std::string pattern;
  VertexMap map;
};

using Witness = std::variant<CycleWitness, CopyWitness>;

struct ConditionResult {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds

  explicit operator bool() const { return holds; }
};

/// Distinct colours on the arcs of a cycle (closing arc included).
int cycle_colour_count(const ArcColouredDigraph& d, std::span<const int> cycle);

/// Every cycle of length exactly k is rainbow.
ConditionResult check_small_cycles_rainbow(const ArcColouredDigraph& d, int k);

/// Every 4-cycle carries at least `threshold` distinct colours.
ConditionResult check_4cycles_min_colours(const ArcColouredDigraph& d, int threshold = 3);

/// Every induced copy of the pattern has pairwise distinct colours on its arcs.
ConditionResult check_induced_pattern_rainbow(const ArcColouredDigraph& d,
                                              const PatternGraph& pattern);

/// Every induced TB4 copy is properly coloured: consecutive arcs inside the
/// copy, (u1,u2)(u2,u3) and (u2,u3)(u3,u4), differ in colour.
ConditionResult check_induced_tb4_properly(const ArcColouredDigraph& d);

enum class Condition {
  UniqueCycleRainbow,
  ThreeCyclesRainbow,
  InducedQt4Rainbow,
  FourCyclesThreeColours,
  FourCyclesRainbow,
  SixCyclesRainbow,
  InducedCb5Rainbow,
  InducedTb4Proper,
};

std::string_view condition_key(Condition c);
std::string_view condition_label(Condition c);

/// Re-checks a witness against d: the cycle exists and violates the
/// condition, or the map is an induced copy that violates it.
bool witness_confirms(const ArcColouredDigraph& d, Condition c, const Witness& w);

// --- report ----------------------------------------------------------------

struct ClassReport {
  bool unicyclic = false;
  bool semicomplete = false;
  bool tournament = false;
  bool quasi_transitive = false;
  bool bipartite_tournament = false;
  std::optional<Cycle> cycle;              // when unicyclic
  std::optional<Bipartition> bipartition;  // when bipartite_tournament
  std::vector<std::pair<Condition, ConditionResult>> conditions;

  const ConditionResult* find(Condition c) const;
  bool holds(Condition c) const;
};

/// Runs every class detector and every colour condition (the unique-cycle
/// condition only when the digraph is unicyclic).
ClassReport classify(const ArcColouredDigraph& d);

}  // namespace rpk
