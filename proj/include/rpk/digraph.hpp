#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "rpk/vertex_set.hpp"

namespace rpk {

/// Directed cycle as a vertex sequence; the closing arc back to the first
/// vertex is implicit. Canonical form starts at the minimum vertex.
using Cycle = std::vector<int>;

/// Uncoloured digraph without loops or parallel arcs, stored as one out-row and
/// one in-row bitmask per vertex.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);

  int order() const { return static_cast<int>(out_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Adds (u, v); adding an existing arc is a no-op. Loops are rejected.
  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  bool has_arc(int u, int v) const { return out_[u].contains(v); }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }
  VertexSet out(int v) const { return out_[v]; }
  VertexSet in(int v) const { return in_[v]; }
  int out_degree(int v) const { return out_[v].size(); }
  int in_degree(int v) const { return in_[v].size(); }
  int arc_count() const;

  /// Arcs ordered by (from, to).
  std::vector<std::pair<int, int>> arcs() const;

  /// Symmetrical arc: its reverse is present too.
  bool symmetric(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }

  /// Subdigraph formed by the arcs whose reverse is absent.
  Digraph asymmetric_part() const;

  /// Digraph on the same vertices restricted to arcs inside `keep`; vertices
  /// outside `keep` stay as isolated indices.
  Digraph restricted_to(VertexSet keep) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

struct Arc {
  int from = 0;
  int to = 0;
  int colour = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Arc-coloured digraph. Immutable after construction.
///
/// Colours are arbitrary positive integers and are preserved exactly; the
/// colour count is the number of distinct values in use. Each arc also has a
/// dense palette index in [0, colour_count) for bitmask and array lookups.
class ArcColouredDigraph {
 public:
  ArcColouredDigraph() = default;

  /// Throws Error(InvalidDigraph) on loops, parallel arcs, endpoints out of
  /// range, non-positive colours, or order outside [1, 64].
  ArcColouredDigraph(int order, std::vector<Arc> arcs);

  int order() const { return skeleton_.order(); }
  VertexSet vertices() const { return skeleton_.vertices(); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int colour_count() const { return static_cast<int>(palette_.size()); }

  /// Sorted by (from, to).
  std::span<const Arc> arcs() const { return arcs_; }

  /// Distinct colours in increasing order; palette()[i] is the colour with
  /// palette index i.
  std::span<const int> palette() const { return palette_; }

  const Digraph& skeleton() const { return skeleton_; }
  bool has_arc(int u, int v) const { return skeleton_.has_arc(u, v); }
  bool adjacent(int u, int v) const { return skeleton_.adjacent(u, v); }
  VertexSet out(int v) const { return skeleton_.out(v); }
  VertexSet in(int v) const { return skeleton_.in(v); }
  int out_degree(int v) const { return skeleton_.out_degree(v); }
  int in_degree(int v) const { return skeleton_.in_degree(v); }

  /// Colour of (u, v), or 0 when the arc is absent.
  int colour(int u, int v) const { return colour_[index(u, v)]; }

  /// Palette index of (u, v), or -1 when the arc is absent.
  int colour_index(int u, int v) const { return colour_index_[index(u, v)]; }

  /// Same digraph with every arc on its own fresh colour 1..arc_count.
  ArcColouredDigraph rainbow_recoloured() const;

  friend bool operator==(const ArcColouredDigraph& a, const ArcColouredDigraph& b) {
    return a.order() == b.order() && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(order()) +
           static_cast<std::size_t>(v);
  }

  Digraph skeleton_;
  std::vector<Arc> arcs_;
  std::vector<int> palette_;
  std::vector<int> colour_;
  std::vector<int> colour_index_;
};

/// Strong components ordered so that no arc runs from a later component to an
/// earlier one; among components available at the same time, the one holding
/// the smallest vertex comes first.
std::vector<VertexSet> strong_components(const Digraph& g);

/// Topological order (ties: smallest index first), or empty when g has a
/// cycle and order() > 0.
std::vector<int> topological_order(const Digraph& g);
bool is_acyclic(const Digraph& g);

/// Calls `visit` once for every directed cycle of length in [2, max_length]
/// in canonical rotation. Enumeration stops when `visit` returns false.
void for_each_cycle(const Digraph& g, int max_length,
                    const std::function<bool(std::span<const int>)>& visit);

/// All directed cycles of length <= k (k >= 2), each once, canonical rotation.
std::vector<Cycle> cycles_up_to(const Digraph& g, int k);

/// Cycles of length exactly k.
std::vector<Cycle> cycles_of_length(const Digraph& g, int k);

struct InducedSubdigraph {
  ArcColouredDigraph graph;
  /// back_map[i] is the index in the host digraph of vertex i.
  std::vector<int> back_map;
};

/// D[S] with vertices renumbered in increasing host order. Throws
/// Error(EmptyVertexSet) when S is empty.
InducedSubdigraph induced_subdigraph(const ArcColouredDigraph& d, VertexSet s);

/// D - S: removes the given vertices.
InducedSubdigraph remove_vertices(const ArcColouredDigraph& d, VertexSet s);

}  // namespace rpk
