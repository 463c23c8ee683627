#pragma once

#include <optional>
#include <vector>

#include "rpk/digraph.hpp"

namespace rpk {

/// A rainbow path: vertex-simple, every arc on a different colour.
struct WitnessPath {
  std::vector<int> vertices;
  std::vector<int> colours;  // colours[i] is the colour of (vertices[i], vertices[i+1])

  int length() const { return static_cast<int>(colours.size()); }
};

/// True when `path` is a rainbow path of `d` joining its first and last vertex.
bool is_rainbow_path(const ArcColouredDigraph& d, const WitnessPath& path);

/// Shortest rainbow (u, v)-path, if any. Throws Error(SameEndpoints) if u == v.
std::optional<WitnessPath> rainbow_path(const ArcColouredDigraph& d, int u, int v);

bool rainbow_path_exists(const ArcColouredDigraph& d, int u, int v);

/// R[u][v] == "there is a rainbow (u, v)-path"; the diagonal is false.
class RainbowReachability {
 public:
  RainbowReachability() = default;
  explicit RainbowReachability(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}

  int order() const { return static_cast<int>(rows_.size()); }
  bool operator()(int u, int v) const { return rows_[u].contains(v); }

  /// Vertices u rainbow-reaches.
  VertexSet reach(int u) const { return rows_[u]; }

  /// True when u rainbow-reaches some member of s.
  bool reaches_any(int u, VertexSet s) const { return rows_[u].intersects(s); }

  friend bool operator==(const RainbowReachability&, const RainbowReachability&) = default;

 private:
  std::vector<VertexSet> rows_;
};

/// All rainbow-reachable targets of one source, found by exhaustive
/// backtracking over (vertex, visited set, used colours).
VertexSet rainbow_reach_from(const ArcColouredDigraph& d, int source);

/// Reference implementation: one source after another.
RainbowReachability rainbow_reachability_serial(const ArcColouredDigraph& d);

/// OpenMP version; sources are processed concurrently. Identical output to the
/// serial reference.
RainbowReachability rainbow_reachability(const ArcColouredDigraph& d);

/// Rainbow closure: arc (u, v) iff R[u][v]. Every arc of d is kept, since a
/// single arc is a rainbow path.
Digraph rainbow_closure(const ArcColouredDigraph& d);
Digraph rainbow_closure(const RainbowReachability& r);

}  // namespace rpk
