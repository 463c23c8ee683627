#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "rpk/digraph.hpp"

namespace th {

inline rpk::Digraph digraph(int n, std::initializer_list<std::pair<int, int>> arcs) {
  rpk::Digraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

inline rpk::ArcColouredDigraph coloured(int n, std::vector<rpk::Arc> arcs) {
  return rpk::ArcColouredDigraph(n, std::move(arcs));
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0, arc i coloured colours[i].
inline rpk::ArcColouredDigraph cycle(int n, std::vector<int> colours) {
  std::vector<rpk::Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, colours[i]});
  return rpk::ArcColouredDigraph(n, std::move(arcs));
}

inline std::vector<int> members(rpk::VertexSet s) { return s.to_vector(); }

inline rpk::ArcColouredDigraph arcless(int n) { return rpk::ArcColouredDigraph(n, {}); }

}  // namespace th
