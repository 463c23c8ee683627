#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rpk/digraph.hpp"

namespace rpk {

/// Small fixed uncoloured digraph whose induced copies are searched for.
struct PatternGraph {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> arcs;
  /// Full automorphism group as permutations of pattern vertices; entry 0 is
  /// the identity.
  std::vector<std::vector<int>> automorphisms;

  int order() const { return static_cast<int>(labels.size()); }
  Digraph digraph() const;
};

/// x, y, u, v with x->u, u->v, v->y, y->u, v->x.
const PatternGraph& qt4_pattern();
/// u1..u5 with u1->u2, u2->u3, u3->u4, u4->u5, u4->u1, u5->u2.
const PatternGraph& cb5_pattern();
/// u1..u4 with u1->u2, u2->u3, u3->u4, u1->u4.
const PatternGraph& tb4_pattern();

/// map[i] is the host vertex playing pattern vertex i.
using VertexMap = std::vector<int>;

/// Every induced copy of `pattern` in `host`, one representative per
/// automorphism orbit (the lexicographically smallest map of the orbit).
/// Reported in lexicographic order of the maps.
std::vector<VertexMap> induced_copies(const Digraph& host, const PatternGraph& pattern);

/// Same as above, stopping after the first copy for which `visit` returns
/// false.
void for_each_induced_copy(const Digraph& host, const PatternGraph& pattern,
                           const std::function<bool(const VertexMap&)>& visit);

}  // namespace rpk
