#include "rpk/pattern.hpp"

#include <algorithm>

namespace rpk {

Digraph PatternGraph::digraph() const {
  Digraph g(order());
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

const PatternGraph& qt4_pattern() {
  static const PatternGraph p{
      "QT4",
      {"x", "y", "u", "v"},
      {{0, 2}, {2, 3}, {3, 1}, {1, 2}, {3, 0}},
      {{0, 1, 2, 3}, {1, 0, 2, 3}},
  };
  return p;
}

const PatternGraph& cb5_pattern() {
  static const PatternGraph p{
      "CB5",
      {"u1", "u2", "u3", "u4", "u5"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 0}, {4, 1}},
      {{0, 1, 2, 3, 4}, {4, 1, 2, 3, 0}},
  };
  return p;
}

const PatternGraph& tb4_pattern() {
  static const PatternGraph p{
      "TB4",
      {"u1", "u2", "u3", "u4"},
      {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
      {{0, 1, 2, 3}},
  };
  return p;
}

namespace {

class CopySearch {
 public:
  CopySearch(const Digraph& host, const PatternGraph& pattern,
             const std::function<bool(const VertexMap&)>& visit)
      : host_(host), pattern_(pattern), shape_(pattern.digraph()), visit_(visit) {}

  void run() {
    map_.assign(pattern_.order(), -1);
    if (pattern_.order() <= host_.order()) place(0, VertexSet{});
  }

 private:
  bool orbit_minimal() const {
    for (std::size_t a = 1; a < pattern_.automorphisms.size(); ++a) {
      const auto& sigma = pattern_.automorphisms[a];
      for (std::size_t i = 0; i < map_.size(); ++i) {
        int image = map_[sigma[i]];
        if (image < map_[i]) return false;
        if (image > map_[i]) break;
      }
    }
    return true;
  }

  void place(int i, VertexSet used) {
    if (stopped_) return;
    if (i == pattern_.order()) {
      if (orbit_minimal() && !visit_(map_)) stopped_ = true;
      return;
    }
    for (int h = 0; h < host_.order() && !stopped_; ++h) {
      if (used.contains(h)) continue;
      bool consistent = true;
      for (int j = 0; j < i && consistent; ++j) {
        consistent = shape_.has_arc(j, i) == host_.has_arc(map_[j], h) &&
                     shape_.has_arc(i, j) == host_.has_arc(h, map_[j]);
      }
      if (!consistent) continue;
      map_[i] = h;
      VertexSet next = used;
      next.insert(h);
      place(i + 1, next);
      map_[i] = -1;
    }
  }

  const Digraph& host_;
  const PatternGraph& pattern_;
  Digraph shape_;
  const std::function<bool(const VertexMap&)>& visit_;
  VertexMap map_;
  bool stopped_ = false;
};

}  // namespace

void for_each_induced_copy(const Digraph& host, const PatternGraph& pattern,
                           const std::function<bool(const VertexMap&)>& visit) {
  CopySearch(host, pattern, visit).run();
}

std::vector<VertexMap> induced_copies(const Digraph& host, const PatternGraph& pattern) {
  std::vector<VertexMap> copies;
  for_each_induced_copy(host, pattern, [&](const VertexMap& m) {
    copies.push_back(m);
    return true;
  });
  return copies;
}

}  // namespace rpk
