#include "rpk/rainbow.hpp"

#include <algorithm>

#include "rpk/error.hpp"

namespace rpk {

bool is_rainbow_path(const ArcColouredDigraph& d, const WitnessPath& path) {
  if (path.vertices.size() < 2 || path.colours.size() + 1 != path.vertices.size()) return false;
  VertexSet seen;
  for (int v : path.vertices) {
    if (v < 0 || v >= d.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  std::vector<int> colours = path.colours;
  for (std::size_t i = 0; i < colours.size(); ++i) {
    if (d.colour(path.vertices[i], path.vertices[i + 1]) != colours[i] || colours[i] == 0)
      return false;
  }
  std::sort(colours.begin(), colours.end());
  return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

namespace {

// Depth-first backtracking over rainbow paths starting at one source.
class RainbowSearch {
 public:
  explicit RainbowSearch(const ArcColouredDigraph& d)
      : d_(d), used_(static_cast<std::size_t>(d.colour_count()), 0),
        max_length_(std::min(d.order() - 1, d.colour_count())) {}

  // Depth-limited search for a path source -> target of length <= limit.
  bool find(int source, int target, int limit, std::vector<int>& path) {
    path.assign(1, source);
    target_ = target;
    limit_ = std::min(limit, max_length_);
    return descend(source, VertexSet::singleton(source), path);
  }

  VertexSet reach_all(int source) {
    reached_ = VertexSet{};
    goal_ = d_.vertices();
    goal_.erase(source);
    sweep(source, VertexSet::singleton(source), 0);
    return reached_;
  }

 private:
  bool descend(int tail, VertexSet visited, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size()) - 1;
    if (depth >= limit_) return false;
    for (int next : d_.out(tail) - visited) {
      const int c = d_.colour_index(tail, next);
      if (used_[c]) continue;
      path.push_back(next);
      if (next == target_) return true;
      used_[c] = 1;
      VertexSet grown = visited;
      grown.insert(next);
      bool hit = descend(next, grown, path);
      used_[c] = 0;
      if (hit) return true;
      path.pop_back();
    }
    return false;
  }

  // Returns true once every vertex has been reached.
  bool sweep(int tail, VertexSet visited, int depth) {
    if (depth >= max_length_) return false;
    for (int next : d_.out(tail) - visited) {
      const int c = d_.colour_index(tail, next);
      if (used_[c]) continue;
      reached_.insert(next);
      if (reached_ == goal_) return true;
      used_[c] = 1;
      VertexSet grown = visited;
      grown.insert(next);
      bool done = sweep(next, grown, depth + 1);
      used_[c] = 0;
      if (done) return true;
    }
    return false;
  }

  const ArcColouredDigraph& d_;
  std::vector<char> used_;
  int max_length_;
  int target_ = -1;
  int limit_ = 0;
  VertexSet reached_;
  VertexSet goal_;
};

void check_vertex(const ArcColouredDigraph& d, int v) {
  if (v < 0 || v >= d.order())
    throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::optional<WitnessPath> rainbow_path(const ArcColouredDigraph& d, int u, int v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw Error(Errc::SameEndpoints, "rainbow path endpoints must differ");
  RainbowSearch search(d);
  std::vector<int> path;
  const int bound = std::min(d.order() - 1, d.colour_count());
  // Iterative deepening yields a shortest witness.
  for (int limit = 1; limit <= bound; ++limit) {
    if (search.find(u, v, limit, path)) {
      WitnessPath w;
      w.vertices = path;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        w.colours.push_back(d.colour(path[i], path[i + 1]));
      return w;
    }
  }
  return std::nullopt;
}

bool rainbow_path_exists(const ArcColouredDigraph& d, int u, int v) {
  return rainbow_path(d, u, v).has_value();
}

VertexSet rainbow_reach_from(const ArcColouredDigraph& d, int source) {
  check_vertex(d, source);
  return RainbowSearch(d).reach_all(source);
}

RainbowReachability rainbow_reachability_serial(const ArcColouredDigraph& d) {
  std::vector<VertexSet> rows(d.order());
  for (int u = 0; u < d.order(); ++u) rows[u] = RainbowSearch(d).reach_all(u);
  return RainbowReachability(std::move(rows));
}

RainbowReachability rainbow_reachability(const ArcColouredDigraph& d) {
  const int n = d.order();
  std::vector<VertexSet> rows(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int u = 0; u < n; ++u) rows[u] = RainbowSearch(d).reach_all(u);
  return RainbowReachability(std::move(rows));
}

Digraph rainbow_closure(const RainbowReachability& r) {
  Digraph g(r.order());
  for (int u = 0; u < r.order(); ++u)
    for (int v : r.reach(u)) g.add_arc(u, v);
  return g;
}

Digraph rainbow_closure(const ArcColouredDigraph& d) {
  return rainbow_closure(rainbow_reachability(d));
}

}  // namespace rpk
