#include "rpk/digraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "rpk/error.hpp"

namespace rpk {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidDigraph: return "InvalidDigraph";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::SameEndpoints: return "SameEndpoints";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Digraph::Digraph(int order) {
  if (order < 0 || order > kMaxVertices)
    throw Error(Errc::InvalidDigraph,
                "digraph order must lie in [0, 64], got " + std::to_string(order));
  out_.resize(order);
  in_.resize(order);
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw Error(Errc::InvalidDigraph, "arc endpoint out of range");
  if (u == v) throw Error(Errc::InvalidDigraph, "loops are not allowed");
  out_[u].insert(v);
  in_[v].insert(u);
}

void Digraph::remove_arc(int u, int v) {
  out_[u].erase(v);
  in_[v].erase(u);
}

int Digraph::arc_count() const {
  int total = 0;
  for (VertexSet row : out_) total += row.size();
  return total;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> result;
  for (int u = 0; u < order(); ++u)
    for (int v : out_[u]) result.emplace_back(u, v);
  return result;
}

Digraph Digraph::asymmetric_part() const {
  Digraph g(order());
  for (int u = 0; u < order(); ++u)
    for (int v : out_[u] - in_[u]) g.add_arc(u, v);
  return g;
}

Digraph Digraph::restricted_to(VertexSet keep) const {
  Digraph g(order());
  for (int u : keep)
    for (int v : out_[u] & keep) g.add_arc(u, v);
  return g;
}

ArcColouredDigraph::ArcColouredDigraph(int order, std::vector<Arc> arcs)
    : skeleton_(order), arcs_(std::move(arcs)) {
  if (order < 1)
    throw Error(Errc::InvalidDigraph, "an arc-coloured digraph needs at least one vertex");
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  for (const Arc& a : arcs_) {
    if (a.colour <= 0) throw Error(Errc::InvalidDigraph, "arc colours must be positive");
    if (a.from >= 0 && a.from < order && a.to >= 0 && a.to < order &&
        skeleton_.has_arc(a.from, a.to)) {
      throw Error(Errc::InvalidDigraph, "parallel arcs (" + std::to_string(a.from) + ", " +
                                            std::to_string(a.to) + ")");
    }
    skeleton_.add_arc(a.from, a.to);
    palette_.push_back(a.colour);
  }
  std::sort(palette_.begin(), palette_.end());
  palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());

  const auto cells = static_cast<std::size_t>(order) * static_cast<std::size_t>(order);
  colour_.assign(cells, 0);
  colour_index_.assign(cells, -1);
  for (const Arc& a : arcs_) {
    colour_[index(a.from, a.to)] = a.colour;
    colour_index_[index(a.from, a.to)] = static_cast<int>(
        std::lower_bound(palette_.begin(), palette_.end(), a.colour) - palette_.begin());
  }
}

ArcColouredDigraph ArcColouredDigraph::rainbow_recoloured() const {
  std::vector<Arc> fresh(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i].colour = static_cast<int>(i) + 1;
  return ArcColouredDigraph(order(), std::move(fresh));
}

namespace {

// Tarjan's algorithm; returns comp[v] in an arbitrary numbering.
std::vector<int> tarjan(const Digraph& g, int& count) {
  const int n = g.order();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;
  count = 0;

  // Explicit stack of (vertex, remaining successors) to avoid deep recursion.
  std::vector<std::pair<int, VertexSet>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, g.out(root));
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, rest] = frames.back();
      if (!rest.empty()) {
        int w = rest.front();
        rest.erase(w);
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, g.out(w));
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<VertexSet> strong_components(const Digraph& g) {
  int count = 0;
  std::vector<int> comp = tarjan(g, count);
  std::vector<VertexSet> members(count);
  for (int v = 0; v < g.order(); ++v) members[comp[v]].insert(v);

  // Kahn's algorithm on the condensation, keyed by smallest member.
  std::vector<VertexSet> succ(count);
  std::vector<int> indegree(count, 0);
  for (auto [u, v] : g.arcs()) {
    int cu = comp[u], cv = comp[v];
    if (cu != cv && !succ[cu].contains(cv)) {
      succ[cu].insert(cv);
      ++indegree[cv];
    }
  }
  using Entry = std::pair<int, int>;  // (smallest member, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int c = 0; c < count; ++c)
    if (indegree[c] == 0) ready.emplace(members[c].front(), c);

  std::vector<VertexSet> ordered;
  ordered.reserve(count);
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    ordered.push_back(members[c]);
    for (int d : succ[c])
      if (--indegree[d] == 0) ready.emplace(members[d].front(), d);
  }
  return ordered;
}

std::vector<int> topological_order(const Digraph& g) {
  const int n = g.order();
  std::vector<int> indegree(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    indegree[v] = g.in_degree(v);
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : g.out(v))
      if (--indegree[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

bool is_acyclic(const Digraph& g) {
  return g.order() == 0 || !topological_order(g).empty();
}

namespace {

class CycleWalker {
 public:
  CycleWalker(const Digraph& g, int max_length,
              const std::function<bool(std::span<const int>)>& visit)
      : g_(g), max_length_(max_length), visit_(visit) {}

  void run() {
    for (int start = 0; start < g_.order() && !stopped_; ++start) {
      // Only vertices above `start` may appear, so `start` is the minimum.
      allowed_ = VertexSet::from_mask(VertexSet::range(g_.order()).mask() &
                                      ~VertexSet::range(start + 1).mask());
      path_.assign(1, start);
      extend(start, allowed_);
    }
  }

 private:
  void extend(int tail, VertexSet free) {
    const int start = path_.front();
    if (path_.size() >= 2 && g_.has_arc(tail, start)) {
      if (!visit_(path_)) {
        stopped_ = true;
        return;
      }
    }
    if (static_cast<int>(path_.size()) >= max_length_) return;
    for (int next : g_.out(tail) & free) {
      path_.push_back(next);
      VertexSet rest = free;
      rest.erase(next);
      extend(next, rest);
      path_.pop_back();
      if (stopped_) return;
    }
  }

  const Digraph& g_;
  int max_length_;
  const std::function<bool(std::span<const int>)>& visit_;
  VertexSet allowed_;
  std::vector<int> path_;
  bool stopped_ = false;
};

}  // namespace

void for_each_cycle(const Digraph& g, int max_length,
                    const std::function<bool(std::span<const int>)>& visit) {
  if (max_length < 2) return;
  CycleWalker(g, max_length, visit).run();
}

std::vector<Cycle> cycles_up_to(const Digraph& g, int k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "cycle length bound must be at least 2");
  std::vector<Cycle> cycles;
  for_each_cycle(g, k, [&](std::span<const int> c) {
    cycles.emplace_back(c.begin(), c.end());
    return true;
  });
  return cycles;
}

std::vector<Cycle> cycles_of_length(const Digraph& g, int k) {
  std::vector<Cycle> cycles;
  if (k < 2) return cycles;
  for_each_cycle(g, k, [&](std::span<const int> c) {
    if (static_cast<int>(c.size()) == k) cycles.emplace_back(c.begin(), c.end());
    return true;
  });
  return cycles;
}

InducedSubdigraph induced_subdigraph(const ArcColouredDigraph& d, VertexSet s) {
  if (s.empty()) throw Error(Errc::EmptyVertexSet, "induced subdigraph of an empty vertex set");
  if (!s.is_subset_of(d.vertices()))
    throw Error(Errc::InvalidArgument, "vertex set is not contained in the digraph");
  InducedSubdigraph result;
  result.back_map = s.to_vector();
  std::vector<int> forward(d.order(), -1);
  for (std::size_t i = 0; i < result.back_map.size(); ++i)
    forward[result.back_map[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (s.contains(a.from) && s.contains(a.to))
      arcs.push_back({forward[a.from], forward[a.to], a.colour});
  result.graph = ArcColouredDigraph(s.size(), std::move(arcs));
  return result;
}

InducedSubdigraph remove_vertices(const ArcColouredDigraph& d, VertexSet s) {
  return induced_subdigraph(d, d.vertices() - s);
}

}  // namespace rpk
