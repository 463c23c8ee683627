#include "rpk/factory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rpk/conditions.hpp"
#include "rpk/error.hpp"
#include "rpk/pattern.hpp"

namespace rpk {

namespace {

Instance from_pattern(const PatternGraph& p) {
  std::vector<Arc> arcs;
  int colour = 1;
  for (auto [a, b] : p.arcs) arcs.push_back({a, b, colour++});
  return {ArcColouredDigraph(p.order(), std::move(arcs)), p.labels};
}

Instance fig4() {
  enum { x1, x2, y1, y2, y3 };
  std::vector<Arc> arcs = {
      {x1, y1, 1}, {x1, y2, 1}, {x2, y3, 1}, {y3, x1, 2}, {y1, x2, 2}, {y2, x2, 2},
  };
  return {ArcColouredDigraph(5, std::move(arcs)), {"x1", "x2", "y1", "y2", "y3"}};
}

std::vector<std::string> plain_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Arc shape under construction plus its colouring; colours are assigned once
// the shape is final.
class Draft {
 public:
  explicit Draft(int n) : n_(n), shape_(n) {}

  Digraph& shape() { return shape_; }
  int order() const { return n_; }

  void colour_all(const GenProfile& p, std::mt19937_64& rng) {
    colours_.clear();
    int next = 1;
    for (auto [u, v] : shape_.arcs()) {
      int c = p.colours == ColourStrategy::Injective ? next++
                                                     : uniform(rng, 1, std::max(p.palette, 1));
      colours_[{u, v}] = c;
    }
  }

  void set(int u, int v, int c) { colours_[{u, v}] = c; }
  int get(int u, int v) const { return colours_.at({u, v}); }

  int fresh() const {
    int top = 0;
    for (const auto& [arc, c] : colours_) top = std::max(top, c);
    return top + 1;
  }

  ArcColouredDigraph build() const {
    std::vector<Arc> arcs;
    for (const auto& [arc, c] : colours_) arcs.push_back({arc.first, arc.second, c});
    return ArcColouredDigraph(n_, std::move(arcs));
  }

  // Gives one arc of the first offending pair a new colour. `pairs` indexes
  // into `arcs`; an empty list means every pair counts.
  void split(const std::vector<std::pair<int, int>>& arcs,
             const std::vector<std::pair<int, int>>& pairs, std::mt19937_64& rng) {
    auto try_pair = [&](int i, int j) {
      auto [a, b] = arcs[i];
      auto [c, e] = arcs[j];
      if (get(a, b) != get(c, e)) return false;
      auto pick = coin(rng, 0.5) ? arcs[i] : arcs[j];
      set(pick.first, pick.second, fresh());
      return true;
    };
    if (pairs.empty()) {
      for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(arcs.size()); ++j)
          if (try_pair(i, j)) return;
    } else {
      for (auto [i, j] : pairs)
        if (try_pair(i, j)) return;
    }
    throw Error(Errc::InvalidArgument, "repair found no repeated colour");
  }

 private:
  int n_;
  Digraph shape_;
  std::map<std::pair<int, int>, int> colours_;
};

std::vector<std::pair<int, int>> cycle_arcs(const Cycle& c) {
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < c.size(); ++i) arcs.emplace_back(c[i], c[(i + 1) % c.size()]);
  return arcs;
}

std::vector<std::pair<int, int>> copy_arcs(const PatternGraph& p, const VertexMap& m) {
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : p.arcs) arcs.emplace_back(m[a], m[b]);
  return arcs;
}

// Consecutive arc pairs of a pattern, as indices into its arc list.
std::vector<std::pair<int, int>> consecutive_pairs(const PatternGraph& p) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(p.arcs.size()); ++i)
    for (int j = 0; j < static_cast<int>(p.arcs.size()); ++j)
      if (p.arcs[i].second == p.arcs[j].first) pairs.emplace_back(i, j);
  return pairs;
}

using Check = ConditionResult (*)(const ArcColouredDigraph&);

// Repeats checks and repairs until every check holds.
void repair(Draft& draft, const std::vector<Check>& checks, std::mt19937_64& rng) {
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (Check check : checks) {
      for (;;) {
        ConditionResult r = check(draft.build());
        if (r.holds) break;
        dirty = true;
        if (const auto* cw = std::get_if<CycleWitness>(&*r.witness)) {
          draft.split(cycle_arcs(cw->cycle), {}, rng);
          continue;
        }
        const auto& cp = std::get<CopyWitness>(*r.witness);
        if (cp.pattern == tb4_pattern().name) {
          draft.split(copy_arcs(tb4_pattern(), cp.map), consecutive_pairs(tb4_pattern()), rng);
        } else {
          const PatternGraph& p = cp.pattern == qt4_pattern().name ? qt4_pattern() : cb5_pattern();
          draft.split(copy_arcs(p, cp.map), {}, rng);
        }
      }
    }
  }
}

ConditionResult three_rainbow(const ArcColouredDigraph& d) { return check_small_cycles_rainbow(d, 3); }
ConditionResult four_rainbow(const ArcColouredDigraph& d) { return check_small_cycles_rainbow(d, 4); }
ConditionResult six_rainbow(const ArcColouredDigraph& d) { return check_small_cycles_rainbow(d, 6); }
ConditionResult four_three(const ArcColouredDigraph& d) { return check_4cycles_min_colours(d, 3); }
ConditionResult qt4_rainbow(const ArcColouredDigraph& d) {
  return check_induced_pattern_rainbow(d, qt4_pattern());
}
ConditionResult cb5_rainbow(const ArcColouredDigraph& d) {
  return check_induced_pattern_rainbow(d, cb5_pattern());
}
ConditionResult tb4_proper(const ArcColouredDigraph& d) { return check_induced_tb4_properly(d); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidArgument, what);
}

Instance unicyclic(const GenProfile& p, std::mt19937_64& rng) {
  require(p.n >= 2 && p.n <= kMaxVertices, "unicyclic instances need 2 <= n <= 64");
  std::vector<int> perm(p.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const int len = uniform(rng, 2, p.n);

  Draft draft(p.n);
  for (int i = 0; i < len; ++i) draft.shape().add_arc(perm[i], perm[(i + 1) % len]);
  for (int i = len; i < p.n; ++i) {
    const bool outward = coin(rng, 0.5);
    std::vector<int> targets;
    for (int j = 0; j < i; ++j)
      if (coin(rng, p.arc_density)) targets.push_back(perm[j]);
    if (targets.empty()) targets.push_back(perm[uniform(rng, 0, i - 1)]);
    for (int t : targets) {
      if (outward) draft.shape().add_arc(perm[i], t);
      else draft.shape().add_arc(t, perm[i]);
    }
  }
  draft.colour_all(p, rng);
  // The cycle keeps its own distinct colours whatever the strategy.
  int c = draft.fresh();
  for (int i = 0; i < len; ++i) draft.set(perm[i], perm[(i + 1) % len], c++);
  return {draft.build(), plain_names(p.n)};
}

Instance semicomplete(const GenProfile& p, std::mt19937_64& rng) {
  require(p.n >= 1 && p.n <= kMaxVertices, "semicomplete instances need 1 <= n <= 64");
  Draft draft(p.n);
  for (int u = 0; u < p.n; ++u) {
    for (int v = u + 1; v < p.n; ++v) {
      if (coin(rng, p.symmetric_probability)) {
        draft.shape().add_arc(u, v);
        draft.shape().add_arc(v, u);
      } else if (coin(rng, 0.5)) {
        draft.shape().add_arc(u, v);
      } else {
        draft.shape().add_arc(v, u);
      }
    }
  }
  draft.colour_all(p, rng);
  repair(draft, {three_rainbow}, rng);
  return {draft.build(), plain_names(p.n)};
}

Instance quasi_transitive(const GenProfile& p, std::mt19937_64& rng) {
  require(p.n >= 1 && p.n <= kMaxVertices, "quasi-transitive instances need 1 <= n <= 64");
  Draft draft(p.n);
  Digraph& g = draft.shape();
  for (int u = 0; u < p.n; ++u) {
    for (int v = u + 1; v < p.n; ++v) {
      if (!coin(rng, p.arc_density)) continue;
      if (coin(rng, p.symmetric_probability)) {
        g.add_arc(u, v);
        g.add_arc(v, u);
      } else if (coin(rng, 0.5)) {
        g.add_arc(u, v);
      } else {
        g.add_arc(v, u);
      }
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < p.n && !changed; ++v)
      for (int u : g.in(v))
        for (int w : g.out(v))
          if (!changed && u != w && !g.adjacent(u, w)) {
            if (coin(rng, 0.5)) g.add_arc(u, w);
            else g.add_arc(w, u);
            changed = true;
          }
  }
  draft.colour_all(p, rng);
  repair(draft, {three_rainbow, qt4_rainbow}, rng);
  return {draft.build(), plain_names(p.n)};
}

Instance bipartite(const GenProfile& p, std::mt19937_64& rng) {
  require(p.x_size >= 1 && p.y_size >= 1 && p.x_size + p.y_size <= kMaxVertices,
          "bipartite instances need two nonempty parts and at most 64 vertices");
  const int n = p.x_size + p.y_size;
  Draft draft(n);
  for (int x = 0; x < p.x_size; ++x)
    for (int y = p.x_size; y < n; ++y) {
      if (coin(rng, 0.5)) draft.shape().add_arc(x, y);
      else draft.shape().add_arc(y, x);
    }
  draft.colour_all(p, rng);
  const int small = std::min(p.x_size, p.y_size);
  if (small == 2) repair(draft, {four_three}, rng);
  if (small >= 3) repair(draft, {four_rainbow, six_rainbow, cb5_rainbow, tb4_proper}, rng);

  std::vector<std::string> names;
  for (int i = 0; i < p.x_size; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < p.y_size; ++i) names.push_back("y" + std::to_string(i + 1));
  return {draft.build(), std::move(names)};
}

}  // namespace

Instance fixture(std::string_view name) {
  if (name == "QT4") return from_pattern(qt4_pattern());
  if (name == "CB5") return from_pattern(cb5_pattern());
  if (name == "TB4") return from_pattern(tb4_pattern());
  if (name == "FIG4") return fig4();
  throw Error(Errc::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"QT4", "CB5", "TB4", "FIG4"}; }

std::optional<GenClass> parse_gen_class(std::string_view name) {
  if (name == "unicyclic") return GenClass::Unicyclic;
  if (name == "semicomplete") return GenClass::Semicomplete;
  if (name == "quasi_transitive" || name == "qt") return GenClass::QuasiTransitive;
  if (name == "bipartite") return GenClass::Bipartite;
  return std::nullopt;
}

std::string_view gen_class_name(GenClass c) {
  switch (c) {
    case GenClass::Unicyclic: return "unicyclic";
    case GenClass::Semicomplete: return "semicomplete";
    case GenClass::QuasiTransitive: return "quasi_transitive";
    case GenClass::Bipartite: return "bipartite";
  }
  return "";
}

Instance generate(const GenProfile& profile) {
  std::mt19937_64 rng(profile.seed);
  switch (profile.cls) {
    case GenClass::Unicyclic: return unicyclic(profile, rng);
    case GenClass::Semicomplete: return semicomplete(profile, rng);
    case GenClass::QuasiTransitive: return quasi_transitive(profile, rng);
    case GenClass::Bipartite: return bipartite(profile, rng);
  }
  throw Error(Errc::InvalidArgument, "unknown class");
}

ArcColouredDigraph random_coloured_digraph(int n, int m, double density, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng, density)) arcs.push_back({u, v, uniform(rng, 1, std::max(m, 1))});
  return ArcColouredDigraph(n, std::move(arcs));
}

Digraph random_acyclic_digraph(int n, double density, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, density)) g.add_arc(perm[i], perm[j]);
  return g;
}

Digraph random_kp_digraph(int n, double density, double symmetric_probability,
                          std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!coin(rng, density)) continue;
      g.add_arc(perm[i], perm[j]);
      if (coin(rng, symmetric_probability)) g.add_arc(perm[j], perm[i]);
    }
  return g;
}

}  // namespace rpk
