#include "bipartite_two.hpp"

#include <map>
#include <set>

#include "rpk/error.hpp"

namespace rpk::detail {

namespace {

[[noreturn]] void broken(const std::string& what) {
  throw Error(Errc::TheoremViolation, "two-vertex part case analysis: " + what);
}

class TwoPartMachine {
 public:
  TwoPartMachine(const ArcColouredDigraph& d, const RainbowReachability& r, VertexSet x,
                 VertexSet y)
      : d_(d), r_(r), y_(y) {
    if (x.size() != 2) broken("part X must have exactly two vertices");
    x1_ = x.front();
    x.erase(x1_);
    x2_ = x.front();
  }

  BranchOutcome run() {
    if (all_of(y_, [&](int v) { return arc(x1_, v) && arc(x2_, v); }))
      return leaf("x_dominates_y", y_);
    if (all_of(y_, [&](int v) { return arc(v, x1_) && arc(v, x2_); }))
      return leaf("y_dominates_x", VertexSet{x1_, x2_});

    VertexSet y0;
    for (int v : y_) {
      if (arc(x1_, v) && arc(x2_, v)) y0.insert(v);
      if (arc(v, x1_) && arc(v, x2_)) broken("a vertex of Y is a source");
    }
    if (!y0.empty()) return case_one(y0);
    return case_two();
  }

 private:
  template <class Pred>
  static bool all_of(VertexSet s, Pred pred) {
    for (int v : s)
      if (!pred(v)) return false;
    return true;
  }

  bool arc(int u, int v) const { return d_.has_arc(u, v); }
  int colour(int u, int v) const { return d_.colour(u, v); }

  void note(std::string line) { trail_.push_back(std::move(line)); }

  BranchOutcome leaf(std::string name, VertexSet kernel) {
    return BranchOutcome{kernel, std::move(name), std::move(trail_)};
  }

  // --- Y0 nonempty ---------------------------------------------------------

  BranchOutcome case_one(VertexSet y0) {
    note("Y0 = " + to_string(y0));
    VertexSet y2;
    for (int v : y_ - y0)
      if (!r_.reaches_any(v, y0)) y2.insert(v);
    if (y2.empty()) return leaf("case1.y2_empty", y0);
    note("Y2 = " + to_string(y2));

    // Greedy maximal subset of Y2 without rainbow paths between members.
    VertexSet s;
    for (int v : y2) {
      bool free = true;
      for (int t : s) free = free && !r_(v, t) && !r_(t, v);
      if (free) s.insert(v);
    }
    VertexSet rest;
    for (int v : y2 - s)
      if (!r_.reaches_any(v, s)) rest.insert(v);
    if (rest.empty()) return leaf("case1.r_empty", y0 | s);

    const int r = rest.front();
    // r has exactly one in- and one out-neighbour in X.
    const int in_x = arc(x1_, r) ? x1_ : x2_;
    const int out_x = in_x == x1_ ? x2_ : x1_;
    if (!arc(r, out_x)) broken("vertex of Y2 without an out-neighbour in X");
    note("S = " + to_string(s) + ", r = " + std::to_string(r));

    int shortest = -1;
    for (int t : s) {
      if (!r_(t, r)) continue;
      auto path = rainbow_path(d_, t, r);
      if (path && (shortest < 0 || path->length() < shortest)) shortest = path->length();
    }
    if (shortest < 0) broken("S is not maximal: no rainbow path from S to r");
    note("shortest rainbow (S, r)-path has length " + std::to_string(shortest));

    VertexSet with_r = y0;
    with_r.insert(r);
    if (shortest == 4) return leaf("case1.path4", with_r);
    if (shortest != 2) broken("rainbow path between Y-vertices of unexpected length");

    VertexSet q2;
    for (int v : y2)
      if (v != r && arc(v, out_x)) q2.insert(v);
    if (q2.empty()) return leaf("case1.path2.q2_empty", with_r);
    for (int q : q2)
      if (r_(q, r)) return leaf("case1.path2.q2_reaches_r", with_r);
    for (int q : q2) {
      if (r_(r, q)) {
        VertexSet k = y0;
        k.insert(q);
        return leaf("case1.path2.r_reaches_q2", k);
      }
    }
    return leaf("case1.path2.q2_isolated", with_r | q2);
  }

  // --- Y0 empty --------------------------------------------------------------

  BranchOutcome case_two() {
    VertexSet forward, backward;  // x1->y->x2 and x2->y->x1
    for (int v : y_) {
      if (arc(x1_, v) && arc(v, x2_)) {
        forward.insert(v);
      } else if (arc(x2_, v) && arc(v, x1_)) {
        backward.insert(v);
      } else {
        broken("vertex of Y without one in- and one out-neighbour in X");
      }
    }
    note("Y' = " + to_string(forward) + ", Y'' = " + to_string(backward));
    if (forward.empty()) {
      if (r_(x2_, x1_)) return leaf("case2.forward_empty.single", VertexSet{x1_});
      return leaf("case2.forward_empty.both", VertexSet{x1_, x2_});
    }
    if (backward.empty()) {
      if (r_(x1_, x2_)) return leaf("case2.backward_empty.single", VertexSet{x2_});
      return leaf("case2.backward_empty.both", VertexSet{x1_, x2_});
    }

    VertexSet forward_mono, backward_mono;  // complements of Y* and Y**
    for (int v : forward)
      if (colour(x1_, v) == colour(v, x2_)) forward_mono.insert(v);
    for (int v : backward)
      if (colour(x2_, v) == colour(v, x1_)) backward_mono.insert(v);
    if (forward_mono == forward) return leaf("case2.ystar_empty", VertexSet{x1_});
    if (backward_mono == backward) return leaf("case2.ystarstar_empty", VertexSet{x2_});

    if (!forward_mono.empty()) return subcase_mono(x1_, x2_, forward, backward, forward_mono);
    if (!backward_mono.empty()) {
      note("roles of x1 and x2 exchanged");
      return subcase_mono(x2_, x1_, backward, forward, backward_mono);
    }
    return subcase_bicoloured(forward, backward);
  }

  // Classes of vertices by the colour tags of their two arcs to X.
  using Classes = std::map<std::string, VertexSet>;

  static VertexSet get(const Classes& c, const std::string& tag) {
    auto it = c.find(tag);
    return it == c.end() ? VertexSet{} : it->second;
  }

  static std::string str(std::initializer_list<char> tags) { return std::string(tags); }

  // Some vertex of Y' has both arcs on one colour alpha. p plays x1 and q
  // plays x2; fwd = {p->y->q}, bwd = {q->y->p}.
  BranchOutcome subcase_mono(int p, int q, VertexSet fwd, VertexSet bwd, VertexSet fwd_mono) {
    const int alpha = colour(p, fwd_mono.front());
    const int ref = bwd.front();
    const int beta = colour(q, ref);
    const int gamma = colour(ref, p);
    if (beta == gamma || beta == alpha || gamma == alpha)
      broken("4-cycle through x1, x2 with fewer than three colours");
    note("subcase 2.1: alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta) +
         ", gamma = " + std::to_string(gamma));
    auto tag = [&](int c) { return c == alpha ? 'a' : c == beta ? 'b' : c == gamma ? 'g' : 'w'; };

    static const std::set<std::string> fwd_tags = {"aa", "ab", "ba", "ag", "ga",
                                                   "wa", "wb", "wg", "w+"};
    static const std::set<std::string> bwd_tags = {"bg", "gb", "gw", "wg", "bw", "wb", "ww"};
    Classes f, b;
    for (int v : fwd) {
      char first = tag(colour(p, v)), second = tag(colour(v, q));
      std::string t = second == 'w' ? "w+" : str({first, second});
      if (!fwd_tags.count(t)) broken("Y' vertex outside the colour classes");
      f[t].insert(v);
    }
    for (int v : bwd) {
      char first = tag(colour(q, v)), second = tag(colour(v, p));
      std::string t = str({first, second});
      if (t == "ww" && colour(q, v) == colour(v, p)) t = "w=";
      if (!bwd_tags.count(t)) broken("Y'' vertex outside the colour classes");
      b[t].insert(v);
    }

    if (!get(b, "ww").empty()) return leaf("case2.sub1.two_fresh_colours", VertexSet{p});
    const bool beta_side = !(get(b, "bw") | get(b, "wb")).empty();
    const bool gamma_side = !(get(b, "gw") | get(b, "wg")).empty();
    if (beta_side && gamma_side) return leaf("case2.sub1.both_sides", VertexSet{p});
    if (beta_side) return one_side(p, q, f, 'b', 'g', beta, beta, gamma);
    if (gamma_side) {
      note("beta and gamma roles exchanged");
      return one_side(p, q, f, 'g', 'b', gamma, beta, gamma);
    }
    return no_side(p, q, f, beta, gamma);
  }

  // Exactly one of the beta/gamma sides of Y'' is populated; `s` tags it.
  BranchOutcome one_side(int p, int q, const Classes& f, char s, char t, int side_colour,
                         int beta, int gamma) {
    (void)beta;
    (void)gamma;
    const VertexSet ws = get(f, str({'w', s}));
    const VertexSet as = get(f, str({'a', s}));
    if (ws.empty() && as.empty()) return leaf("case2.sub1.one_side.no_side_class", VertexSet{p});
    if (!ws.empty() && !as.empty()) return leaf("case2.sub1.one_side.both_classes", ws | as);
    if (!ws.empty()) {
      return fresh_first_colour(p, q, f, ws, [&](int c0, int first) {
                                  (void)c0;
                                  return first != side_colour;
                                },
                                "case2.sub1.one_side.fresh");
    }
    if (!(get(f, "wa") | get(f, str({t, 'a'}))).empty())
      return leaf("case2.sub1.one_side.alpha_class.single", VertexSet{q});
    return leaf("case2.sub1.one_side.alpha_class.set",
                get(f, "aa") | as | get(f, str({s, 'a'})));
  }

  BranchOutcome no_side(int p, int q, const Classes& f, int beta, int gamma) {
    const VertexSet alpha_first = get(f, "ag") | get(f, "ab");
    const VertexSet fresh_first = get(f, "wb") | get(f, "wg");
    if (!alpha_first.empty() && !fresh_first.empty())
      return leaf("case2.sub1.no_side.both", alpha_first | fresh_first);
    if (alpha_first.empty() && fresh_first.empty())
      return leaf("case2.sub1.no_side.neither", VertexSet{p});
    if (!alpha_first.empty()) {
      if (get(f, "wa").empty()) {
        return leaf("case2.sub1.no_side.alpha_first.set",
                    get(f, "aa") | get(f, "ab") | get(f, "ba") | get(f, "ag") | get(f, "ga"));
      }
      return leaf("case2.sub1.no_side.alpha_first.single", VertexSet{q});
    }
    return fresh_first_colour(p, q, f, fresh_first,
                              [&](int c0, int first) {
                                return first != beta && first != gamma && first != c0;
                              },
                              "case2.sub1.no_side.fresh");
  }

  // Shared tail: `core` is absorbing for everything except possibly part of
  // Y'+ (second colour fresh). If the arcs from p into core use two colours,
  // core itself works; otherwise with c0 that single colour, the Y'+ vertices
  // whose arc to q is also c0 need handling: pick one of them whose colour
  // from p passes `absorbs`, or add all of them.
  template <class Absorbs>
  BranchOutcome fresh_first_colour(int p, int q, const Classes& f, VertexSet core,
                                   Absorbs absorbs, const std::string& name) {
    std::set<int> colours;
    for (int v : core) colours.insert(colour(p, v));
    if (colours.size() >= 2) return leaf(name + ".two_colours", core);
    const int c0 = *colours.begin();
    VertexSet u;
    for (int v : get(f, "w+"))
      if (colour(v, q) == c0) u.insert(v);
    for (int v : u) {
      if (absorbs(c0, colour(p, v))) {
        VertexSet k = core;
        k.insert(v);
        return leaf(name + ".one_u", k);
      }
    }
    return leaf(name + ".all_u", core | u);
  }

  // Every vertex of Y' and Y'' sees two different colours on its arcs to X.
  BranchOutcome subcase_bicoloured(VertexSet fwd, VertexSet bwd) {
    const int p = x1_, q = x2_;
    const int ref = fwd.front();
    const int alpha = colour(p, ref);
    const int beta = colour(ref, q);
    note("subcase 2.2: alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta));
    auto tag = [&](int c) { return c == alpha ? 'a' : c == beta ? 'b' : 'w'; };

    static const std::set<std::string> fwd_tags = {"ab", "ba", "aw", "bw", "wa", "wb", "ww"};
    static const std::set<std::string> bwd_tags = {"aw", "bw", "wa", "wb", "ww"};
    Classes f, b;
    for (int v : fwd) {
      std::string t = str({tag(colour(p, v)), tag(colour(v, q))});
      if (!fwd_tags.count(t)) broken("Y' vertex outside the colour classes");
      f[t].insert(v);
    }
    for (int v : bwd) {
      std::string t = str({tag(colour(q, v)), tag(colour(v, p))});
      if (!bwd_tags.count(t)) broken("Y'' vertex outside the colour classes");
      b[t].insert(v);
    }

    const VertexSet wa = get(b, "wa"), wb = get(b, "wb");
    if (!get(f, "ww").empty() || (wa | wb).empty())
      return leaf("case2.sub2.to_x2", VertexSet{q});
    if (!wa.empty() && !wb.empty()) return leaf("case2.sub2.both_fresh_first", VertexSet{p});
    if (!wa.empty()) return bicoloured_one_side(p, q, f, b, 'a', 'b');
    note("alpha and beta roles exchanged");
    return bicoloured_one_side(p, q, f, b, 'b', 'a');
  }

  BranchOutcome bicoloured_one_side(int p, int q, const Classes& f, const Classes& b, char s,
                                    char t) {
    if (!(get(f, str({t, 'w'})) | get(f, str({'w', t}))).empty())
      return leaf("case2.sub2.one_side.to_x2", VertexSet{q});
    if (!get(b, str({t, 'w'})).empty()) return leaf("case2.sub2.one_side.to_x1", VertexSet{p});
    if (!get(b, "ww").empty()) return leaf("case2.sub2.one_side.fresh_pair", VertexSet{p});

    const VertexSet ws = get(b, str({'w', s}));
    std::set<int> colours;
    for (int v : ws) colours.insert(colour(q, v));
    if (colours.size() >= 2) return leaf("case2.sub2.one_side.two_colours", ws);
    const int c0 = *colours.begin();
    VertexSet u;
    for (int v : get(b, str({s, 'w'})))
      if (colour(v, p) == c0) u.insert(v);
    return leaf("case2.sub2.one_side.with_u", ws | u);
  }

  const ArcColouredDigraph& d_;
  const RainbowReachability& r_;
  VertexSet y_;
  int x1_ = -1;
  int x2_ = -1;
  std::vector<std::string> trail_;
};

}  // namespace

BranchOutcome two_part_kernel(const ArcColouredDigraph& d, const RainbowReachability& r,
                              VertexSet x, VertexSet y) {
  return TwoPartMachine(d, r, x, y).run();
}

}  // namespace rpk::detail
