#include "rpk/solver.hpp"

#include <algorithm>
#include <utility>

#include "bipartite_two.hpp"
#include "rpk/error.hpp"

namespace rpk {

namespace {

RpKernelCheck check_within(const RainbowReachability& r, VertexSet universe, VertexSet s) {
  if (s.empty()) throw Error(Errc::EmptyVertexSet, "candidate RP-kernel is empty");
  RpKernelCheck check;
  for (int u : s) {
    VertexSet hit = r.reach(u) & s;
    hit.erase(u);
    if (!hit.empty()) {
      check.ok = false;
      check.violation = RpKernelViolation{RpKernelViolation::Kind::RainbowPair, u, hit.front()};
      return check;
    }
  }
  for (int w : universe - s) {
    if (!r.reaches_any(w, s)) {
      check.ok = false;
      check.violation = RpKernelViolation{RpKernelViolation::Kind::Unabsorbed, w};
      return check;
    }
  }
  return check;
}

std::string describe(const RpKernelCheck& c) {
  if (c.ok) return "valid";
  const auto& v = *c.violation;
  if (v.kind == RpKernelViolation::Kind::Unabsorbed)
    return "vertex " + std::to_string(v.first) + " unabsorbed";
  return "rainbow path " + std::to_string(v.first) + " -> " + std::to_string(v.second);
}

[[noreturn]] void precondition(Condition c) {
  throw Error(Errc::PreconditionFailed, std::string(condition_label(c)));
}

[[noreturn]] void precondition(std::string_view what) {
  throw Error(Errc::PreconditionFailed, std::string(what));
}

// Validates and fills in the result; a failure is a bug in the construction.
SolveResult finish(const RainbowReachability& r, VertexSet kernel, Method method,
                   std::string leaf, std::vector<std::string> diagnostics = {}) {
  const RpKernelCheck check = is_rp_kernel(r, kernel);
  if (!check) {
    throw Error(Errc::TheoremViolation, std::string(method_name(method)) + " branch " + leaf +
                                            " returned " + to_string(kernel) + ": " +
                                            describe(check));
  }
  SolveResult result;
  result.status = SolveStatus::Found;
  result.kernel = kernel;
  result.method = method;
  result.validated = true;
  result.leaf = std::move(leaf);
  result.diagnostics = std::move(diagnostics);
  return result;
}

VertexSet closure_kernel(const Digraph& closure, int bound, const std::string& who) {
  if (!kp_sufficient(closure))
    throw Error(Errc::TheoremViolation, who + ": rainbow closure has a cycle without symmetric arc");
  return kernel_of_kp(closure, bound);
}

SolveResult brute_result(const ArcColouredDigraph& d, const RainbowReachability& r, int bound,
                         std::vector<std::string> diagnostics) {
  std::vector<VertexSet> kernels = all_kernels(rainbow_closure(r), std::max(bound, 1));
  if (kernels.empty()) {
    SolveResult result;
    result.status = SolveStatus::NoKernel;
    result.method = Method::BruteForce;
    result.leaf = "brute_force.none";
    result.diagnostics = std::move(diagnostics);
    return result;
  }
  diagnostics.push_back(std::to_string(kernels.size()) + " RP-kernel(s) in total");
  (void)d;
  return finish(r, kernels.front(), Method::BruteForce, "brute_force.smallest",
                std::move(diagnostics));
}

// --- bipartite, smaller part of size two -------------------------------------

SolveResult bipartite_two(const ArcColouredDigraph& d, const RainbowReachability& r, VertexSet x,
                          VertexSet y, int bound) {
  std::vector<std::string> diag;
  // Peel sources layer by layer; a source is never interior to a path, so
  // reachability among the remaining vertices is unchanged.
  VertexSet active = x | y;
  std::vector<VertexSet> layers;
  while (!active.empty()) {
    VertexSet sources;
    for (int v : active)
      if (!d.in(v).intersects(active)) sources.insert(v);
    if (sources.empty()) break;
    layers.push_back(sources);
    active -= sources;
    diag.push_back("removed sources " + to_string(sources));
  }

  VertexSet core_kernel;
  std::string leaf;
  const VertexSet cx = active & x, cy = active & y;
  if (active.empty()) {
    leaf = "sources.exhausted";
  } else if (cx.size() == 1 || cy.size() == 1) {
    const Digraph closure = rainbow_closure(r).restricted_to(active);
    core_kernel = acyclic_kernel(closure) & active;
    leaf = "sources.core_min1";
  } else {
    detail::BranchOutcome out = detail::two_part_kernel(d, r, cx, cy);
    for (auto& line : out.trail) diag.push_back(std::move(line));
    core_kernel = out.kernel;
    leaf = std::move(out.leaf);
  }
  if (!active.empty()) {
    const RpKernelCheck core = check_within(r, active, core_kernel);
    if (!core) {
      throw Error(Errc::TheoremViolation, "bipartite_2 branch " + leaf + " returned " +
                                              to_string(core_kernel) + ": " + describe(core));
    }
  }

  VertexSet kernel = core_kernel;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    VertexSet kept;
    for (int v : *it)
      if (!r.reaches_any(v, kernel)) kept.insert(v);
    kernel |= kept;
  }
  if (!layers.empty()) diag.push_back("core kernel " + to_string(core_kernel) + " extended");

  if (!is_rp_kernel(r, kernel)) {
    diag.push_back("source reinsertion failed validation; brute force used");
    if (d.order() > bound) throw Error(Errc::TheoremViolation, "source reinsertion failed");
    return brute_result(d, r, bound, std::move(diag));
  }
  return finish(r, kernel, Method::Bipartite2, std::move(leaf), std::move(diag));
}

}  // namespace

RpKernelCheck is_rp_kernel(const RainbowReachability& r, VertexSet s) {
  if (!s.is_subset_of(VertexSet::range(r.order())))
    throw Error(Errc::InvalidArgument, "vertex set " + to_string(s) + " outside the digraph");
  return check_within(r, VertexSet::range(r.order()), s);
}

RpKernelCheck is_rp_kernel(const ArcColouredDigraph& d, VertexSet s) {
  if (s.empty()) throw Error(Errc::EmptyVertexSet, "candidate RP-kernel is empty");
  return is_rp_kernel(rainbow_reachability(d), s);
}

std::vector<VertexSet> brute_force_rp_kernel(const ArcColouredDigraph& d, int bound) {
  if (d.order() > bound) {
    throw Error(Errc::InstanceTooLarge, std::to_string(d.order()) +
                                            " vertices exceed the brute-force bound " +
                                            std::to_string(bound));
  }
  return all_kernels(rainbow_closure(d), bound);
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Unicyclic: return "unicyclic";
    case Method::Semicomplete: return "semicomplete";
    case Method::QuasiTransitive: return "quasi_transitive";
    case Method::BipartiteMono: return "bipartite_mono";
    case Method::BipartiteMin1: return "bipartite_min1";
    case Method::Bipartite2: return "bipartite_2";
    case Method::BipartiteMin3: return "bipartite_min3";
    case Method::BruteForce: return "brute_force";
  }
  return "";
}

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::NoKernel: return "no_kernel";
    case SolveStatus::Unknown: return "unknown";
  }
  return "";
}

SolveResult rp_kernel_unicyclic(const ArcColouredDigraph& d) {
  const std::optional<Cycle> cycle = unique_cycle(d.skeleton());
  if (!cycle) precondition("unicyclic");
  if (cycle_colour_count(d, *cycle) < static_cast<int>(cycle->size()))
    precondition(Condition::UniqueCycleRainbow);

  const RainbowReachability r = rainbow_reachability(d);
  const std::vector<VertexSet> comps = strong_components(d.skeleton());
  const int k = static_cast<int>(comps.size());
  if (k == 1) return finish(r, VertexSet{*std::min_element(cycle->begin(), cycle->end())},
                            Method::Unicyclic, "unicyclic.strong");

  std::vector<std::string> diag{std::to_string(k) + " strong components"};
  VertexSet s{comps.back().front()};
  for (;;) {
    int pick = -1;
    for (int j = k - 1; j >= 0 && pick < 0; --j)
      for (int v : comps[j] - s)
        if (!r.reaches_any(v, s)) {
          pick = v;
          break;
        }
    if (pick < 0) break;
    s.insert(pick);
  }
  diag.push_back("seeded from the last component, " + std::to_string(s.size()) + " vertices");
  return finish(r, s, Method::Unicyclic, "unicyclic.components", std::move(diag));
}

SolveResult rp_kernel_semicomplete(const ArcColouredDigraph& d) {
  if (!is_semicomplete(d.skeleton())) precondition("semicomplete");
  if (!check_small_cycles_rainbow(d, 3)) precondition(Condition::ThreeCyclesRainbow);
  int best = 0;
  for (int v = 1; v < d.order(); ++v)
    if (d.in_degree(v) > d.in_degree(best)) best = v;
  return finish(rainbow_reachability(d), VertexSet{best}, Method::Semicomplete,
                "semicomplete.max_in_degree",
                {"in-degree " + std::to_string(d.in_degree(best))});
}

SolveResult rp_kernel_quasi_transitive(const ArcColouredDigraph& d, int bound) {
  if (!is_quasi_transitive(d.skeleton())) precondition("quasi-transitive");
  if (!check_small_cycles_rainbow(d, 3)) precondition(Condition::ThreeCyclesRainbow);
  if (!check_induced_pattern_rainbow(d, qt4_pattern())) precondition(Condition::InducedQt4Rainbow);
  const RainbowReachability r = rainbow_reachability(d);
  const VertexSet k =
      closure_kernel(rainbow_closure(r), std::max(bound, kDefaultKernelBound), "quasi_transitive");
  return finish(r, k, Method::QuasiTransitive, "quasi_transitive.closure_kernel");
}

SolveResult rp_kernel_bipartite(const ArcColouredDigraph& d, int bound) {
  std::optional<Bipartition> parts = bipartite_tournament(d.skeleton());
  if (!parts) precondition("bipartite tournament");
  VertexSet x = parts->x, y = parts->y;
  if (x.size() > y.size()) std::swap(x, y);
  const int small = x.size();
  bound = std::max(bound, kDefaultKernelBound);
  std::vector<std::string> diag{"parts " + to_string(x) + " " + to_string(y)};

  if (d.colour_count() == 1) {
    const RainbowReachability r = rainbow_reachability(d);
    if (is_kernel(d.skeleton(), x))
      return finish(r, x, Method::BipartiteMono, "bipartite_mono.smaller_part", diag);
    return finish(r, y, Method::BipartiteMono, "bipartite_mono.larger_part", diag);
  }
  if (small == 1) {
    const RainbowReachability r = rainbow_reachability(d);
    const Digraph closure = rainbow_closure(r);
    if (!is_acyclic(closure))
      throw Error(Errc::TheoremViolation, "bipartite_min1: rainbow closure has a cycle");
    return finish(r, acyclic_kernel(closure), Method::BipartiteMin1, "bipartite_min1.acyclic",
                  diag);
  }
  if (small == 2) {
    if (!check_4cycles_min_colours(d, 3)) precondition(Condition::FourCyclesThreeColours);
    SolveResult result = bipartite_two(d, rainbow_reachability(d), x, y, bound);
    result.diagnostics.insert(result.diagnostics.begin(), diag.begin(), diag.end());
    return result;
  }
  if (!check_small_cycles_rainbow(d, 4)) precondition(Condition::FourCyclesRainbow);
  if (!check_small_cycles_rainbow(d, 6)) precondition(Condition::SixCyclesRainbow);
  if (!check_induced_pattern_rainbow(d, cb5_pattern())) precondition(Condition::InducedCb5Rainbow);
  if (!check_induced_tb4_properly(d)) precondition(Condition::InducedTb4Proper);
  const RainbowReachability r = rainbow_reachability(d);
  const VertexSet k = closure_kernel(rainbow_closure(r), bound, "bipartite_min3");
  return finish(r, k, Method::BipartiteMin3, "bipartite_min3.closure_kernel", diag);
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "unicyclic") return Strategy::Unicyclic;
  if (name == "semicomplete") return Strategy::Semicomplete;
  if (name == "qt" || name == "quasi_transitive") return Strategy::QuasiTransitive;
  if (name == "bipartite") return Strategy::Bipartite;
  if (name == "brute" || name == "brute_force") return Strategy::BruteForce;
  return std::nullopt;
}

SolveResult solve(const ArcColouredDigraph& d, const SolveOptions& options) {
  const ClassReport report = classify(d);
  std::vector<std::string> diag;
  auto attempt = [&](std::string_view name, auto&& run) -> std::optional<SolveResult> {
    try {
      SolveResult result = run();
      result.diagnostics.insert(result.diagnostics.begin(), diag.begin(), diag.end());
      return result;
    } catch (const Error& e) {
      if (e.code() != Errc::PreconditionFailed && e.code() != Errc::InstanceTooLarge) throw;
      diag.push_back(std::string(name) + " skipped: " + e.what());
      return std::nullopt;
    }
  };

  const int bound = std::max(options.brute_bound, kDefaultKernelBound);
  if (report.unicyclic && report.holds(Condition::UniqueCycleRainbow))
    if (auto r = attempt("unicyclic", [&] { return rp_kernel_unicyclic(d); })) return *r;
  if (report.semicomplete && report.holds(Condition::ThreeCyclesRainbow))
    if (auto r = attempt("semicomplete", [&] { return rp_kernel_semicomplete(d); })) return *r;
  if (report.quasi_transitive && report.holds(Condition::ThreeCyclesRainbow) &&
      report.holds(Condition::InducedQt4Rainbow))
    if (auto r = attempt("quasi_transitive",
                         [&] { return rp_kernel_quasi_transitive(d, bound); }))
      return *r;
  if (report.bipartite_tournament)
    if (auto r = attempt("bipartite", [&] { return rp_kernel_bipartite(d, bound); })) return *r;

  if (d.order() <= options.brute_bound)
    return brute_result(d, rainbow_reachability(d), options.brute_bound, std::move(diag));
  SolveResult unknown;
  diag.push_back("no constructor applies and " + std::to_string(d.order()) +
                 " vertices exceed the brute-force bound");
  unknown.diagnostics = std::move(diag);
  return unknown;
}

SolveResult solve_with(const ArcColouredDigraph& d, Strategy strategy,
                       const SolveOptions& options) {
  const int bound = std::max(options.brute_bound, kDefaultKernelBound);
  switch (strategy) {
    case Strategy::Auto: return solve(d, options);
    case Strategy::Unicyclic: return rp_kernel_unicyclic(d);
    case Strategy::Semicomplete: return rp_kernel_semicomplete(d);
    case Strategy::QuasiTransitive: return rp_kernel_quasi_transitive(d, bound);
    case Strategy::Bipartite: return rp_kernel_bipartite(d, bound);
    case Strategy::BruteForce:
      if (d.order() > options.brute_bound) {
        SolveResult unknown;
        unknown.method = Method::BruteForce;
        unknown.diagnostics.push_back(std::to_string(d.order()) +
                                      " vertices exceed the brute-force bound");
        return unknown;
      }
      return brute_result(d, rainbow_reachability(d), options.brute_bound, {});
  }
  return solve(d, options);
}

}  // namespace rpk
