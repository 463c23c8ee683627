#include "rpk/kernel.hpp"

#include <algorithm>

#include "rpk/error.hpp"

namespace rpk {

KernelCheck is_kernel(const Digraph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices()))
    throw Error(Errc::InvalidArgument, "vertex set is not contained in the digraph");
  for (int u : s) {
    VertexSet inside = g.out(u) & s;
    if (!inside.empty())
      return {false, KernelViolation{KernelViolation::Kind::AdjacentPair, u, inside.front()}};
  }
  for (int v : g.vertices() - s) {
    if (!g.out(v).intersects(s))
      return {false, KernelViolation{KernelViolation::Kind::Unabsorbed, v}};
  }
  return {};
}

namespace {

// Backtracking over vertices 0..n-1 in order: each is either taken (when not
// adjacent to the current set) or left out. Left-out vertices that can no
// longer be absorbed cut the branch.
class KernelSearch {
 public:
  explicit KernelSearch(const Digraph& g) : g_(g), n_(g.order()) {
    neighbours_.resize(n_);
    for (int v = 0; v < n_; ++v) neighbours_[v] = g.out(v) | g.in(v);
  }

  void run_from(int depth, VertexSet chosen, VertexSet decided, std::vector<VertexSet>& out) {
    out_ = &out;
    descend(depth, chosen, decided);
  }

  // Prefixes of the first `depth` decisions that are still feasible.
  void prefixes(int depth, std::vector<std::pair<VertexSet, VertexSet>>& out) const {
    expand_prefix(0, depth, VertexSet{}, VertexSet{}, out);
  }

 private:
  bool doomed(VertexSet chosen, VertexSet decided) const {
    VertexSet blocked;
    for (int s : chosen) blocked |= neighbours_[s];
    VertexSet open = VertexSet::range(n_) - decided - blocked;
    VertexSet hopeful = chosen | open;
    for (int v : decided - chosen)
      if (!g_.out(v).intersects(hopeful)) return true;
    return false;
  }

  bool can_take(int v, VertexSet chosen) const { return !neighbours_[v].intersects(chosen); }

  void expand_prefix(int i, int depth, VertexSet chosen, VertexSet decided,
                     std::vector<std::pair<VertexSet, VertexSet>>& out) const {
    if (doomed(chosen, decided)) return;
    if (i == depth) {
      out.emplace_back(chosen, decided);
      return;
    }
    VertexSet next = decided;
    next.insert(i);
    if (can_take(i, chosen)) {
      VertexSet with = chosen;
      with.insert(i);
      expand_prefix(i + 1, depth, with, next, out);
    }
    expand_prefix(i + 1, depth, chosen, next, out);
  }

  void descend(int i, VertexSet chosen, VertexSet decided) {
    if (doomed(chosen, decided)) return;
    if (i == n_) {
      out_->push_back(chosen);
      return;
    }
    VertexSet next = decided;
    next.insert(i);
    if (can_take(i, chosen)) {
      VertexSet with = chosen;
      with.insert(i);
      descend(i + 1, with, next);
    }
    descend(i + 1, chosen, next);
  }

  const Digraph& g_;
  int n_;
  std::vector<VertexSet> neighbours_;
  std::vector<VertexSet>* out_ = nullptr;
};

void check_bound(const Digraph& g, int bound) {
  if (g.order() > bound)
    throw Error(Errc::InstanceTooLarge, "kernel enumeration limited to " + std::to_string(bound) +
                                            " vertices, digraph has " +
                                            std::to_string(g.order()));
}

}  // namespace

std::vector<VertexSet> all_kernels_serial(const Digraph& g, int bound) {
  check_bound(g, bound);
  std::vector<VertexSet> kernels;
  KernelSearch(g).run_from(0, VertexSet{}, VertexSet{}, kernels);
  std::sort(kernels.begin(), kernels.end());
  return kernels;
}

std::vector<VertexSet> all_kernels(const Digraph& g, int bound) {
  check_bound(g, bound);
  const int depth = std::min(g.order(), 8);
  KernelSearch splitter(g);
  std::vector<std::pair<VertexSet, VertexSet>> tasks;
  splitter.prefixes(depth, tasks);

  std::vector<std::vector<VertexSet>> partial(tasks.size());
  const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < task_count; ++t) {
    KernelSearch(g).run_from(depth, tasks[t].first, tasks[t].second, partial[t]);
  }

  std::vector<VertexSet> kernels;
  for (auto& p : partial) kernels.insert(kernels.end(), p.begin(), p.end());
  std::sort(kernels.begin(), kernels.end());
  return kernels;
}

VertexSet acyclic_kernel(const Digraph& g) {
  std::vector<int> order = topological_order(g);
  if (order.empty() && g.order() > 0)
    throw Error(Errc::NotAcyclic, "acyclic_kernel needs a digraph without cycles");
  VertexSet kernel;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (!g.out(*it).intersects(kernel)) kernel.insert(*it);
  return kernel;
}

bool kp_sufficient(const Digraph& g) { return is_acyclic(g.asymmetric_part()); }

VertexSet kernel_of_kp(const Digraph& g, int bound) {
  if (!kp_sufficient(g))
    throw Error(Errc::PreconditionFailed,
                "kernel_of_kp: some cycle has no symmetrical arc");
  std::vector<VertexSet> kernels = all_kernels(g, bound);
  if (kernels.empty())
    throw Error(Errc::TheoremViolation,
                "digraph whose cycles all carry a symmetrical arc has no kernel");
  return kernels.front();
}

}  // namespace rpk
