#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpk/conditions.hpp"
#include "rpk/kernel.hpp"
#include "rpk/rainbow.hpp"

namespace rpk {

inline constexpr int kDefaultBruteBound = 18;

/// Why a vertex set fails to be an RP-kernel.
struct RpKernelViolation {
  enum class Kind { RainbowPair, Unabsorbed };
  Kind kind;
  int first;        // tail of the rainbow path, or the unabsorbed vertex
  int second = -1;  // head of the rainbow path
};

struct RpKernelCheck {
  bool ok = true;
  std::optional<RpKernelViolation> violation;

  explicit operator bool() const { return ok; }
};

/// No rainbow path between two distinct members of s, and every vertex
/// outside s rainbow-reaches s. Throws Error(EmptyVertexSet) for empty s.
RpKernelCheck is_rp_kernel(const ArcColouredDigraph& d, VertexSet s);
RpKernelCheck is_rp_kernel(const RainbowReachability& r, VertexSet s);

/// All RP-kernels, as the kernels of the rainbow closure, in canonical order.
/// Throws Error(InstanceTooLarge) above `bound` vertices.
std::vector<VertexSet> brute_force_rp_kernel(const ArcColouredDigraph& d,
                                             int bound = kDefaultBruteBound);

enum class Method {
  Unicyclic,
  Semicomplete,
  QuasiTransitive,
  BipartiteMono,
  BipartiteMin1,
  Bipartite2,
  BipartiteMin3,
  BruteForce,
};

std::string_view method_name(Method m);

enum class SolveStatus { Found, NoKernel, Unknown };

std::string_view status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<VertexSet> kernel;
  Method method = Method::BruteForce;
  /// Set whenever a kernel is present: every constructor re-validates.
  bool validated = false;
  /// Identifier of the construction branch that produced the kernel.
  std::string leaf;
  std::vector<std::string> diagnostics;
};

/// Counts how often each construction branch produced a kernel.
class LeafCoverage {
 public:
  void record(const SolveResult& r) {
    if (!r.leaf.empty()) ++hits_[r.leaf];
  }
  int distinct() const { return static_cast<int>(hits_.size()); }
  const std::map<std::string, int>& hits() const { return hits_; }

 private:
  std::map<std::string, int> hits_;
};

// Each constructor throws Error(PreconditionFailed) naming the failed
// hypothesis, and Error(TheoremViolation) if its output does not validate.

/// Unicyclic digraph whose cycle is rainbow: components are processed from the
/// last one backwards, adding a vertex whenever a component still has a
/// vertex that cannot rainbow-reach the set built so far.
SolveResult rp_kernel_unicyclic(const ArcColouredDigraph& d);

/// Semicomplete digraph with rainbow 3-cycles: the vertex of maximum
/// in-degree (smallest index on ties).
SolveResult rp_kernel_semicomplete(const ArcColouredDigraph& d);

/// Quasi-transitive digraph with rainbow 3-cycles and rainbow induced QT4:
/// the rainbow closure satisfies kp_sufficient and its smallest kernel is
/// returned.
SolveResult rp_kernel_quasi_transitive(const ArcColouredDigraph& d,
                                       int bound = kDefaultKernelBound);

/// Bipartite tournament, dispatching on the colour count and the smaller part
/// size.
SolveResult rp_kernel_bipartite(const ArcColouredDigraph& d, int bound = kDefaultKernelBound);

enum class Strategy { Auto, Unicyclic, Semicomplete, QuasiTransitive, Bipartite, BruteForce };

std::optional<Strategy> parse_strategy(std::string_view name);

struct SolveOptions {
  int brute_bound = kDefaultBruteBound;
};

/// Tries the constructors whose hypotheses hold (unicyclic, semicomplete,
/// quasi-transitive, bipartite), then brute force within the bound, else
/// reports Unknown.
SolveResult solve(const ArcColouredDigraph& d, const SolveOptions& options = {});

/// Runs one strategy; Strategy::Auto is solve().
SolveResult solve_with(const ArcColouredDigraph& d, Strategy strategy,
                       const SolveOptions& options = {});

}  // namespace rpk
