#pragma once

#include <optional>
#include <vector>

#include "rpk/digraph.hpp"

namespace rpk {

inline constexpr int kDefaultKernelBound = 20;

/// Why a vertex set fails to be a kernel.
struct KernelViolation {
  enum class Kind { AdjacentPair, Unabsorbed };
  Kind kind;
  int first;        // tail of the offending arc, or the unabsorbed vertex
  int second = -1;  // head of the offending arc
};

struct KernelCheck {
  bool ok = true;
  std::optional<KernelViolation> violation;

  explicit operator bool() const { return ok; }
};

/// Independent (no arc inside s) and absorbing (every vertex outside s has an
/// out-neighbour in s).
KernelCheck is_kernel(const Digraph& g, VertexSet s);

/// Every kernel of g in canonical order. Throws Error(InstanceTooLarge) when
/// g.order() > bound.
std::vector<VertexSet> all_kernels_serial(const Digraph& g, int bound = kDefaultKernelBound);

/// OpenMP version of all_kernels_serial; same output.
std::vector<VertexSet> all_kernels(const Digraph& g, int bound = kDefaultKernelBound);

/// The unique kernel of an acyclic digraph: vertices are scanned in reverse
/// topological order and kept when none of their out-neighbours is kept.
/// Throws Error(NotAcyclic).
VertexSet acyclic_kernel(const Digraph& g);

/// Sufficient condition for kernel-perfectness: every cycle has a symmetrical
/// arc, equivalently the asymmetric part is acyclic.
bool kp_sufficient(const Digraph& g);

/// Canonically smallest kernel of a digraph satisfying kp_sufficient.
/// Throws Error(PreconditionFailed) when kp_sufficient(g) is false and
/// Error(TheoremViolation) if no kernel turns up anyway.
VertexSet kernel_of_kp(const Digraph& g, int bound = kDefaultKernelBound);

}  // namespace rpk
