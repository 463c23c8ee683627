#pragma once

#include <string>
#include <vector>

#include "rpk/rainbow.hpp"

namespace rpk::detail {

struct BranchOutcome {
  VertexSet kernel;
  std::string leaf;
  std::vector<std::string> trail;
};

/// RP-kernel of a bipartite tournament with parts x = {x1, x2} and y, every
/// 4-cycle on at least three colours, and no source in y. Follows the case
/// analysis on Y0 = {y : x1->y, x2->y}; each leaf names the set it returns.
/// The result is not validated here.
BranchOutcome two_part_kernel(const ArcColouredDigraph& d, const RainbowReachability& r,
                              VertexSet x, VertexSet y);

}  // namespace rpk::detail
