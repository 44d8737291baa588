#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dsdisk/graph.hpp"

namespace dsdisk {

inline constexpr int kDefaultExactCap = 24;

struct ExactOptions {
  int cap = kDefaultExactCap;
  // Vertices that may not be picked (still have to be dominated).
  std::vector<DiskId> forbidden;
};

struct DominatingSolution {
  std::vector<DiskId> ids;  // sorted
  double cost = 0.0;
  bool feasible = true;     // false only when forbidden vertices leave no solution
};

// Sum of weights over ids, accumulated in id order.
double SetCost(std::span<const DiskId> ids, std::span<const double> weights);

// Minimum-weight dominating set by branch and bound; ties go to the
// lexicographically smallest sorted id list. Cost grows as O(2^n), so n is
// capped (kInstanceTooLarge).
DominatingSolution ExactMinDominating(const IntersectionGraph& g,
                                      std::span<const double> weights,
                                      const ExactOptions& options = {});

}  // namespace dsdisk
