#pragma once

#include <span>
#include <vector>

#include "dsdisk/graph.hpp"

namespace dsdisk {

// Cost-effectiveness greedy over closed neighborhoods: repeatedly takes the
// disk minimizing weight / newly dominated count, ties to the lowest id.
std::vector<DiskId> GreedyDominating(const IntersectionGraph& g, std::span<const double> weights);

}  // namespace dsdisk
