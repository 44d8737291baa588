#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dsdisk/graph.hpp"

namespace dsdisk {

struct LocalSearchConfig {
  int b = 2;
  // When set, b = ceil(c_ls / epsilon^2).
  std::optional<double> epsilon;
  double c_ls = 1.0;
  int max_iterations = 1 << 20;
  uint64_t seed = 0;
  bool greedy_warm_start = false;
};

struct Swap {
  std::vector<DiskId> removed;
  std::vector<DiskId> added;
  int size_after = 0;
};

struct LocalSearchResult {
  std::vector<DiskId> ids;  // sorted
  std::vector<Swap> trace;
  int b = 0;
  int replacements = 0;  // containment replacements applied
};

int EffectiveSwapSize(const LocalSearchConfig& cfg);

// b-locally optimal dominating set, starting from all disks and alternating
// first-improvement swaps with ContainmentReplace until neither applies.
LocalSearchResult LocalSearch(const DiskInstance& inst, const IntersectionGraph& g,
                              const LocalSearchConfig& cfg);
LocalSearchResult LocalSearch(const DiskInstance& inst, const LocalSearchConfig& cfg);

// First improving swap in the fixed order (|X| ascending, X lexicographic,
// then |Y| ascending, Y lexicographic). `pruned` restricts Y to disks that
// touch a vertex left undominated by B \ X; both modes return the same swap.
std::optional<Swap> FindImprovingSwap(const IntersectionGraph& g, std::span<const DiskId> B,
                                      int b, bool pruned = true);

// Exhaustive, unpruned check that no swap of size <= b improves B.
bool IsLocallyOptimal(const IntersectionGraph& g, std::span<const DiskId> B, int b);

// Replaces each u in B that is properly contained in some disk of the
// instance by the largest container (max radius, then lowest id), to a
// fixpoint. Returns a sorted, duplicate-free set.
std::vector<DiskId> ContainmentReplace(const DiskInstance& inst, std::span<const DiskId> B,
                                       int* replacements = nullptr);

// True iff no disk of ids is properly contained in any disk of the instance.
bool ContainmentFree(const DiskInstance& inst, std::span<const DiskId> ids);

}  // namespace dsdisk
