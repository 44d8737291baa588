#pragma once

#include <cstdint>
#include <vector>

#include "dsdisk/graph.hpp"
#include "dsdisk/lp.hpp"
#include "dsdisk/rng.hpp"

namespace dsdisk {

struct SparsifyConfig {
  double c = 16.0;  // inclusion probability min(1, c log2 L / L)
  uint64_t seed = 0;
  int trials = 0;   // <= 0: ceil(log2 n) + 1
  double lp_tol = kDefaultLpTol;
};

// One copy of a disk in a multiset.
struct Entry {
  DiskId id = 0;
  int copy = 0;

  auto operator<=>(const Entry&) const = default;
};

std::vector<Entry> Entries(const DiskMultiset& D);

struct DiskSequence {
  std::vector<Entry> order;        // sigma: processing order
  std::vector<long> cover_counts;  // classes covered by order[i] when it was removed
  std::vector<bool> from_stop_rule;  // order[i] was in the final < L leftover
};

// ceil(log2 L) for L >= 1.
long CeilLog2(long L);
// L_1 = n, L_{i+1} = ceil(log2 L_i), stopping once L <= 2. Returns the L
// values of the rounds actually run.
std::vector<long> RoundSchedule(long n);

// Greedy removal of the entry covering the fewest classes (disks with depth
// <= 2L in the remaining entries, grouped by neighborhood); the last < L
// entries are left in (id, copy) order. sigma is the reverse of the removal.
DiskSequence BuildSequence(const DiskMultiset& D, const IntersectionGraph& g, long L);

struct RoundStats {
  long L = 0;
  long target = 0;
  double probability = 0.0;
  long size_in = 0;
  long size_out = 0;
  double weight_in = 0.0;
  double weight_out = 0.0;
  int bands = 0;
  long forced = 0;
  long coin_hits = 0;
  long coverage_violations = 0;  // always 0 unless the coverage check is bypassed
};

struct SparsifyOptions {
  // Test hook: skip the coverage assertion and only count violations.
  bool assert_coverage = true;
};

// D' subset of D such that every v with depth(v, D) >= L keeps depth
// >= ceil(log2 L) and every v with 1 <= depth < L keeps
// depth >= min(depth, ceil(log2 L)). Requires L >= 2.
DiskMultiset SparsifyOnce(const DiskMultiset& D, const DiskInstance& inst,
                          const IntersectionGraph& g, long L, const SparsifyConfig& cfg,
                          SplitMix64& rng, RoundStats* stats = nullptr,
                          const SparsifyOptions& options = {});

struct RecursiveResult {
  DiskMultiset final_set;
  std::vector<RoundStats> rounds;
};

RecursiveResult RecursiveSparsify(const DiskMultiset& D0, const DiskInstance& inst,
                                  const IntersectionGraph& g, const SparsifyConfig& cfg,
                                  SplitMix64& rng);

struct WeightedReport {
  double lambda_star = 0.0;
  double ratio = 0.0;  // cost / lambda*
  int rounds = 0;
  int trials = 0;
  int best_trial = 0;
  long d0_size = 0;
  double d0_weight = 0.0;
  std::vector<double> trial_costs;
  std::vector<RoundStats> best_rounds;
};

struct WeightedResult {
  std::vector<DiskId> ids;
  double cost = 0.0;
  WeightedReport report;
};

int DefaultTrials(int n);

// LP -> D_0 -> independent sparsification trials -> cheapest D_t collapsed
// to its distinct ids. Trials run in parallel; output is schedule-independent.
WeightedResult WeightedDominatingSet(const DiskInstance& inst, const IntersectionGraph& g,
                                     const SparsifyConfig& cfg);
WeightedResult WeightedDominatingSet(const DiskInstance& inst, const SparsifyConfig& cfg);

// max over integers 0 < x < log L of (c e (L-1) log L / (L x))^x, with
// log taken in base `log_base`.
double SamplingBoundMaxTerm(double c, double L, double log_base = 2.0);

}  // namespace dsdisk
