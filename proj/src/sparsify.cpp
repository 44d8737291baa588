#include "dsdisk/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include <fmt/format.h>

#include "dsdisk/error.hpp"
#include "dsdisk/exact.hpp"

namespace dsdisk {

std::vector<Entry> Entries(const DiskMultiset& D) {
  std::vector<Entry> out;
  out.reserve(static_cast<size_t>(D.size()));
  for (const auto& [id, m] : D.entries()) {
    for (int c = 0; c < m; ++c) out.push_back({id, c});
  }
  return out;
}

long CeilLog2(long L) {
  long k = 0;
  while ((1L << k) < L) ++k;
  return k;
}

std::vector<long> RoundSchedule(long n) {
  std::vector<long> out;
  for (long L = n; L > 2; L = CeilLog2(L)) out.push_back(L);
  return out;
}

namespace {

// Zobrist codes make a neighborhood key an XOR of per-disk words, so a
// key can be updated in O(1) when a disk's last copy leaves.
std::vector<uint64_t> ZobristCodes(int n) {
  SplitMix64 rng(0x5EED5EED5EED5EEDULL);
  std::vector<uint64_t> z(static_cast<size_t>(n));
  for (auto& v : z) v = rng.Next();
  return z;
}

}  // namespace

DiskSequence BuildSequence(const DiskMultiset& D, const IntersectionGraph& g, long L) {
  if (L < 1) throw Error(ErrorKind::kInvalidParams, "build_sequence: L must be >= 1");
  const int n = g.n();
  const long cap = 2 * L;
  const auto zobrist = ZobristCodes(n);

  std::vector<int> mult(static_cast<size_t>(n), 0);
  for (const auto& [id, m] : D.entries()) mult[id] = m;
  std::vector<long> depth = AllDepths(D, g);
  std::vector<uint64_t> key(static_cast<size_t>(n), 0);
  for (DiskId v = 0; v < n; ++v) {
    for (DiskId u : g.closed_neighborhood(v)) {
      if (mult[u] > 0) key[v] ^= zobrist[u];
    }
  }

  std::vector<uint64_t> scratch;
  auto cover_count = [&](DiskId d) {
    scratch.clear();
    for (DiskId v : g.closed_neighborhood(d)) {
      if (depth[v] <= cap) scratch.push_back(key[v]);
    }
    std::sort(scratch.begin(), scratch.end());
    return static_cast<long>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
  };

  std::vector<Entry> removal;
  std::vector<long> counts;
  std::vector<bool> stop_rule;
  long remaining = D.size();
  removal.reserve(static_cast<size_t>(remaining));
  while (remaining >= L && remaining > 0) {
    DiskId pick = -1;
    long pick_count = std::numeric_limits<long>::max();
    // Among ties the highest id leaves first, so sigma lists ties ascending.
    for (DiskId d = n - 1; d >= 0; --d) {
      if (mult[d] == 0) continue;
      const long c = cover_count(d);
      if (c < pick_count) {
        pick_count = c;
        pick = d;
      }
    }
    --mult[pick];
    removal.push_back({pick, mult[pick]});
    counts.push_back(pick_count);
    stop_rule.push_back(false);
    --remaining;
    for (DiskId v : g.closed_neighborhood(pick)) {
      --depth[v];
      if (mult[pick] == 0) key[v] ^= zobrist[pick];
    }
  }
  // Stop rule: the leftover goes to the front of sigma in (id, copy) order.
  for (DiskId d = n - 1; d >= 0; --d) {
    if (mult[d] == 0) continue;
    const long c = cover_count(d);
    for (int copy = mult[d] - 1; copy >= 0; --copy) {
      removal.push_back({d, copy});
      counts.push_back(c);
      stop_rule.push_back(true);
    }
  }

  DiskSequence seq;
  seq.order.assign(removal.rbegin(), removal.rend());
  seq.cover_counts.assign(counts.rbegin(), counts.rend());
  seq.from_stop_rule.assign(stop_rule.rbegin(), stop_rule.rend());
  return seq;
}

DiskMultiset SparsifyOnce(const DiskMultiset& D, const DiskInstance& inst,
                          const IntersectionGraph& g, long L, const SparsifyConfig& cfg,
                          SplitMix64& rng, RoundStats* stats, const SparsifyOptions& options) {
  if (L < 2) throw Error(ErrorKind::kInvalidParams, "sparsify: L must be >= 2");
  const int n = g.n();
  const long target = CeilLog2(L);
  const double p =
      cfg.c <= 0.0 ? 0.0 : std::min(1.0, cfg.c * std::log2(static_cast<double>(L)) / L);

  const std::vector<Entry> entries = Entries(D);
  std::vector<long> offset(static_cast<size_t>(n) + 1, 0);
  for (DiskId d = 0; d < n; ++d) offset[d + 1] = offset[d] + D.multiplicity(d);
  auto index_of = [&](const Entry& e) { return static_cast<size_t>(offset[e.id] + e.copy); };

  std::vector<char> include(entries.size(), 0);
  long coin_hits = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    include[i] = rng.Bernoulli(p) ? 1 : 0;
    coin_hits += include[i];
  }

  const std::vector<long> depth0 = AllDepths(D, g);
  long forced = 0;
  int bands = 0;
  if (coin_hits < static_cast<long>(entries.size())) {
    const long max_depth = *std::max_element(depth0.begin(), depth0.end());
    std::vector<long> need(static_cast<size_t>(n));
    std::vector<long> ahead(static_cast<size_t>(n));
    std::vector<long> have(static_cast<size_t>(n));
    for (long lo = L; lo == L || lo <= max_depth; lo *= 2) {
      // Band [lo, 2 lo); the first band also carries the shallow disks.
      bool any = false;
      for (DiskId v = 0; v < n; ++v) {
        need[v] = 0;
        if (depth0[v] >= lo && depth0[v] < 2 * lo) {
          need[v] = target;
        } else if (lo == L && depth0[v] >= 1 && depth0[v] < L) {
          need[v] = std::min(depth0[v], target);
        }
        any = any || need[v] > 0;
        ahead[v] = depth0[v];
        have[v] = 0;
      }
      if (!any) continue;
      ++bands;
      const DiskSequence sigma = BuildSequence(D, g, lo);
      for (const Entry& e : sigma.order) {
        const auto nb = g.closed_neighborhood(e.id);
        bool is_forced = false;
        for (DiskId v : nb) {
          if (need[v] == 0) continue;
          --ahead[v];
          if (have[v] + ahead[v] < need[v]) is_forced = true;
        }
        const size_t idx = index_of(e);
        if (is_forced || include[idx]) {
          if (is_forced && !include[idx]) ++forced;
          include[idx] = 1;
          for (DiskId v : nb) {
            if (need[v] > 0) ++have[v];
          }
        }
      }
    }
  }

  DiskMultiset out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (include[i]) out.Add(inst[entries[i].id]);
  }

  const std::vector<long> depth1 = AllDepths(out, g);
  long violations = 0;
  DiskId first_bad = -1;
  for (DiskId v = 0; v < n; ++v) {
    const long want = depth0[v] >= L ? target : std::min(depth0[v], target);
    if (depth1[v] < want) {
      ++violations;
      if (first_bad < 0) first_bad = v;
    }
  }
  if (stats) {
    stats->L = L;
    stats->target = target;
    stats->probability = p;
    stats->size_in = D.size();
    stats->size_out = out.size();
    stats->weight_in = D.weight();
    stats->weight_out = out.weight();
    stats->bands = bands;
    stats->forced = forced;
    stats->coin_hits = coin_hits;
    stats->coverage_violations = violations;
  }
  if (violations > 0 && options.assert_coverage) {
    throw Error(ErrorKind::kCoverageAssertion,
                fmt::format("sparsify L={}: disk {} lost coverage ({} -> {}, target {})", L,
                            first_bad, depth0[first_bad], depth1[first_bad], target));
  }
  return out;
}

RecursiveResult RecursiveSparsify(const DiskMultiset& D0, const DiskInstance& inst,
                                  const IntersectionGraph& g, const SparsifyConfig& cfg,
                                  SplitMix64& rng) {
  RecursiveResult result;
  result.final_set = D0;
  for (long L : RoundSchedule(inst.size())) {
    RoundStats stats;
    DiskMultiset next = SparsifyOnce(result.final_set, inst, g, L, cfg, rng, &stats);
    if (next.RecomputeWeight(inst) > result.final_set.RecomputeWeight(inst)) {
      throw Error(ErrorKind::kCoverageAssertion, "sparsify: round increased the weight");
    }
    result.final_set = std::move(next);
    result.rounds.push_back(stats);
  }
  const auto depth = AllDepths(result.final_set, g);
  if (std::any_of(depth.begin(), depth.end(), [](long d) { return d < 1; })) {
    throw Error(ErrorKind::kCoverageAssertion, "sparsify: final multiset does not dominate");
  }
  return result;
}

int DefaultTrials(int n) { return static_cast<int>(CeilLog2(std::max(n, 1))) + 1; }

WeightedResult WeightedDominatingSet(const DiskInstance& inst, const IntersectionGraph& g,
                                     const SparsifyConfig& cfg) {
  if (inst.empty()) throw Error(ErrorKind::kPreconditionViolation, "weighted: empty instance");
  const LpProblem lp = BuildLp(inst, g);
  const LpSolution sol = SolveLp(lp, cfg.lp_tol);
  const DiskMultiset D0 = RoundToMultiset(sol, inst, g, cfg.lp_tol);

  const int trials = cfg.trials > 0 ? cfg.trials : DefaultTrials(inst.size());
  std::vector<RecursiveResult> runs(static_cast<size_t>(trials));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(trials));
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < trials; ++t) {
    try {
      SplitMix64 rng(DeriveSeed(cfg.seed, static_cast<uint64_t>(t)));
      runs[t] = RecursiveSparsify(D0, inst, g, cfg, rng);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const auto weights = inst.weights();
  WeightedResult result;
  result.report.lambda_star = sol.lambda_star;
  result.report.trials = trials;
  result.report.d0_size = D0.size();
  result.report.d0_weight = D0.RecomputeWeight(inst);
  double best = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const double cost = SetCost(runs[t].final_set.ids(), weights);
    result.report.trial_costs.push_back(cost);
    if (cost < best) {
      best = cost;
      result.report.best_trial = t;
    }
  }
  const RecursiveResult& chosen = runs[result.report.best_trial];
  result.ids = chosen.final_set.ids();
  result.cost = best;
  result.report.rounds = static_cast<int>(chosen.rounds.size());
  result.report.best_rounds = chosen.rounds;
  result.report.ratio = sol.lambda_star > 0.0 ? best / sol.lambda_star : 1.0;
  return result;
}

WeightedResult WeightedDominatingSet(const DiskInstance& inst, const SparsifyConfig& cfg) {
  return WeightedDominatingSet(inst, BuildGraph(inst), cfg);
}

double SamplingBoundMaxTerm(double c, double L, double log_base) {
  const double lg = std::log(L) / std::log(log_base);
  double best = 0.0;
  for (int x = 1; x < lg; ++x) {
    const double base = c * std::exp(1.0) * (L - 1.0) * lg / (L * x);
    best = std::max(best, std::pow(base, x));
  }
  return best;
}

}  // namespace dsdisk
