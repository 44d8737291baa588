#include "dsdisk/local_search.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "dsdisk/error.hpp"
#include "dsdisk/greedy.hpp"

namespace dsdisk {

int EffectiveSwapSize(const LocalSearchConfig& cfg) {
  if (cfg.epsilon) {
    if (!(*cfg.epsilon > 0.0) || !(cfg.c_ls > 0.0)) {
      throw Error(ErrorKind::kInvalidParams, "local search: epsilon and c_ls must be > 0");
    }
    return std::max(1, static_cast<int>(std::ceil(cfg.c_ls / (*cfg.epsilon * *cfg.epsilon))));
  }
  if (cfg.b < 1) throw Error(ErrorKind::kInvalidParams, "local search: b must be >= 1");
  return cfg.b;
}

namespace {

// Advances idx to the next k-combination of [0, n) in lexicographic order.
bool NextCombination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> FirstCombination(int k) {
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

std::optional<Swap> FindImprovingSwap(const IntersectionGraph& g, std::span<const DiskId> B,
                                      int b, bool pruned) {
  const int n = g.n();
  std::vector<DiskId> sol(B.begin(), B.end());
  std::sort(sol.begin(), sol.end());
  std::vector<char> in_b(static_cast<size_t>(n), 0);
  for (DiskId id : sol) in_b[id] = 1;
  std::vector<DiskId> outside;
  for (DiskId v = 0; v < n; ++v) {
    if (!in_b[v]) outside.push_back(v);
  }
  std::vector<int> cover(static_cast<size_t>(n), 0);
  for (DiskId id : sol) {
    for (DiskId v : g.closed_neighborhood(id)) ++cover[v];
  }

  const int m = static_cast<int>(sol.size());
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int k = 1; k <= std::min(b, m); ++k) {
    std::vector<int> xi = FirstCombination(k);
    do {
      std::vector<DiskId> undominated;
      for (int i : xi) {
        for (DiskId v : g.closed_neighborhood(sol[i])) {
          if (--cover[v] == 0) undominated.push_back(v);
        }
      }
      for (int i : xi) {
        for (DiskId v : g.closed_neighborhood(sol[i])) ++cover[v];
      }
      std::vector<DiskId> removed;
      for (int i : xi) removed.push_back(sol[i]);
      if (undominated.empty()) return Swap{removed, {}, m - k};

      std::vector<DiskId> candidates;
      if (pruned) {
        std::fill(hit.begin(), hit.end(), 0);
        for (DiskId u : undominated) hit[u] = 1;
        for (DiskId y : outside) {
          const auto nb = g.closed_neighborhood(y);
          if (std::any_of(nb.begin(), nb.end(), [&](DiskId v) { return hit[v] != 0; })) {
            candidates.push_back(y);
          }
        }
      } else {
        candidates = outside;
      }
      const int c = static_cast<int>(candidates.size());
      for (int s = 1; s <= std::min(k - 1, c); ++s) {
        std::vector<int> yi = FirstCombination(s);
        do {
          std::fill(hit.begin(), hit.end(), 0);
          for (int j : yi) {
            for (DiskId v : g.closed_neighborhood(candidates[j])) hit[v] = 1;
          }
          if (std::all_of(undominated.begin(), undominated.end(),
                          [&](DiskId u) { return hit[u] != 0; })) {
            std::vector<DiskId> added;
            for (int j : yi) added.push_back(candidates[j]);
            return Swap{removed, added, m - k + s};
          }
        } while (NextCombination(yi, c));
      }
    } while (NextCombination(xi, m));
  }
  return std::nullopt;
}

bool IsLocallyOptimal(const IntersectionGraph& g, std::span<const DiskId> B, int b) {
  return !FindImprovingSwap(g, B, b, /*pruned=*/false).has_value();
}

std::vector<DiskId> ContainmentReplace(const DiskInstance& inst, std::span<const DiskId> B,
                                       int* replacements) {
  std::vector<DiskId> cur(B.begin(), B.end());
  int count = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (DiskId& u : cur) {
      DiskId best = -1;
      for (const Disk& v : inst.disks()) {
        if (v.id == u || !ProperlyContains(v, inst[u])) continue;
        if (best < 0 || v.r > inst[best].r) best = v.id;
      }
      if (best >= 0) {
        u = best;
        ++count;
        changed = true;
      }
    }
  }
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  if (replacements) *replacements = count;
  return cur;
}

bool ContainmentFree(const DiskInstance& inst, std::span<const DiskId> ids) {
  for (DiskId u : ids) {
    for (const Disk& v : inst.disks()) {
      if (v.id != u && ProperlyContains(v, inst[u])) return false;
    }
  }
  return true;
}

LocalSearchResult LocalSearch(const DiskInstance& inst, const IntersectionGraph& g,
                              const LocalSearchConfig& cfg) {
  if (inst.empty()) throw Error(ErrorKind::kPreconditionViolation, "local search: empty instance");
  LocalSearchResult result;
  result.b = EffectiveSwapSize(cfg);

  std::vector<DiskId> B;
  if (cfg.greedy_warm_start) {
    B = GreedyDominating(g, inst.weights());
  } else {
    for (DiskId v = 0; v < inst.size(); ++v) B.push_back(v);
  }

  int iterations = 0;
  for (;;) {
    if (auto swap = FindImprovingSwap(g, B, result.b)) {
      if (++iterations > cfg.max_iterations) {
        throw Error(ErrorKind::kIterationCapExceeded,
                    fmt::format("local search: more than {} swaps", cfg.max_iterations));
      }
      std::vector<DiskId> next;
      std::set_difference(B.begin(), B.end(), swap->removed.begin(), swap->removed.end(),
                          std::back_inserter(next));
      next.insert(next.end(), swap->added.begin(), swap->added.end());
      std::sort(next.begin(), next.end());
      if (!IsDominating(g, next) || next.size() >= B.size()) {
        throw Error(ErrorKind::kPreconditionViolation, "local search: swap broke domination");
      }
      B = std::move(next);
      result.trace.push_back(std::move(*swap));
      continue;
    }
    int replaced = 0;
    std::vector<DiskId> next = ContainmentReplace(inst, B, &replaced);
    if (next == B) break;
    if (!IsDominating(g, next)) {
      throw Error(ErrorKind::kPreconditionViolation, "local search: replacement broke domination");
    }
    result.replacements += replaced;
    B = std::move(next);
  }
  result.ids = std::move(B);
  return result;
}

LocalSearchResult LocalSearch(const DiskInstance& inst, const LocalSearchConfig& cfg) {
  return LocalSearch(inst, BuildGraph(inst), cfg);
}

}  // namespace dsdisk
