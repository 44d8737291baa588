#pragma once

// Brute-force oracles for tests. They use direct formulas and full
// enumeration only, never the library's graph, search or LP code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "dsdisk/generate.hpp"
#include "dsdisk/geometry.hpp"

namespace oracle {

inline bool Touch(const dsdisk::Disk& a, const dsdisk::Disk& b) {
  const double dx = a.cx - b.cx, dy = a.cy - b.cy;
  return std::sqrt(dx * dx + dy * dy) <= a.r + b.r + 1e-9;
}

inline std::vector<std::pair<int, int>> Edges(const dsdisk::DiskInstance& inst) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < inst.size(); ++i) {
    for (int j = i + 1; j < inst.size(); ++j) {
      if (Touch(inst[i], inst[j])) e.emplace_back(i, j);
    }
  }
  return e;
}

// Bit v of closed[u] is set iff u and v touch (or u == v).
inline std::vector<uint32_t> ClosedMasks(const dsdisk::DiskInstance& inst) {
  std::vector<uint32_t> m(static_cast<size_t>(inst.size()), 0);
  for (int i = 0; i < inst.size(); ++i) {
    for (int j = 0; j < inst.size(); ++j) {
      if (i == j || Touch(inst[i], inst[j])) m[i] |= 1u << j;
    }
  }
  return m;
}

inline bool Dominates(const std::vector<uint32_t>& closed, uint32_t set) {
  uint32_t covered = 0;
  for (size_t u = 0; u < closed.size(); ++u) {
    if (set >> u & 1u) covered |= closed[u];
  }
  const uint32_t full = closed.size() == 32 ? ~0u : (1u << closed.size()) - 1;
  return covered == full;
}

inline std::vector<int> Ids(uint32_t m) {
  std::vector<int> ids;
  for (int i = 0; i < 32; ++i) {
    if (m >> i & 1u) ids.push_back(i);
  }
  return ids;
}

struct Optimum {
  std::vector<int> ids;
  double cost = 0.0;
};

// Full 2^n enumeration; ties (within 1e-9 relative) to the lexicographically
// smallest sorted id list.
inline Optimum EnumerateMinDominating(const dsdisk::DiskInstance& inst) {
  const auto closed = ClosedMasks(inst);
  const int n = inst.size();
  Optimum best;
  best.cost = std::numeric_limits<double>::infinity();
  for (uint32_t m = 0; m < (1u << n); ++m) {
    if (!Dominates(closed, m)) continue;
    double c = 0.0;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1u) c += inst[i].w;
    }
    const auto ids = Ids(m);
    const bool first = best.ids.empty();
    const double tie = first ? 0.0 : 1e-9 * std::max(1.0, std::abs(best.cost));
    if (first || c < best.cost - tie || (c <= best.cost + tie && ids < best.ids)) {
      best.cost = c;
      best.ids = ids;
    }
  }
  return best;
}

// True iff some X subset of B (|X| <= b) and Y outside B (|Y| <= |X| - 1)
// give a dominating (B \ X) u Y.
inline bool ImprovingSwapExists(const dsdisk::DiskInstance& inst, const std::vector<int>& B, int b) {
  const auto closed = ClosedMasks(inst);
  const int n = inst.size();
  uint32_t bmask = 0;
  for (int id : B) bmask |= 1u << id;
  const uint32_t outside = ((1u << n) - 1) & ~bmask;
  for (uint32_t x = bmask;; x = (x - 1) & bmask) {
    const int xs = __builtin_popcount(x);
    if (xs >= 1 && xs <= b) {
      for (uint32_t y = outside;; y = (y - 1) & outside) {
        if (__builtin_popcount(y) <= xs - 1 && Dominates(closed, (bmask & ~x) | y)) return true;
        if (y == 0) break;
      }
    }
    if (x == 0) break;
  }
  return false;
}

inline dsdisk::DiskInstance RandomInstance(uint64_t seed, int n,
                                           dsdisk::GeneratorKind kind = dsdisk::GeneratorKind::kUniform,
                                           dsdisk::WeightMode weights = dsdisk::WeightMode::kUnit) {
  dsdisk::GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  spec.weight_mode = weights;
  return dsdisk::Generate(spec);
}

}  // namespace oracle
