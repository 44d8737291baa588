#include "dsdisk/greedy.hpp"

#include <algorithm>

namespace dsdisk {

std::vector<DiskId> GreedyDominating(const IntersectionGraph& g, std::span<const double> weights) {
  const int n = g.n();
  std::vector<char> dominated(static_cast<size_t>(n), 0);
  std::vector<char> picked(static_cast<size_t>(n), 0);
  int remaining = n;
  std::vector<DiskId> out;
  while (remaining > 0) {
    DiskId best = -1;
    long best_gain = 0;
    for (DiskId u = 0; u < n; ++u) {
      if (picked[u]) continue;
      long gain = 0;
      for (DiskId v : g.closed_neighborhood(u)) gain += dominated[v] ? 0 : 1;
      if (gain == 0) continue;
      // w_u / gain_u < w_best / gain_best, cross-multiplied.
      if (best < 0 || weights[u] * best_gain < weights[best] * gain) {
        best = u;
        best_gain = gain;
      }
    }
    picked[best] = 1;
    out.push_back(best);
    for (DiskId v : g.closed_neighborhood(best)) {
      if (!dominated[v]) {
        dominated[v] = 1;
        --remaining;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dsdisk
