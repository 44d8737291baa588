#include "dsdisk/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dsdisk/error.hpp"

namespace dsdisk {

double SetCost(std::span<const DiskId> ids, std::span<const double> weights) {
  std::vector<DiskId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  double cost = 0.0;
  for (DiskId id : sorted) cost += weights[id];
  return cost;
}

namespace {

using Mask = uint64_t;

std::vector<DiskId> MaskIds(Mask m) {
  std::vector<DiskId> ids;
  while (m != 0) {
    ids.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return ids;
}

class BranchAndBound {
 public:
  BranchAndBound(const IntersectionGraph& g, std::span<const double> weights, Mask allowed)
      : n_(g.n()), weights_(weights), allowed_(allowed) {
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    closed_.resize(static_cast<size_t>(n_));
    for (DiskId v = 0; v < n_; ++v) {
      for (DiskId u : g.closed_neighborhood(v)) closed_[v] |= Mask{1} << u;
    }
  }

  bool Feasible() const {
    return std::all_of(closed_.begin(), closed_.end(),
                       [&](Mask m) { return (m & allowed_) != 0; });
  }

  DominatingSolution Run() {
    if (!Feasible()) return {{}, 0.0, false};
    // The full allowed set dominates; it seeds the incumbent.
    Offer(allowed_);
    Search(0, 0, 0, 0.0);
    return {MaskIds(best_), best_cost_, true};
  }

 private:
  double Tie() const { return 1e-9 * std::max(1.0, std::abs(best_cost_)); }

  double CostOf(Mask m) const {
    double c = 0.0;
    for (DiskId id : MaskIds(m)) c += weights_[id];
    return c;
  }

  void Offer(Mask chosen) {
    const double c = CostOf(chosen);
    if (!have_best_ || c < best_cost_ - Tie() ||
        (c <= best_cost_ + Tie() && MaskIds(chosen) < MaskIds(best_))) {
      best_ = chosen;
      best_cost_ = c;
      have_best_ = true;
    }
  }

  void Search(Mask chosen, Mask dominated, Mask excluded, double cost) {
    if (dominated == full_) {
      Offer(chosen);
      return;
    }
    const Mask usable = allowed_ & ~excluded;
    double bound = 0.0;
    int branch_vertex = -1;
    int branch_size = std::numeric_limits<int>::max();
    for (Mask rest = full_ & ~dominated; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask cand = closed_[v] & usable;
      if (cand == 0) return;
      double cheapest = std::numeric_limits<double>::infinity();
      for (Mask c = cand; c != 0; c &= c - 1) cheapest = std::min(cheapest, weights_[std::countr_zero(c)]);
      bound = std::max(bound, cheapest);
      const int size = std::popcount(cand);
      if (size < branch_size) {
        branch_size = size;
        branch_vertex = v;
      }
    }
    if (cost + bound > best_cost_ + Tie()) return;
    Mask skipped = 0;
    for (Mask c = closed_[branch_vertex] & usable; c != 0; c &= c - 1) {
      const int u = std::countr_zero(c);
      Search(chosen | (Mask{1} << u), dominated | closed_[u], excluded | skipped,
             cost + weights_[u]);
      skipped |= Mask{1} << u;
    }
  }

  int n_;
  std::span<const double> weights_;
  Mask allowed_;
  Mask full_ = 0;
  std::vector<Mask> closed_;
  Mask best_ = 0;
  double best_cost_ = std::numeric_limits<double>::infinity();
  bool have_best_ = false;
};

}  // namespace

DominatingSolution ExactMinDominating(const IntersectionGraph& g, std::span<const double> weights,
                                      const ExactOptions& options) {
  const int n = g.n();
  if (n > options.cap || n > 64) {
    throw Error(ErrorKind::kInstanceTooLarge,
                fmt::format("exact solver: n = {} exceeds cap {}", n, std::min(options.cap, 64)));
  }
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorKind::kInvalidParams, "exact solver: weight count differs from n");
  }
  if (n == 0) return {};
  Mask allowed = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (DiskId f : options.forbidden) {
    if (f >= 0 && f < n) allowed &= ~(Mask{1} << f);
  }
  return BranchAndBound(g, weights, allowed).Run();
}

}  // namespace dsdisk
