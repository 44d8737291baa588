#include "dsdisk/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dsdisk/error.hpp"

namespace dsdisk {

LpProblem BuildLp(const DiskInstance& inst, const IntersectionGraph& g) {
  LpProblem p;
  p.n = inst.size();
  p.objective = inst.weights();
  p.rows.resize(static_cast<size_t>(p.n));
  for (DiskId d = 0; d < p.n; ++d) {
    const auto nb = g.closed_neighborhood(d);
    p.rows[d].assign(nb.begin(), nb.end());
  }
  return p;
}

double RowActivity(const LpProblem& p, const std::vector<double>& x, DiskId row) {
  double s = 0.0;
  for (DiskId j : p.rows[row]) s += x[j];
  return s;
}

namespace {

constexpr double kPivotEps = 1e-11;

// Tableau for  max sum_i y_i  s.t.  sum_{i : j in rows[i]} y_i <= w_j,  y >= 0.
// Columns 0..n-1 hold y, n..2n-1 the slacks, 2n the right-hand side; row n
// is the objective row of reduced costs.
class PackingSimplex {
 public:
  explicit PackingSimplex(const LpProblem& p) : n_(p.n), cols_(2 * p.n + 1) {
    t_.assign(static_cast<size_t>(n_ + 1) * cols_, 0.0);
    basis_.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      for (DiskId j : p.rows[i]) at(j, i) = 1.0;  // y_i appears in constraint j
    }
    for (int j = 0; j < n_; ++j) {
      at(j, n_ + j) = 1.0;
      at(j, 2 * n_) = p.objective[j];
      basis_[j] = n_ + j;
    }
    for (int i = 0; i < n_; ++i) at(n_, i) = -1.0;
  }

  // Bland's rule: smallest entering index with negative reduced cost,
  // smallest basic index among ratio-test ties.
  int Solve(int max_pivots) {
    int pivots = 0;
    for (;;) {
      int enter = -1;
      for (int c = 0; c < 2 * n_; ++c) {
        if (at(n_, c) < -kPivotEps) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return pivots;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < n_; ++r) {
        const double a = at(r, enter);
        if (a <= kPivotEps) continue;
        const double ratio = at(r, 2 * n_) / a;
        if (ratio < best - kPivotEps ||
            (ratio <= best + kPivotEps && leave >= 0 && basis_[r] < basis_[leave])) {
          if (ratio < best) best = ratio;
          leave = r;
        }
      }
      if (leave < 0) {
        throw Error(ErrorKind::kNumericalFailure, "simplex: packing dual reported unbounded");
      }
      Pivot(leave, enter);
      if (++pivots > max_pivots) {
        throw Error(ErrorKind::kNumericalFailure,
                    fmt::format("simplex: pivot budget {} exhausted", max_pivots));
      }
    }
  }

  double objective() const { return at(n_, 2 * n_); }
  // Shadow price of constraint j, i.e. the primal x_j.
  double shadow_price(int j) const { return at(n_, n_ + j); }

 private:
  double& at(int r, int c) { return t_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return t_[static_cast<size_t>(r) * cols_ + c]; }

  void Pivot(int r, int c) {
    const double inv = 1.0 / at(r, c);
    for (int k = 0; k < cols_; ++k) at(r, k) *= inv;
    at(r, c) = 1.0;
    for (int i = 0; i <= n_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int k = 0; k < cols_; ++k) at(i, k) -= f * at(r, k);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  int n_;
  int cols_;
  std::vector<double> t_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution SolveLp(const LpProblem& p, double tol) {
  LpSolution sol;
  if (p.n == 0) return sol;
  for (const auto& row : p.rows) {
    if (row.empty()) throw Error(ErrorKind::kInvalidParams, "LP: empty covering row");
  }
  PackingSimplex simplex(p);
  sol.pivots = simplex.Solve(100 * p.n + 1000);
  sol.dual_objective = simplex.objective();

  sol.x.resize(static_cast<size_t>(p.n));
  for (int j = 0; j < p.n; ++j) sol.x[j] = std::max(0.0, simplex.shadow_price(j));
  double min_row = std::numeric_limits<double>::infinity();
  for (int d = 0; d < p.n; ++d) min_row = std::min(min_row, RowActivity(p, sol.x, d));
  if (min_row < 1.0 - tol) {
    throw Error(ErrorKind::kNumericalFailure,
                fmt::format("LP: primal row activity {} below 1 - tol", min_row));
  }
  if (min_row < 1.0) {
    for (double& v : sol.x) v /= min_row;
    min_row = std::numeric_limits<double>::infinity();
    for (int d = 0; d < p.n; ++d) min_row = std::min(min_row, RowActivity(p, sol.x, d));
  }
  sol.feasibility_slack = min_row - 1.0;
  for (int j = 0; j < p.n; ++j) sol.lambda_star += p.objective[j] * sol.x[j];
  if (sol.lambda_star - sol.dual_objective > tol * std::max(1.0, std::abs(sol.dual_objective))) {
    throw Error(ErrorKind::kNumericalFailure,
                fmt::format("LP: duality gap {} exceeds tolerance",
                            sol.lambda_star - sol.dual_objective));
  }
  return sol;
}

DiskMultiset RoundToMultiset(const LpSolution& sol, const DiskInstance& inst,
                             const IntersectionGraph& g, double tol) {
  const int n = inst.size();
  DiskMultiset D0;
  for (DiskId d = 0; d < n; ++d) {
    const double scaled = 2.0 * n * sol.x[d];
    if (scaled >= 1.0) D0.Add(inst[d], static_cast<int>(std::floor(scaled)));
  }
  double max_w = 0.0;
  for (const Disk& d : inst.disks()) max_w = std::max(max_w, d.w);
  const double weight = D0.RecomputeWeight(inst);
  if (weight > 2.0 * n * sol.lambda_star + n * max_w * tol) {
    throw Error(ErrorKind::kCoverageAssertion,
                fmt::format("rounding: wt(D0) = {} exceeds 2n*lambda* = {}", weight,
                            2.0 * n * sol.lambda_star));
  }
  const auto depth = AllDepths(D0, g);
  for (DiskId v = 0; v < n; ++v) {
    if (depth[v] < n) {
      throw Error(ErrorKind::kCoverageAssertion,
                  fmt::format("rounding: disk {} is only {}-covered by D0 (need {})", v, depth[v], n));
    }
  }
  return D0;
}

void WriteLpFormat(const LpProblem& p, std::ostream& os) {
  os << "\\ minimum weight dominating set, covering LP relaxation\n";
  os << "Minimize\n obj:";
  for (int j = 0; j < p.n; ++j) os << (j ? " + " : " ") << fmt::format("{} x{}", p.objective[j], j);
  os << "\nSubject To\n";
  for (int d = 0; d < p.n; ++d) {
    os << fmt::format(" c{}:", d);
    for (size_t k = 0; k < p.rows[d].size(); ++k) {
      os << (k ? " + " : " ") << "x" << p.rows[d][k];
    }
    os << " >= 1\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < p.n; ++j) os << fmt::format(" x{} >= 0\n", j);
  os << "End\n";
}

}  // namespace dsdisk
