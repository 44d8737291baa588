#pragma once

#include <ostream>
#include <vector>

#include "dsdisk/graph.hpp"

namespace dsdisk {

inline constexpr double kDefaultLpTol = 1e-7;

// min sum_d w_d x_d  s.t.  sum_{d' in N[d]} x_{d'} >= 1 for every d,  x >= 0.
struct LpProblem {
  int n = 0;
  std::vector<double> objective;
  std::vector<std::vector<DiskId>> rows;  // rows[d] = N[d], sorted
};

struct LpSolution {
  std::vector<double> x;
  double lambda_star = 0.0;      // objective of x
  double dual_objective = 0.0;   // objective of the packing dual
  double feasibility_slack = 0.0;  // min_d (row activity - 1)
  int pivots = 0;
};

LpProblem BuildLp(const DiskInstance& inst, const IntersectionGraph& g);

// Dense tableau simplex with Bland's rule on the packing dual.
// Throws kNumericalFailure if the primal is infeasible beyond tol, the
// duality gap exceeds tol, or the pivot budget runs out.
LpSolution SolveLp(const LpProblem& p, double tol = kDefaultLpTol);

double RowActivity(const LpProblem& p, const std::vector<double>& x, DiskId row);

// D_0: floor(2n x_d) copies of every disk with x_d >= 1/(2n). Checks
// wt(D_0) <= 2n * lambda* (up to n * max_w * tol) and that every disk is
// n-covered; throws kCoverageAssertion otherwise.
DiskMultiset RoundToMultiset(const LpSolution& sol, const DiskInstance& inst,
                             const IntersectionGraph& g, double tol = kDefaultLpTol);

// CPLEX LP text format, for cross-checking with external solvers.
void WriteLpFormat(const LpProblem& p, std::ostream& os);

}  // namespace dsdisk
