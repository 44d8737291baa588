#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsdisk/geometry.hpp"

namespace dsdisk {

struct SolveRequest {
  std::string algorithm = "local-search";  // local-search | weighted-lp | greedy | exact
  int b = 2;
  std::optional<double> epsilon;
  double c_ls = 1.0;
  double c = 16.0;
  int trials = 0;  // <= 0: automatic
  uint64_t seed = 0;
  int exact_cap = 24;
};

// Runs one algorithm and returns the solution document. The solution is
// checked to dominate before it is returned (kPreconditionViolation if not).
nlohmann::json Solve(const DiskInstance& inst, const SolveRequest& request);

struct VerifyReport {
  std::vector<std::string> passed;
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

// Replays a solution document against the instance: domination, cost,
// b-local optimality and containment for local search, and a full replay of
// the sparsification chain (with its coverage assertions) for weighted runs.
VerifyReport Verify(const DiskInstance& inst, const nlohmann::json& solution);

}  // namespace dsdisk
