#include "dsdisk/solve.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "dsdisk/error.hpp"
#include "dsdisk/exact.hpp"
#include "dsdisk/graph.hpp"
#include "dsdisk/greedy.hpp"
#include "dsdisk/local_search.hpp"
#include "dsdisk/sparsify.hpp"

namespace dsdisk {

namespace {

nlohmann::json RoundJson(const RoundStats& r) {
  return {{"L", r.L},
          {"target", r.target},
          {"probability", r.probability},
          {"size_in", r.size_in},
          {"size_out", r.size_out},
          {"weight_in", r.weight_in},
          {"weight_out", r.weight_out},
          {"bands", r.bands},
          {"forced", r.forced},
          {"coin_hits", r.coin_hits},
          {"retention", r.size_in > 0 ? static_cast<double>(r.size_out) / r.size_in : 1.0}};
}

}  // namespace

nlohmann::json Solve(const DiskInstance& inst, const SolveRequest& req) {
  const IntersectionGraph g = BuildGraph(inst);
  const auto weights = inst.weights();
  nlohmann::json out;
  out["algorithm"] = req.algorithm;
  out["n"] = inst.size();
  std::vector<DiskId> ids;

  if (req.algorithm == "local-search") {
    LocalSearchConfig cfg;
    cfg.b = req.b;
    cfg.epsilon = req.epsilon;
    cfg.c_ls = req.c_ls;
    cfg.seed = req.seed;
    const LocalSearchResult r = LocalSearch(inst, g, cfg);
    ids = r.ids;
    out["b"] = r.b;
    out["swaps"] = r.trace.size();
    out["replacements"] = r.replacements;
    out["seed"] = req.seed;
    if (req.epsilon) out["epsilon"] = *req.epsilon;
  } else if (req.algorithm == "weighted-lp") {
    SparsifyConfig cfg;
    cfg.c = req.c;
    cfg.seed = req.seed;
    cfg.trials = req.trials;
    const WeightedResult r = WeightedDominatingSet(inst, g, cfg);
    ids = r.ids;
    nlohmann::json rounds = nlohmann::json::array();
    for (const RoundStats& s : r.report.best_rounds) rounds.push_back(RoundJson(s));
    out["c"] = req.c;
    out["seed"] = req.seed;
    out["trials"] = r.report.trials;
    out["report"] = {{"lambda_star", r.report.lambda_star},
                     {"ratio", r.report.ratio},
                     {"t", r.report.rounds},
                     {"d0_size", r.report.d0_size},
                     {"d0_weight", r.report.d0_weight},
                     {"best_trial", r.report.best_trial},
                     {"trial_costs", r.report.trial_costs},
                     {"rounds", std::move(rounds)}};
  } else if (req.algorithm == "greedy") {
    ids = GreedyDominating(g, weights);
  } else if (req.algorithm == "exact") {
    ExactOptions opt;
    opt.cap = req.exact_cap;
    ids = ExactMinDominating(g, weights, opt).ids;
  } else {
    throw Error(ErrorKind::kInvalidParams, fmt::format("unknown algorithm '{}'", req.algorithm));
  }

  if (!IsDominating(g, ids)) {
    throw Error(ErrorKind::kPreconditionViolation,
                fmt::format("{} produced a non-dominating set", req.algorithm));
  }
  out["solution_ids"] = ids;
  out["cost"] = SetCost(ids, weights);
  return out;
}

VerifyReport Verify(const DiskInstance& inst, const nlohmann::json& solution) {
  VerifyReport report;
  auto check = [&](const std::string& name, bool ok) {
    (ok ? report.passed : report.failed).push_back(name);
  };

  std::vector<DiskId> ids;
  try {
    ids = solution.at("solution_ids").get<std::vector<DiskId>>();
  } catch (const nlohmann::json::exception&) {
    check("solution_ids present", false);
    return report;
  }
  const bool in_range = std::all_of(ids.begin(), ids.end(),
                                    [&](DiskId id) { return id >= 0 && id < inst.size(); });
  check("ids in range", in_range);
  if (!in_range) return report;

  const IntersectionGraph g = BuildGraph(inst);
  const auto weights = inst.weights();
  check("dominating", IsDominating(g, ids));
  const double cost = SetCost(ids, weights);
  if (solution.contains("cost")) {
    const double claimed = solution["cost"].get<double>();
    check("cost", std::abs(cost - claimed) <= 1e-9 * std::max(1.0, std::abs(cost)));
  }

  const std::string algorithm = solution.value("algorithm", std::string());
  if (algorithm == "local-search") {
    const int b = solution.value("b", 1);
    std::vector<DiskId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    check(fmt::format("{}-local optimality", b), IsLocallyOptimal(g, sorted, b));
    check("containment-free", ContainmentFree(inst, ids));
  } else if (algorithm == "weighted-lp") {
    SparsifyConfig cfg;
    cfg.c = solution.value("c", 16.0);
    cfg.seed = solution.value("seed", uint64_t{0});
    cfg.trials = solution.value("trials", 0);
    try {
      // The replay re-runs every coverage assertion of the chain.
      const WeightedResult replay = WeightedDominatingSet(inst, g, cfg);
      check("coverage chain replay", true);
      check("replay reproduces solution", replay.ids == ids);
      check("round count", replay.report.rounds ==
                               static_cast<int>(RoundSchedule(inst.size()).size()));
      bool monotone = true;
      for (const RoundStats& r : replay.report.best_rounds) {
        monotone = monotone && r.size_out <= r.size_in && r.weight_out <= r.weight_in + 1e-9;
      }
      check("weights non-increasing", monotone);
      check("cost >= lambda*", cost >= replay.report.lambda_star * (1.0 - 1e-6));
    } catch (const Error& e) {
      check(fmt::format("coverage chain replay ({})", e.what()), false);
    }
  } else if (algorithm == "exact") {
    if (inst.size() <= kDefaultExactCap) {
      const double opt = ExactMinDominating(g, weights).cost;
      check("optimal cost", std::abs(cost - opt) <= 1e-9 * std::max(1.0, opt));
    }
  }
  return report;
}

}  // namespace dsdisk
