#include "dsdisk/bench_runner.hpp"

#include <chrono>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "dsdisk/error.hpp"
#include "dsdisk/exact.hpp"
#include "dsdisk/generate.hpp"
#include "dsdisk/graph.hpp"
#include "dsdisk/io.hpp"
#include "dsdisk/solve.hpp"

namespace dsdisk {

std::string BenchmarkCsvHeader() {
  return "instance_hash,generator,n,seed,algorithm,params,cost,opt,lambda_star,ratio_opt,ratio_lp,"
         "wall_ms,error";
}

namespace {

struct Cell {
  size_t generator = 0;
  uint64_t seed = 0;
  size_t algorithm = 0;
};

SolveRequest RequestFromJson(const nlohmann::json& a) {
  SolveRequest r;
  r.algorithm = a.value("algorithm", r.algorithm);
  r.b = a.value("b", r.b);
  if (a.contains("epsilon")) r.epsilon = a["epsilon"].get<double>();
  r.c = a.value("c", r.c);
  if (a.contains("trials") && a["trials"].is_number_integer()) r.trials = a["trials"].get<int>();
  return r;
}

std::string ParamString(const SolveRequest& r) {
  if (r.algorithm == "local-search") {
    return r.epsilon ? fmt::format("epsilon={}", *r.epsilon) : fmt::format("b={}", r.b);
  }
  if (r.algorithm == "weighted-lp") {
    return r.trials > 0 ? fmt::format("c={};trials={}", r.c, r.trials)
                        : fmt::format("c={};trials=auto", r.c);
  }
  return "";
}

std::string CsvField(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
    if (c == '"') c = '\'';
  }
  if (s.find(',') != std::string::npos) s = "\"" + s + "\"";
  return s;
}

}  // namespace

std::string RunBenchmark(const nlohmann::json& config) {
  std::vector<GeneratorSpec> generators;
  std::vector<uint64_t> seeds;
  std::vector<nlohmann::json> algorithms;
  int exact_cap = kDefaultExactCap;
  try {
    for (const auto& g : config.at("generators")) generators.push_back(GeneratorSpecFromJson(g));
    seeds = config.value("seeds", std::vector<uint64_t>{0});
    for (const auto& a : config.at("algorithms")) algorithms.push_back(a);
    exact_cap = config.value("exact_cap", exact_cap);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, fmt::format("benchmark config: {}", e.what()));
  }

  std::vector<Cell> cells;
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    for (uint64_t s : seeds) {
      for (size_t ai = 0; ai < algorithms.size(); ++ai) cells.push_back({gi, s, ai});
    }
  }

  std::vector<std::string> rows(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    GeneratorSpec spec = generators[cell.generator];
    spec.seed = cell.seed;
    SolveRequest req = RequestFromJson(algorithms[cell.algorithm]);
    req.seed = cell.seed;
    req.exact_cap = exact_cap;

    std::string hash, cost, opt, lambda, ratio_opt, ratio_lp, error;
    double wall_ms = 0.0;
    int n = spec.n;
    try {
      const DiskInstance inst = Generate(spec);
      n = inst.size();
      hash = InstanceHash(inst);
      const auto t0 = std::chrono::steady_clock::now();
      const nlohmann::json sol = Solve(inst, req);
      wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      const double c = sol.at("cost").get<double>();
      cost = fmt::format("{}", c);
      if (inst.size() <= exact_cap) {
        const double o = ExactMinDominating(BuildGraph(inst), inst.weights(), {exact_cap, {}}).cost;
        opt = fmt::format("{}", o);
        ratio_opt = fmt::format("{}", c / o);
      }
      if (sol.contains("report")) {
        const double l = sol["report"].at("lambda_star").get<double>();
        lambda = fmt::format("{}", l);
        ratio_lp = fmt::format("{}", c / l);
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    rows[i] = fmt::format("{},{},{},{},{},{},{},{},{},{},{},{:.3f},{}", hash,
                          GeneratorKindName(spec.kind), n, cell.seed, req.algorithm,
                          CsvField(ParamString(req)), cost, opt, lambda, ratio_opt, ratio_lp,
                          wall_ms, CsvField(error));
  }

  std::ostringstream os;
  os << BenchmarkCsvHeader() << "\n";
  for (const auto& r : rows) os << r << "\n";
  return os.str();
}

}  // namespace dsdisk
