#include <doctest.h>

#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "dsdisk/bench_runner.hpp"
#include "dsdisk/error.hpp"
#include "dsdisk/generate.hpp"
#include "dsdisk/graph.hpp"
#include "dsdisk/io.hpp"
#include "dsdisk/solve.hpp"
#include "dsdisk/svg.hpp"
#include "dsdisk/wvd.hpp"
#include "oracles.hpp"

using namespace dsdisk;
using nlohmann::json;

namespace {
int Find(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = Find(p, p[x]); }

std::vector<std::string> SplitLines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

size_t Count(const std::string& s, const std::string& needle) {
  size_t k = 0;
  for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
  return k;
}
}  // namespace

TEST_CASE("generate: unit disks") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kUnit;
  spec.n = 5;
  spec.seed = 1;
  const auto inst = Generate(spec);
  REQUIRE(inst.size() == 5);
  for (const Disk& d : inst.disks()) CHECK(d.r == 1.0);
  CHECK(Generate(spec) == inst);
}

TEST_CASE("generate: every kind is valid and deterministic") {
  for (auto kind : {GeneratorKind::kUniform, GeneratorKind::kClustered, GeneratorKind::kUnit,
                    GeneratorKind::kNested}) {
    for (auto wm : {WeightMode::kUnit, WeightMode::kUniform, WeightMode::kRadius}) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.weight_mode = wm;
      spec.n = 30;
      spec.seed = 4;
      const auto a = Generate(spec);
      CHECK(a == Generate(spec));
      CHECK(a.size() == 30);
      for (const Disk& d : a.disks()) {
        CHECK(d.r > 0.0);
        CHECK(d.w > 0.0);
        if (wm == WeightMode::kUnit) CHECK(d.w == 1.0);
        if (wm == WeightMode::kRadius) CHECK(d.w == d.r);
      }
      spec.seed = 5;
      CHECK_FALSE(Generate(spec) == a);
      CHECK(GeneratorSpecFromJson(GeneratorSpecToJson(spec)).n == 30);
      CHECK(ParseGeneratorKind(GeneratorKindName(kind)) == kind);
      CHECK(ParseWeightMode(WeightModeName(wm)) == wm);
    }
  }
  GeneratorSpec bad;
  bad.n = 0;
  CHECK_THROWS_AS(Generate(bad), Error);
  CHECK_THROWS_AS(ParseGeneratorKind("hexagonal"), Error);
}

TEST_CASE("generate: nested instances contain chains") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kNested;
  spec.n = 20;
  spec.seed = 3;
  const auto inst = Generate(spec);
  int contained = 0;
  for (const Disk& u : inst.disks()) {
    for (const Disk& v : inst.disks()) contained += ProperlyContains(v, u) ? 1 : 0;
  }
  CHECK(contained > 0);
}

TEST_CASE("generate: components match union-find") {
  GeneratorSpec spec;
  spec.n = 50;
  spec.seed = 9;
  const auto inst = Generate(spec);
  const auto g = BuildGraph(inst);
  std::vector<int> parent(50);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [u, v] : oracle::Edges(inst)) parent[Find(parent, u)] = Find(parent, v);
  std::set<int> roots;
  for (int v = 0; v < 50; ++v) roots.insert(Find(parent, v));
  // Components by BFS over the library graph.
  std::vector<int> comp(50, -1);
  int count = 0;
  for (int s = 0; s < 50; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  CHECK(count == static_cast<int>(roots.size()));
}

TEST_CASE("json round trip and hash") {
  const auto inst = oracle::RandomInstance(8, 12, GeneratorKind::kUniform, WeightMode::kUniform);
  const auto j = InstanceToJson(inst);
  CHECK(InstanceFromJson(j) == inst);
  CHECK(InstanceFromJson(json::parse(DumpJson(j))) == inst);
  CHECK(InstanceHash(inst).size() == 16);
  CHECK(InstanceHash(inst) == InstanceHash(InstanceFromJson(j)));
  CHECK(InstanceHash(inst) != InstanceHash(oracle::RandomInstance(9, 12)));
  const auto noweight = InstanceFromJson(json::parse(R"({"disks":[{"id":0,"x":1,"y":2,"r":0.5}]})"));
  CHECK(noweight[0].w == 1.0);
  CHECK_THROWS_AS(InstanceFromJson(json::parse(R"({"disks":[{"id":0,"x":1}]})")), Error);
}

TEST_CASE("solve and verify every algorithm") {
  const auto inst = oracle::RandomInstance(6, 14, GeneratorKind::kUniform, WeightMode::kUniform);
  for (const std::string algo : {"local-search", "weighted-lp", "greedy", "exact"}) {
    SolveRequest req;
    req.algorithm = algo;
    req.seed = 7;
    const json sol = Solve(inst, req);
    CHECK(sol["algorithm"] == algo);
    const auto ids = sol["solution_ids"].get<std::vector<DiskId>>();
    CHECK(IsDominating(BuildGraph(inst), ids));
    const auto rep = Verify(inst, sol);
    CHECK_MESSAGE(rep.ok(), algo);
    CHECK(DumpJson(Solve(inst, req)) == DumpJson(sol));

    // Tampering is caught.
    json broken = sol;
    broken["solution_ids"] = json::array({0});
    CHECK_FALSE(Verify(inst, broken).ok());
    json cheaper = sol;
    cheaper["cost"] = sol["cost"].get<double>() - 1.0;
    CHECK_FALSE(Verify(inst, cheaper).ok());
  }
  SolveRequest bad;
  bad.algorithm = "simulated-annealing";
  CHECK_THROWS_AS(Solve(inst, bad), Error);
}

TEST_CASE("verify catches a non-optimal local search claim") {
  const auto inst = oracle::RandomInstance(2, 12);
  SolveRequest req;
  const json sol = Solve(inst, req);
  json all = sol;
  std::vector<int> ids(12);
  std::iota(ids.begin(), ids.end(), 0);
  all["solution_ids"] = ids;
  all["cost"] = 12.0;
  CHECK_FALSE(Verify(inst, all).ok());
}

TEST_CASE("svg rendering") {
  const auto inst = oracle::RandomInstance(1, 3);
  const std::string plain = RenderSvg(inst);
  CHECK(plain.find("<svg") != std::string::npos);
  CHECK(plain.find("version=\"1.1\"") != std::string::npos);
  CHECK(plain.find("</svg>") != std::string::npos);
  CHECK(Count(plain, "<circle") == 3);
  CHECK(Count(plain, "class=\"solution\"") == 0);
  CHECK(Count(plain, "<rect class=\"cell\"") == 0);

  SvgOverlays ov;
  ov.solution = {0, 2};
  CHECK(Count(RenderSvg(inst, ov), "class=\"solution\"") == 2);

  const auto raster = Rasterize(inst.disks(), 64);
  const auto dual = ComputeDualGraph(raster);
  ov.raster = &raster;
  ov.dual = &dual;
  ov.dual_disks = inst.disks();
  const std::string full = RenderSvg(inst, ov);
  std::set<std::string> fills;
  const std::regex cell(R"re(<rect class="cell"[^>]*fill="(#[0-9a-f]{6})")re");
  for (auto it = std::sregex_iterator(full.begin(), full.end(), cell); it != std::sregex_iterator(); ++it) {
    fills.insert((*it)[1]);
  }
  CHECK(fills.size() == raster.owners().size());
  CHECK(Count(full, "class=\"dual\"") == dual.edges.size());
}

TEST_CASE("benchmark runner") {
  SUBCASE("one exact cell has ratio 1") {
    const json cfg = {{"generators", json::array({{{"kind", "uniform"}, {"n", 5}}})},
                      {"seeds", json::array({1})},
                      {"algorithms", json::array({{{"algorithm", "exact"}}})}};
    const auto lines = SplitLines(RunBenchmark(cfg));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == BenchmarkCsvHeader());
    const auto head = SplitCsv(lines[0]);
    const auto row = SplitCsv(lines[1]);
    REQUIRE(row.size() == head.size());
    const auto col = [&](const std::string& name) {
      return row[std::find(head.begin(), head.end(), name) - head.begin()];
    };
    CHECK(std::stod(col("ratio_opt")) == 1.0);
    CHECK(col("error").empty());
  }
  SUBCASE("non-time columns reproduce") {
    const json cfg = {{"generators", json::array({{{"kind", "uniform"}, {"n", 10}, {"weight_mode", "uniform"}},
                                                  {{"kind", "nested"}, {"n", 12}}})},
                      {"seeds", json::array({1, 2})},
                      {"algorithms", json::array({{{"algorithm", "local-search"}, {"b", 2}},
                                                  {{"algorithm", "weighted-lp"}},
                                                  {{"algorithm", "greedy"}}})}};
    auto strip = [](const std::string& csv) {
      auto lines = SplitLines(csv);
      const auto head = SplitCsv(lines[0]);
      const size_t wall = std::find(head.begin(), head.end(), "wall_ms") - head.begin();
      std::vector<std::vector<std::string>> rows;
      for (const auto& l : lines) {
        auto r = SplitCsv(l);
        r.erase(r.begin() + static_cast<long>(wall));
        rows.push_back(r);
      }
      return rows;
    };
    const auto a = strip(RunBenchmark(cfg));
    CHECK(a.size() == 13);
    CHECK(a == strip(RunBenchmark(cfg)));
  }
  SUBCASE("failing cells are recorded and the run continues") {
    const json cfg = {{"generators", json::array({{{"kind", "uniform"}, {"n", 30}}})},
                      {"seeds", json::array({1})},
                      {"exact_cap", 10},
                      {"algorithms", json::array({{{"algorithm", "exact"}}, {{"algorithm", "greedy"}}})}};
    const auto lines = SplitLines(RunBenchmark(cfg));
    REQUIRE(lines.size() == 3);
    CHECK_FALSE(SplitCsv(lines[1]).back().empty());
    CHECK(SplitCsv(lines[2]).back().empty());
  }
}
