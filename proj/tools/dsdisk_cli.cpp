// dsdisk: gen | solve | verify | render | bench
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dsdisk/bench_runner.hpp"
#include "dsdisk/error.hpp"
#include "dsdisk/generate.hpp"
#include "dsdisk/graph.hpp"
#include "dsdisk/io.hpp"
#include "dsdisk/lp.hpp"
#include "dsdisk/solve.hpp"
#include "dsdisk/svg.hpp"
#include "dsdisk/wvd.hpp"

namespace {

uint64_t DefaultSeed() {
  if (const char* env = std::getenv("DSDISK_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    dsdisk::WriteTextFile(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate minimum dominating sets of disk graphs"};
  app.require_subcommand(1);

  // gen
  dsdisk::GeneratorSpec spec;
  spec.seed = DefaultSeed();
  std::string kind = "uniform", weights = "unit", gen_out;
  bool no_perturb = false;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind, "uniform | clustered | unit | nested");
  gen->add_option("--n", spec.n, "Number of disks")->required();
  gen->add_option("--seed", spec.seed, "Generator seed (default $DSDISK_SEED or 0)");
  gen->add_option("--weights", weights, "unit | uniform | radius");
  gen->add_option("--wmin", spec.wmin);
  gen->add_option("--wmax", spec.wmax);
  gen->add_option("--side", spec.side, "Side of the center square (0 = auto)");
  gen->add_option("--rmin", spec.rmin);
  gen->add_option("--rmax", spec.rmax);
  gen->add_option("--clusters", spec.clusters);
  gen->add_option("--nest-depth", spec.nest_depth);
  gen->add_flag("--no-perturb", no_perturb, "Skip the non-degeneracy perturbation");
  gen->add_option("--out,-o", gen_out, "Output file (default stdout)");

  // solve
  dsdisk::SolveRequest req;
  req.seed = DefaultSeed();
  std::string instance_path, solve_out, trials = "auto", lp_dump;
  double epsilon = 0.0;
  auto* solve = app.add_subcommand("solve", "Compute a dominating set");
  solve->add_option("--instance,-i", instance_path, "Instance JSON")->required();
  solve->add_option("--algo", req.algorithm, "local-search | weighted-lp | greedy | exact");
  solve->add_option("--b", req.b, "Swap size for local search");
  auto* eps_opt = solve->add_option("--epsilon", epsilon, "Derive b = ceil(c_ls / epsilon^2)");
  solve->add_option("--c-ls", req.c_ls, "Constant in b = c_ls / epsilon^2");
  solve->add_option("--c", req.c, "Sampling constant of the weighted pipeline");
  solve->add_option("--trials", trials, "Independent trials, or 'auto'");
  solve->add_option("--seed", req.seed, "Seed (default $DSDISK_SEED or 0)");
  solve->add_option("--exact-cap", req.exact_cap, "Vertex cap for the exact solver");
  solve->add_option("--lp-dump", lp_dump, "Also write the LP relaxation in CPLEX LP format");
  solve->add_option("--out,-o", solve_out, "Output file (default stdout)");

  // verify
  std::string verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "Re-check a solution file against an instance");
  verify->add_option("--instance,-i", verify_instance)->required();
  verify->add_option("--solution,-s", verify_solution)->required();

  // render
  std::string render_instance, render_solution, render_out;
  int wvd_resolution = 0;
  bool dual = false;
  auto* render = app.add_subcommand("render", "Render an instance as SVG");
  render->add_option("--instance,-i", render_instance)->required();
  render->add_option("--solution,-s", render_solution, "Highlight this solution");
  render->add_option("--wvd", wvd_resolution,
                     "Overlay the weighted Voronoi cells of the solution (or all disks) at this resolution");
  render->add_flag("--dual", dual, "Overlay the dual graph of the cells (needs --wvd)");
  render->add_option("--out,-o", render_out);

  // bench
  std::string bench_config, bench_out;
  auto* bench = app.add_subcommand("bench", "Run a benchmark grid to CSV");
  bench->add_option("--config,-c", bench_config)->required();
  bench->add_option("--out,-o", bench_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      spec.kind = dsdisk::ParseGeneratorKind(kind);
      spec.weight_mode = dsdisk::ParseWeightMode(weights);
      spec.perturb = !no_perturb;
      Emit(gen_out, dsdisk::DumpJson(dsdisk::InstanceToJson(dsdisk::Generate(spec))));
    } else if (solve->parsed()) {
      const auto inst = dsdisk::InstanceFromJson(dsdisk::ReadJsonFile(instance_path));
      if (eps_opt->count() > 0) req.epsilon = epsilon;
      req.trials = trials == "auto" ? 0 : std::stoi(trials);
      if (!lp_dump.empty()) {
        std::ofstream lp(lp_dump);
        dsdisk::WriteLpFormat(dsdisk::BuildLp(inst, dsdisk::BuildGraph(inst)), lp);
      }
      Emit(solve_out, dsdisk::DumpJson(dsdisk::Solve(inst, req)));
    } else if (verify->parsed()) {
      const auto inst = dsdisk::InstanceFromJson(dsdisk::ReadJsonFile(verify_instance));
      const auto report = dsdisk::Verify(inst, dsdisk::ReadJsonFile(verify_solution));
      for (const auto& s : report.passed) std::cout << "PASS " << s << "\n";
      for (const auto& s : report.failed) std::cout << "FAIL " << s << "\n";
      return report.ok() ? 0 : 1;
    } else if (render->parsed()) {
      const auto inst = dsdisk::InstanceFromJson(dsdisk::ReadJsonFile(render_instance));
      dsdisk::SvgOverlays overlays;
      if (!render_solution.empty()) {
        overlays.solution = dsdisk::ReadJsonFile(render_solution)
                                .at("solution_ids")
                                .get<std::vector<dsdisk::DiskId>>();
      }
      std::vector<dsdisk::Disk> sites;
      if (overlays.solution.empty()) {
        sites.assign(inst.disks().begin(), inst.disks().end());
      } else {
        for (auto id : overlays.solution) sites.push_back(inst[id]);
      }
      std::optional<dsdisk::WvdRaster> raster;
      std::optional<dsdisk::DualGraph> graph;
      if (wvd_resolution > 0) {
        raster = dsdisk::Rasterize(sites, wvd_resolution);
        overlays.raster = &*raster;
        if (dual) {
          graph = dsdisk::ComputeDualGraph(*raster);
          overlays.dual = &*graph;
          overlays.dual_disks = sites;
        }
      }
      Emit(render_out, dsdisk::RenderSvg(inst, overlays));
    } else if (bench->parsed()) {
      Emit(bench_out, dsdisk::RunBenchmark(dsdisk::ReadJsonFile(bench_config)));
    }
  } catch (const dsdisk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
