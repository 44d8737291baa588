#include "dsdisk/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "dsdisk/error.hpp"
#include "dsdisk/rng.hpp"

namespace dsdisk {

GeneratorKind ParseGeneratorKind(const std::string& s) {
  if (s == "uniform") return GeneratorKind::kUniform;
  if (s == "clustered") return GeneratorKind::kClustered;
  if (s == "unit") return GeneratorKind::kUnit;
  if (s == "nested") return GeneratorKind::kNested;
  throw Error(ErrorKind::kInvalidParams, fmt::format("unknown generator kind '{}'", s));
}

std::string GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kUniform: return "uniform";
    case GeneratorKind::kClustered: return "clustered";
    case GeneratorKind::kUnit: return "unit";
    case GeneratorKind::kNested: return "nested";
  }
  return "uniform";
}

WeightMode ParseWeightMode(const std::string& s) {
  if (s == "unit") return WeightMode::kUnit;
  if (s == "uniform") return WeightMode::kUniform;
  if (s == "radius") return WeightMode::kRadius;
  throw Error(ErrorKind::kInvalidParams, fmt::format("unknown weight mode '{}'", s));
}

std::string WeightModeName(WeightMode mode) {
  switch (mode) {
    case WeightMode::kUnit: return "unit";
    case WeightMode::kUniform: return "uniform";
    case WeightMode::kRadius: return "radius";
  }
  return "unit";
}

namespace {

void Validate(const GeneratorSpec& s) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::kInvalidParams, what); };
  if (s.n < 1) fail("generator: n must be >= 1");
  if (!(s.rmin > 0.0) || s.rmax < s.rmin) fail("generator: need 0 < rmin <= rmax");
  if (s.clusters < 1) fail("generator: clusters must be >= 1");
  if (s.nest_depth < 1) fail("generator: nest_depth must be >= 1");
  if (s.weight_mode == WeightMode::kUniform && (!(s.wmin > 0.0) || s.wmax < s.wmin)) {
    fail("generator: need 0 < wmin <= wmax");
  }
  if (s.perturb && !(s.perturb_magnitude > 0.0)) fail("generator: perturb_magnitude must be > 0");
}

double Gaussian(SplitMix64& rng) {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - rng.NextDouble();
  const double v = rng.NextDouble();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace

DiskInstance Generate(const GeneratorSpec& spec) {
  Validate(spec);
  SplitMix64 rng(spec.seed);
  const double side = spec.side > 0.0 ? spec.side : 2.5 * std::sqrt(static_cast<double>(spec.n));
  std::vector<Disk> disks;
  disks.reserve(static_cast<size_t>(spec.n));
  auto add = [&](double x, double y, double r) {
    disks.push_back({static_cast<DiskId>(disks.size()), x, y, r, 1.0});
  };

  switch (spec.kind) {
    case GeneratorKind::kUniform:
    case GeneratorKind::kUnit:
      for (int i = 0; i < spec.n; ++i) {
        const double x = rng.Uniform(0.0, side);
        const double y = rng.Uniform(0.0, side);
        const double r = spec.kind == GeneratorKind::kUnit ? 1.0 : rng.Uniform(spec.rmin, spec.rmax);
        add(x, y, r);
      }
      break;
    case GeneratorKind::kClustered: {
      const double spread = spec.cluster_spread > 0.0 ? spec.cluster_spread : side / 8.0;
      std::vector<Point> centers;
      for (int k = 0; k < spec.clusters; ++k) {
        centers.push_back({rng.Uniform(0.0, side), rng.Uniform(0.0, side)});
      }
      for (int i = 0; i < spec.n; ++i) {
        const Point c = centers[rng.Below(centers.size())];
        const double x = c.x + spread * Gaussian(rng);
        const double y = c.y + spread * Gaussian(rng);
        add(x, y, rng.Uniform(spec.rmin, spec.rmax));
      }
      break;
    }
    case GeneratorKind::kNested: {
      // Chains of strictly nested disks: each child has 0.6 of its parent's
      // radius and sits within 0.2 parent radii of the parent's center.
      while (static_cast<int>(disks.size()) < spec.n) {
        double x = rng.Uniform(0.0, side);
        double y = rng.Uniform(0.0, side);
        double r = rng.Uniform(spec.rmin, spec.rmax) * 2.0;
        for (int k = 0; k < spec.nest_depth && static_cast<int>(disks.size()) < spec.n; ++k) {
          add(x, y, r);
          const double angle = rng.Uniform(0.0, 2.0 * std::numbers::pi);
          const double off = rng.Uniform(0.0, 0.2) * r;
          x += off * std::cos(angle);
          y += off * std::sin(angle);
          r *= 0.6;
        }
      }
      break;
    }
  }

  for (Disk& d : disks) {
    switch (spec.weight_mode) {
      case WeightMode::kUnit: d.w = 1.0; break;
      case WeightMode::kUniform: d.w = rng.Uniform(spec.wmin, spec.wmax); break;
      case WeightMode::kRadius: d.w = d.r; break;
    }
  }

  DiskInstance inst(std::move(disks));
  if (spec.perturb) {
    inst = Perturb(inst, spec.perturb_magnitude, DeriveSeed(spec.seed, 0xA11CE));
    std::vector<Disk> out(inst.disks().begin(), inst.disks().end());
    for (Disk& d : out) {
      if (spec.kind == GeneratorKind::kUnit) d.r = 1.0;
      if (spec.weight_mode == WeightMode::kRadius) d.w = d.r;
    }
    inst = DiskInstance(std::move(out));
  }
  return inst;
}

GeneratorSpec GeneratorSpecFromJson(const nlohmann::json& j) {
  GeneratorSpec s;
  try {
    s.kind = ParseGeneratorKind(j.value("kind", std::string("uniform")));
    s.n = j.value("n", s.n);
    s.seed = j.value("seed", s.seed);
    s.side = j.value("side", s.side);
    s.rmin = j.value("rmin", s.rmin);
    s.rmax = j.value("rmax", s.rmax);
    s.clusters = j.value("clusters", s.clusters);
    s.cluster_spread = j.value("cluster_spread", s.cluster_spread);
    s.nest_depth = j.value("nest_depth", s.nest_depth);
    s.weight_mode = ParseWeightMode(j.value("weights", std::string("unit")));
    s.wmin = j.value("wmin", s.wmin);
    s.wmax = j.value("wmax", s.wmax);
    s.perturb = j.value("perturb", s.perturb);
    s.perturb_magnitude = j.value("perturb_magnitude", s.perturb_magnitude);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, fmt::format("generator spec: {}", e.what()));
  }
  return s;
}

nlohmann::json GeneratorSpecToJson(const GeneratorSpec& s) {
  return {{"kind", GeneratorKindName(s.kind)},
          {"n", s.n},
          {"seed", s.seed},
          {"side", s.side},
          {"rmin", s.rmin},
          {"rmax", s.rmax},
          {"clusters", s.clusters},
          {"cluster_spread", s.cluster_spread},
          {"nest_depth", s.nest_depth},
          {"weights", WeightModeName(s.weight_mode)},
          {"wmin", s.wmin},
          {"wmax", s.wmax},
          {"perturb", s.perturb},
          {"perturb_magnitude", s.perturb_magnitude}};
}

}  // namespace dsdisk
