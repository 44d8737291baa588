#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "dsdisk/geometry.hpp"

namespace dsdisk {

enum class GeneratorKind { kUniform, kClustered, kUnit, kNested };
enum class WeightMode { kUnit, kUniform, kRadius };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kUniform;
  int n = 10;
  uint64_t seed = 0;
  // Side of the square holding the centers; <= 0 picks 2.5 * sqrt(n).
  double side = 0.0;
  double rmin = 0.5;
  double rmax = 1.5;
  int clusters = 3;
  double cluster_spread = 0.0;  // <= 0: side / 8
  int nest_depth = 3;
  WeightMode weight_mode = WeightMode::kUnit;
  double wmin = 1.0;
  double wmax = 10.0;
  bool perturb = true;
  double perturb_magnitude = 1e-7;
};

// Deterministic in the spec. Throws kInvalidParams.
DiskInstance Generate(const GeneratorSpec& spec);

GeneratorKind ParseGeneratorKind(const std::string& s);
std::string GeneratorKindName(GeneratorKind kind);
WeightMode ParseWeightMode(const std::string& s);
std::string WeightModeName(WeightMode mode);

GeneratorSpec GeneratorSpecFromJson(const nlohmann::json& j);
nlohmann::json GeneratorSpecToJson(const GeneratorSpec& spec);

}  // namespace dsdisk
