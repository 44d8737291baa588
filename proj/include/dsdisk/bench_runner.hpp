#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace dsdisk {

// Config:
// {"generators":[GeneratorSpec...], "seeds":[...],
//  "algorithms":[{"algorithm":"local-search","b":2}, ...], "exact_cap":14}
// One row per (generator, seed, algorithm) in that nesting order. Cells run
// in parallel; rows keep config order. Only wall_ms varies between runs.
std::string RunBenchmark(const nlohmann::json& config);

std::string BenchmarkCsvHeader();

}  // namespace dsdisk
