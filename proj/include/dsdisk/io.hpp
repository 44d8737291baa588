#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dsdisk/geometry.hpp"

namespace dsdisk {

// {"disks":[{"id":0,"x":0.0,"y":0.0,"r":1.0,"w":1.0},...]}; "w" defaults to 1.
DiskInstance InstanceFromJson(const nlohmann::json& j);
nlohmann::json InstanceToJson(const DiskInstance& inst);

nlohmann::json ReadJsonFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& text);

// Stable serialization used for hashing and byte-level comparisons.
std::string DumpJson(const nlohmann::json& j);

// FNV-1a over the canonical instance JSON, as 16 hex digits.
std::string InstanceHash(const DiskInstance& inst);

}  // namespace dsdisk
