#include "dsdisk/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "dsdisk/error.hpp"

namespace dsdisk {

DiskInstance InstanceFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("disks") || !j["disks"].is_array()) {
    throw Error(ErrorKind::kParse, "instance: expected an object with a \"disks\" array");
  }
  std::vector<Disk> disks;
  for (const auto& d : j["disks"]) {
    try {
      disks.push_back({d.at("id").get<DiskId>(), d.at("x").get<double>(), d.at("y").get<double>(),
                       d.at("r").get<double>(), d.value("w", 1.0)});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kParse, fmt::format("instance disk: {}", e.what()));
    }
  }
  return DiskInstance(std::move(disks));
}

nlohmann::json InstanceToJson(const DiskInstance& inst) {
  nlohmann::json disks = nlohmann::json::array();
  for (const Disk& d : inst.disks()) {
    disks.push_back({{"id", d.id}, {"x", d.cx}, {"y", d.cy}, {"r", d.r}, {"w", d.w}});
  }
  return {{"disks", std::move(disks)}};
}

nlohmann::json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, fmt::format("cannot open {}", path.string()));
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, fmt::format("{}: {}", path.string(), e.what()));
  }
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParse, fmt::format("cannot write {}", path.string()));
  out << text;
}

std::string DumpJson(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string InstanceHash(const DiskInstance& inst) {
  const std::string text = InstanceToJson(inst).dump();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace dsdisk
