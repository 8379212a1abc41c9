#include "splf/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace splf {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : m.parameters) params[key] = value;
  j["parameters"] = params;
  j["tool_version"] = m.tool_version;
  j["wall_time_seconds"] = m.wall_time_seconds;
  j["output_paths"] = m.output_paths;
  return j.dump(2) + "\n";
}

std::filesystem::path manifest_path_for(const std::filesystem::path& data_file) {
  std::filesystem::path p = data_file;
  p += ".manifest.json";
  return p;
}

void write_manifest(const RunManifest& m, const std::filesystem::path& data_file) {
  const std::filesystem::path path = manifest_path_for(data_file);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
  out << manifest_to_json(m);
  if (!out) throw std::runtime_error("failed writing manifest " + path.string());
}

}  // namespace splf
