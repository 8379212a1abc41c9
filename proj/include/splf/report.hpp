#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splf {

inline constexpr std::string_view kVersion = "0.1.0";

// Render a real for CSV output: 12 significant digits, '.' separator, no
// grouping. Stable across runs and platforms for the same bits.
std::string format_real(double v);

// Provenance record written next to every emitted data file, as JSON.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // flag -> value, echoed
  std::string tool_version = std::string(kVersion);
  double wall_time_seconds = 0.0;
  std::vector<std::string> output_paths;
};

std::string manifest_to_json(const RunManifest& m);

std::filesystem::path manifest_path_for(const std::filesystem::path& data_file);

// Writes <data_file>.manifest.json; throws std::runtime_error on IO failure.
void write_manifest(const RunManifest& m, const std::filesystem::path& data_file);

}  // namespace splf
