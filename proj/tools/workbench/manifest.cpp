#include "workbench/manifest.hpp"

#include <fstream>
#include <json.hpp>

#include "rspec/errors.hpp"
#include "workbench/csv.hpp"

namespace rspec::workbench {

std::string_view tool_version() { return RSPEC_VERSION; }

void RunManifest::set(const std::string& key, double value) { parameters[key] = format_real(value); }

void RunManifest::set(const std::string& key, std::uint64_t value) {
  parameters[key] = std::to_string(value);
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["parameters"] = parameters;  // std::map keeps keys sorted
  j["zeros_source"] = zeros_source;
  j["zeros_used"] = zeros_used;
  j["tool_version"] = tool_version;
  return j.dump(2) + "\n";
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  auto p = output;
  p += ".manifest.json";
  return p;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

void write_artifact(const std::filesystem::path& path, const std::string& contents,
                    const RunManifest& manifest) {
  write_file(path, contents);
  write_file(manifest_path_for(path), manifest.to_json());
}

}  // namespace rspec::workbench
