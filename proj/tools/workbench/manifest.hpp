#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace rspec::workbench {

std::string_view tool_version();

/// Everything needed to re-run a command and get byte-identical CSV.
/// Deliberately carries no timestamps or host details.
struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::string zeros_source;
  std::size_t zeros_used = 0;
  std::string tool_version{workbench::tool_version()};

  void set(const std::string& key, const std::string& value) { parameters[key] = value; }
  void set(const std::string& key, double value);
  void set(const std::string& key, std::uint64_t value);

  std::string to_json() const;
};

/// `<output>.manifest.json` next to the output file.
std::filesystem::path manifest_path_for(const std::filesystem::path& output);

/// Writes `contents` to `path` (creating parent directories) and the
/// manifest beside it. Throws IoError on failure.
void write_artifact(const std::filesystem::path& path, const std::string& contents,
                    const RunManifest& manifest);

/// Writes a file without a manifest (used for SVG/notes that share one).
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace rspec::workbench
