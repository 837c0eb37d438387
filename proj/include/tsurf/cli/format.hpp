#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

namespace tsurf::cli {

// Shortest round-trip decimal form.
std::string fmt(double x);
// Two-space indented JSON followed by a newline.
std::string dump(const nlohmann::ordered_json& j);
// "NxM" with N, M >= 2.
std::pair<int, int> parse_grid(const std::string& text);
// Writes `content` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace tsurf::cli
