#include "tsurf/cli/format.hpp"

#include <charconv>
#include <fstream>

#include "tsurf/error.hpp"

namespace tsurf::cli {

std::string fmt(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  int n = 0, m = 0;
  const char* b = text.data();
  const char* e = b + text.size();
  bool ok = x != std::string::npos;
  if (ok) {
    auto r1 = std::from_chars(b, b + x, n);
    auto r2 = std::from_chars(b + x + 1, e, m);
    ok = r1.ec == std::errc() && r1.ptr == b + x && r2.ec == std::errc() && r2.ptr == e;
  }
  if (!ok) throw InputError("grid must look like NxM, got '" + text + "'");
  if (n < 2 || m < 2) throw InputError("grid dimensions must be at least 2x2");
  return {n, m};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace tsurf::cli
