#pragma once

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

namespace dsv {
namespace cache {

// Optional on-disk memo for CLI results, keyed by the canonical request
// string.  Disabled unless DELTA_SPRINGER_CACHE_DIR is set; every failure
// (unreadable dir, corrupt file, key mismatch) degrades to a cache miss so
// the cache can never change an answer.

inline std::optional<std::string> directory() {
  const char* dir = std::getenv("DELTA_SPRINGER_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir);
}

inline std::string content_key(const std::string& request) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : request) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

inline std::optional<std::string> lookup(const std::string& request) {
  auto dir = directory();
  if (!dir) return std::nullopt;
  std::filesystem::path path = std::filesystem::path(*dir) / (content_key(request) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json entry = nlohmann::json::parse(in);
    if (entry.at("request") != request) return std::nullopt;
    return entry.at("output").get<std::string>();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void store(const std::string& request, const std::string& output) {
  auto dir = directory();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return;
  std::filesystem::path path = std::filesystem::path(*dir) / (content_key(request) + ".json");
  std::ofstream out(path);
  if (!out) return;
  out << nlohmann::json{{"request", request}, {"output", output}}.dump(2) << '\n';
}

}  // namespace cache
}  // namespace dsv
