#include "zetaform/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zetaform/json_io.hpp"

namespace zetaform {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cache_directory() {
  const char* dir = std::getenv("ZETAFORM_CACHE_DIR");
  return dir ? std::string(dir) : std::string();
}

std::string cache_key(const IntegralParams& p, const ShiftVector& d) {
  const std::string canon = integral_params_to_json(p, d).dump();
  // FNV-1a, 64-bit.
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

namespace {

fs::path cache_path(const IntegralParams& p, const ShiftVector& d) {
  return fs::path(cache_directory()) / ("decompose-" + cache_key(p, d) + ".json");
}

}  // namespace

std::optional<LinearForm> cache_lookup(const IntegralParams& p, const ShiftVector& d) {
  if (cache_directory().empty()) return std::nullopt;
  const fs::path path = cache_path(p, d);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json entry = json::parse(in);
    // Collision / corruption guard: the stored echo must match exactly.
    if (entry.at("params") != integral_params_to_json(p, d)) return std::nullopt;
    return linear_form_from_json(entry.at("form"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

LinearForm cached_decompose_integral(const IntegralParams& p, const ShiftVector& d) {
  if (auto hit = cache_lookup(p, d)) return *hit;
  LinearForm form = decompose_integral(p, d);
  const std::string dir = cache_directory();
  if (!dir.empty()) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    json entry;
    entry["params"] = integral_params_to_json(p, d);
    entry["form"] = linear_form_to_json(form);
    const fs::path path = cache_path(p, d);
    const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
    std::ofstream out(tmp);
    if (out) {
      out << entry.dump(2) << "\n";
      out.close();
      fs::rename(tmp, path, ec);
      if (ec) fs::remove(tmp, ec);
    }
  }
  return form;
}

}  // namespace zetaform
