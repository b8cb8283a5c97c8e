#include "cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace shuffle::cli {

std::string checksum(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Cache::Cache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

std::filesystem::path Cache::path_for(const std::string& key) const {
  std::string name;
  for (char c : key) name += (c == ':' ? '_' : c == ',' ? '.' : c == '/' ? '-' : c);
  return dir_ / (name + ".txt");
}

std::optional<std::string> Cache::get(const std::string& key) {
  if (!enabled_) return std::nullopt;
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string head;
  std::getline(in, head);
  std::ostringstream rest;
  rest << in.rdbuf();
  in.close();
  const std::string payload = rest.str();
  if (head != "checksum " + checksum(payload)) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    ++evicted_;
    return std::nullopt;
  }
  return payload;
}

void Cache::put(const std::string& key, const std::string& payload) {
  if (!enabled_) return;
  std::lock_guard<std::mutex> lock(write_mu_);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = path_for(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << "checksum " << checksum(payload) << "\n" << payload;
  }
  std::filesystem::rename(tmp, path, ec);
}

std::filesystem::path default_cache_dir() {
  const char* env = std::getenv("SHUFFLE_CACHE");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path(".shuffle-cache");
}

}  // namespace shuffle::cli
