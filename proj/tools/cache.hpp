#ifndef SHUFFLE_TOOLS_CACHE_HPP
#define SHUFFLE_TOOLS_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace shuffle::cli {

// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string checksum(const std::string& text);

// One file per key under dir: a `checksum <hex>` line, then the payload.
// Entries whose checksum does not match are deleted on read.
class Cache {
 public:
  Cache(std::filesystem::path dir, bool enabled);

  bool enabled() const noexcept { return enabled_; }
  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<std::string> get(const std::string& key);
  void put(const std::string& key, const std::string& payload);
  int evicted() const noexcept { return evicted_; }

 private:
  std::filesystem::path dir_;
  bool enabled_;
  int evicted_ = 0;
  std::mutex write_mu_;
};

// SHUFFLE_CACHE, else .shuffle-cache
std::filesystem::path default_cache_dir();

}  // namespace shuffle::cli

#endif  // SHUFFLE_TOOLS_CACHE_HPP
