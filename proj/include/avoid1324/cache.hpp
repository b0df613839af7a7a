#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "avoid1324/numeric.hpp"

namespace avoid1324 {

/// Persistent map from (pattern, n) to an exact count, stored as
/// {"version":1,"counts":{"1324:6":"513",...}}. Advisory only: a missing or
/// unreadable file behaves like an empty cache.
class CountCache {
 public:
  static constexpr int kVersion = 1;

  CountCache() = default;
  explicit CountCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// Location from $AVOID1324_CACHE, else .avoid1324-cache.json in the working directory.
  static std::filesystem::path default_path();

  static CountCache load(const std::filesystem::path& path);

  std::optional<BigInt> lookup(const std::string& pattern, std::size_t n) const;
  void store(const std::string& pattern, std::size_t n, const BigInt& count);

  bool dirty() const { return dirty_; }
  std::size_t size() const { return counts_.size(); }

  /// Writes to a sibling temp file, then renames over the target.
  void save() const;

  static std::string key(const std::string& pattern, std::size_t n);

 private:
  std::filesystem::path path_;
  std::map<std::string, std::string> counts_;
  bool dirty_ = false;
};

}  // namespace avoid1324
