#include "avoid1324/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>
#include <unistd.h>

namespace avoid1324 {

std::filesystem::path CountCache::default_path() {
  if (const char* env = std::getenv("AVOID1324_CACHE"); env && *env) return env;
  return std::filesystem::current_path() / ".avoid1324-cache.json";
}

std::string CountCache::key(const std::string& pattern, std::size_t n) {
  return pattern + ":" + std::to_string(n);
}

CountCache CountCache::load(const std::filesystem::path& path) {
  CountCache cache(path);
  std::ifstream in(path);
  if (!in) return cache;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.value("version", 0) != kVersion) return cache;
    for (const auto& [k, v] : doc.at("counts").items()) {
      const auto text = v.get<std::string>();
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) continue;
      cache.counts_[k] = text;
    }
  } catch (const nlohmann::json::exception&) {
    cache.counts_.clear();
  }
  return cache;
}

std::optional<BigInt> CountCache::lookup(const std::string& pattern, std::size_t n) const {
  auto it = counts_.find(key(pattern, n));
  if (it == counts_.end()) return std::nullopt;
  return BigInt(it->second);
}

void CountCache::store(const std::string& pattern, std::size_t n, const BigInt& count) {
  auto& slot = counts_[key(pattern, n)];
  const auto text = count.str();
  if (slot != text) {
    slot = text;
    dirty_ = true;
  }
}

void CountCache::save() const {
  if (path_.empty()) throw std::logic_error("cache has no path");
  nlohmann::json doc;
  doc["version"] = kVersion;
  doc["counts"] = nlohmann::json::object();
  for (const auto& [k, v] : counts_) doc["counts"][k] = v;

  auto tmp = path_;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace avoid1324
