#pragma once

#include <optional>
#include <string>

namespace qschur {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "QSCHUR_CACHE_DIR";

struct CacheKey {
  int n = 0, r = 0;
  std::string op;     // e.g. "structure-constants"
  std::string input;  // canonical form of the request
};

uint64_t fnv1a64(const std::string& s);

// $QSCHUR_CACHE_DIR, else $XDG_CACHE_HOME/qschur, else $HOME/.cache/qschur, else "" (no cache)
std::string default_cache_dir();

// one file per key; the header line repeats the full key so hash collisions and stale versions read as misses
class TableCache {
 public:
  explicit TableCache(std::string dir);
  const std::string& dir() const { return dir_; }
  std::string path_for(const CacheKey& k) const;
  std::optional<std::string> get(const CacheKey& k) const;
  // atomic publish (temp file + rename) under an exclusive per-key lock; returns false on I/O failure
  bool put(const CacheKey& k, const std::string& payload) const;

 private:
  std::string dir_;
};

}  // namespace qschur
