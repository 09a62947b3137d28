#include "qschur/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qschur {

namespace fs = std::filesystem;

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string default_cache_dir() {
  if (const char* d = std::getenv(kCacheEnvVar); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/qschur";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/qschur";
  return "";
}

TableCache::TableCache(std::string dir) : dir_(std::move(dir)) {}

static std::string header_line(const CacheKey& k) {
  nlohmann::json h{{"version", kLibraryVersion}, {"n", k.n}, {"r", k.r}, {"op", k.op}, {"input", k.input}};
  return h.dump();
}

std::string TableCache::path_for(const CacheKey& k) const {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(k.input)));
  return dir_ + "/v" + kLibraryVersion + "-n" + std::to_string(k.n) + "-r" + std::to_string(k.r) + "-" + k.op + "-" +
         hash + ".json";
}

std::optional<std::string> TableCache::get(const CacheKey& k) const {
  if (dir_.empty()) return std::nullopt;
  std::ifstream in(path_for(k), std::ios::binary);
  if (!in) return std::nullopt;
  std::string head;
  if (!std::getline(in, head) || head != header_line(k)) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

bool TableCache::put(const CacheKey& k, const std::string& payload) const {
  if (dir_.empty()) return false;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return false;
  std::string path = path_for(k);
  int lock = ::open((path + ".lock").c_str(), O_CREAT | O_RDWR, 0644);
  if (lock < 0) return false;
  ::flock(lock, LOCK_EX);
  static std::atomic<unsigned> counter{0};
  std::string tmp = path + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  bool ok = false;
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) {
      out << header_line(k) << '\n' << payload;
      out.close();
      ok = static_cast<bool>(out);
    }
  }
  if (ok) {
    fs::rename(tmp, path, ec);
    ok = !ec;
  }
  if (!ok) fs::remove(tmp, ec);
  ::flock(lock, LOCK_UN);
  ::close(lock);
  return ok;
}

}  // namespace qschur
