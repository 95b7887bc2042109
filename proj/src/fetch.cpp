#include "wlaudit/fetch.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "httplib.h"
#include "wlaudit/errors.hpp"
#include "wlaudit/zip.hpp"

namespace wlaudit {
namespace {

namespace fs = std::filesystem;

// Holds an exclusive flock for the lifetime of the object.
class FileLock {
 public:
  explicit FileLock(const fs::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw FetchError("cannot open lock file " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw FetchError("cannot lock " + path.string());
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }

 private:
  int fd_ = -1;
};

struct Url {
  std::string scheme_host_port;
  std::string path;
};

Url split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw FetchError("base URL lacks a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, ""};
  std::string path = url.substr(path_start);
  while (!path.empty() && path.back() == '/') path.pop_back();
  return {url.substr(0, path_start), path};
}

std::string download(const FetchConfig& cfg, const std::string& archive) {
  const Url url = split_url(cfg.base_url);
  httplib::Client client(url.scheme_host_port);
  if (!client.is_valid()) throw FetchError("unsupported base URL " + cfg.base_url);
  client.set_follow_location(true);
  client.set_connection_timeout(cfg.timeout);
  client.set_read_timeout(cfg.timeout);
  const std::string path = url.path + "/" + archive + ".zip";
  auto res = client.Get(path);
  if (!res) {
    throw FetchError("GET " + url.scheme_host_port + path + " failed: " +
                     httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw FetchError("GET " + url.scheme_host_port + path + " returned HTTP " +
                     std::to_string(res->status));
  }
  return std::move(res->body);
}

}  // namespace

FetchConfig fetch_config_from_env() {
  FetchConfig cfg;
  if (const char* base = std::getenv(kBaseUrlEnv); base && *base) cfg.base_url = base;
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) {
    cfg.cache_dir = dir;
  } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    cfg.cache_dir = fs::path(xdg) / "wlaudit";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    cfg.cache_dir = fs::path(home) / ".cache" / "wlaudit";
  } else {
    cfg.cache_dir = fs::temp_directory_path() / "wlaudit-cache";
  }
  return cfg;
}

std::string tu_archive_name(const std::string& name) {
  static const std::map<std::string, std::string> kAliases = {
      {"IMDB-B", "IMDB-BINARY"},
      {"IMDB-M", "IMDB-MULTI"},
      {"REDDIT-B", "REDDIT-BINARY"},
      {"REDDIT-M-5K", "REDDIT-MULTI-5K"},
      {"REDDIT-M-12K", "REDDIT-MULTI-12K"},
  };
  const auto it = kAliases.find(name);
  return it == kAliases.end() ? name : it->second;
}

std::optional<fs::path> find_dataset_dir(const fs::path& root, const std::string& name) {
  const std::string marker = name + "_A.txt";
  std::error_code ec;
  if (fs::is_regular_file(root / marker, ec)) return root;
  if (!fs::is_directory(root, ec)) return std::nullopt;
  for (fs::recursive_directory_iterator it(root, ec), end; it != end; it.increment(ec)) {
    if (ec) break;
    if (it.depth() > 1) {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file(ec) && it->path().filename() == marker) return it->path().parent_path();
  }
  return std::nullopt;
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw FetchError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

fs::path fetch_dataset(const FetchConfig& cfg, const std::string& name) {
  if (cfg.base_url.empty()) throw FetchError("empty base URL");
  if (cfg.cache_dir.empty()) throw FetchError("no cache directory configured");
  const std::string archive = tu_archive_name(name);

  std::error_code ec;
  fs::create_directories(cfg.cache_dir, ec);
  if (ec) throw FetchError("cannot create cache directory " + cfg.cache_dir.string());

  FileLock lock(cfg.cache_dir / ("." + archive + ".lock"));
  const fs::path target = cfg.cache_dir / archive;
  if (auto hit = find_dataset_dir(target, archive)) return *hit;

  const std::string bytes = download(cfg, archive);
  if (cfg.checksum) {
    std::string expected = *cfg.checksum;
    for (auto& c : expected) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const std::string actual = sha256_hex(bytes);
    if (actual != expected) throw ChecksumMismatchError(expected, actual);
  }

  const fs::path staging = cfg.cache_dir / ("." + archive + ".partial");
  fs::remove_all(staging, ec);
  try {
    extract_zip(bytes, staging);
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  fs::remove_all(target, ec);
  fs::rename(staging, target, ec);
  if (ec) throw ExtractError("cannot move extracted files into " + target.string());
  if (auto dir = find_dataset_dir(target, archive)) return *dir;
  throw ExtractError("archive " + archive + ".zip does not contain " + archive + "_A.txt");
}

}  // namespace wlaudit
