#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "wlaudit/dataset.hpp"

namespace wlaudit {

inline constexpr const char* kDefaultBaseUrl = "https://www.chrsmrrs.com/graphkerneldatasets";
inline constexpr const char* kCacheDirEnv = "WLAUDIT_CACHE_DIR";
inline constexpr const char* kBaseUrlEnv = "WLAUDIT_BASE_URL";

struct FetchConfig {
  std::string base_url = kDefaultBaseUrl;
  std::filesystem::path cache_dir;
  std::chrono::seconds timeout{60};
  // Lower-case hex SHA-256 of the archive, checked when set.
  std::optional<std::string> checksum;
};

/// Defaults with the WLAUDIT_CACHE_DIR / WLAUDIT_BASE_URL overrides applied.
/// Without an override the cache lives in $XDG_CACHE_HOME/wlaudit or ~/.cache/wlaudit.
FetchConfig fetch_config_from_env();

/// Archive name used by the public TU collection for a dataset, resolving
/// short names (IMDB-B -> IMDB-BINARY, REDDIT-M-5K -> REDDIT-MULTI-5K, ...).
std::string tu_archive_name(const std::string& name);

/// Returns the directory holding NAME_A.txt and friends, downloading
/// <base_url>/<NAME>.zip into the cache on a miss. Concurrent callers for the
/// same dataset serialize on a lock file in the cache directory.
/// Throws FetchError, ChecksumMismatchError or ExtractError.
std::filesystem::path fetch_dataset(const FetchConfig& cfg, const std::string& name);

/// Directory under `root` containing NAME_A.txt (searched up to two levels deep).
std::optional<std::filesystem::path> find_dataset_dir(const std::filesystem::path& root,
                                                      const std::string& name);

/// Parses a dataset found under one of `local_roots` (by its own or its
/// archive name), falling back to fetch_dataset. The result keeps `name`.
Dataset load_dataset(const std::string& name, const FetchConfig& cfg,
                     std::span<const std::filesystem::path> local_roots = {});

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace wlaudit
