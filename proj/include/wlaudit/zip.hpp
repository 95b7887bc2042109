#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wlaudit {

struct ZipEntry {
  std::string name;
  std::string data;
};

/// Reads every file entry of an in-memory zip archive (stored or deflate,
/// no zip64, no encryption). CRCs are verified. Throws ExtractError.
std::vector<ZipEntry> read_zip(std::string_view archive);

/// Extracts an archive below `dest`, refusing absolute paths and `..`
/// components. Returns the written file paths.
std::vector<std::filesystem::path> extract_zip(std::string_view archive,
                                               const std::filesystem::path& dest);

}  // namespace wlaudit
