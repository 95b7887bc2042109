#include "wlaudit/zip.hpp"

#include <zlib.h>

#include <cstdint>
#include <fstream>

#include "wlaudit/errors.hpp"

namespace wlaudit {
namespace {

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralHeaderSig = 0x02014b50;
constexpr std::uint32_t kEndOfCentralDirSig = 0x06054b50;
constexpr std::size_t kEndOfCentralDirSize = 22;

std::uint32_t read_u16(std::string_view bytes, std::size_t at) {
  if (at + 2 > bytes.size()) throw ExtractError("truncated archive");
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + at);
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8);
}

std::uint32_t read_u32(std::string_view bytes, std::size_t at) {
  return read_u16(bytes, at) | (read_u16(bytes, at + 2) << 16);
}

std::string inflate_raw(std::string_view compressed, std::size_t expected_size) {
  std::string out(expected_size, '\0');
  z_stream stream{};
  if (inflateInit2(&stream, -MAX_WBITS) != Z_OK) throw ExtractError("zlib init failed");
  stream.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  stream.avail_in = static_cast<uInt>(compressed.size());
  stream.next_out = reinterpret_cast<Bytef*>(out.data());
  stream.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&stream, Z_FINISH);
  const auto produced = stream.total_out;
  inflateEnd(&stream);
  if (rc != Z_STREAM_END || produced != expected_size) throw ExtractError("corrupt deflate stream");
  return out;
}

}  // namespace

std::vector<ZipEntry> read_zip(std::string_view archive) {
  if (archive.size() < kEndOfCentralDirSize) throw ExtractError("not a zip archive");
  // The end record sits at the very end, possibly followed by a comment of up to 64 KiB.
  std::size_t eocd = std::string_view::npos;
  const std::size_t lowest = archive.size() > kEndOfCentralDirSize + 0xFFFF
                                 ? archive.size() - kEndOfCentralDirSize - 0xFFFF
                                 : 0;
  for (std::size_t at = archive.size() - kEndOfCentralDirSize + 1; at-- > lowest;) {
    if (read_u32(archive, at) == kEndOfCentralDirSig) {
      eocd = at;
      break;
    }
  }
  if (eocd == std::string_view::npos) throw ExtractError("end of central directory not found");

  const std::uint32_t entry_count = read_u16(archive, eocd + 10);
  std::size_t at = read_u32(archive, eocd + 16);
  if (entry_count == 0xFFFF || at == 0xFFFFFFFF) throw ExtractError("zip64 archives unsupported");

  std::vector<ZipEntry> entries;
  for (std::uint32_t i = 0; i < entry_count; ++i) {
    if (read_u32(archive, at) != kCentralHeaderSig) throw ExtractError("bad central header");
    const std::uint32_t flags = read_u16(archive, at + 8);
    const std::uint32_t method = read_u16(archive, at + 10);
    const std::uint32_t crc = read_u32(archive, at + 16);
    const std::size_t compressed_size = read_u32(archive, at + 20);
    const std::size_t size = read_u32(archive, at + 24);
    const std::size_t name_len = read_u16(archive, at + 28);
    const std::size_t extra_len = read_u16(archive, at + 30);
    const std::size_t comment_len = read_u16(archive, at + 32);
    const std::size_t local = read_u32(archive, at + 42);
    if (at + 46 + name_len > archive.size()) throw ExtractError("truncated central header");
    std::string name(archive.substr(at + 46, name_len));
    at += 46 + name_len + extra_len + comment_len;

    if (flags & 0x1) throw ExtractError(name + ": encrypted entries unsupported");
    if (!name.empty() && name.back() == '/') continue;

    if (read_u32(archive, local) != kLocalHeaderSig) throw ExtractError(name + ": bad local header");
    const std::size_t data_at =
        local + 30 + read_u16(archive, local + 26) + read_u16(archive, local + 28);
    if (data_at + compressed_size > archive.size()) throw ExtractError(name + ": truncated data");
    const std::string_view raw = archive.substr(data_at, compressed_size);

    std::string data;
    if (method == 0) {
      if (compressed_size != size) throw ExtractError(name + ": stored size mismatch");
      data.assign(raw);
    } else if (method == 8) {
      data = inflate_raw(raw, size);
    } else {
      throw ExtractError(name + ": compression method " + std::to_string(method) + " unsupported");
    }
    const auto actual_crc = crc32(0L, reinterpret_cast<const Bytef*>(data.data()),
                                  static_cast<uInt>(data.size()));
    if (actual_crc != crc) throw ExtractError(name + ": CRC mismatch");
    entries.push_back({std::move(name), std::move(data)});
  }
  return entries;
}

std::vector<std::filesystem::path> extract_zip(std::string_view archive,
                                               const std::filesystem::path& dest) {
  namespace fs = std::filesystem;
  std::vector<fs::path> written;
  for (auto& entry : read_zip(archive)) {
    const fs::path relative = fs::path(entry.name).lexically_normal();
    if (relative.is_absolute() || relative.has_root_name() || relative.empty() ||
        *relative.begin() == "..") {
      throw ExtractError(entry.name + ": path escapes extraction directory");
    }
    const fs::path target = dest / relative;
    fs::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    out.write(entry.data.data(), static_cast<std::streamsize>(entry.data.size()));
    if (!out) throw ExtractError("cannot write " + target.string());
    written.push_back(target);
  }
  return written;
}

}  // namespace wlaudit
