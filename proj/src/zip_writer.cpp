#include "aiagen/zip_writer.hpp"

#include <zlib.h>

namespace aiagen {

namespace {

// 2021-01-01 00:00:00 in MS-DOS format; every entry carries it so archive
// bytes do not depend on the build clock.
constexpr std::uint16_t kDosDate = ((2021 - 1980) << 9) | (1 << 5) | 1;
constexpr std::uint16_t kDosTime = 0;

constexpr std::uint16_t kVersionMadeBy = 20;
constexpr std::uint16_t kVersionNeeded = 20;
constexpr std::uint16_t kMethodStored = 0;

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

void put_bytes(std::vector<std::uint8_t>& out, std::string_view data) {
  out.insert(out.end(), data.begin(), data.end());
}

std::uint32_t crc_of(std::string_view data) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  crc = ::crc32(crc, reinterpret_cast<const Bytef*>(data.data()),
                static_cast<uInt>(data.size()));
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

void ZipWriter::add_file(std::string name, std::string_view content) {
  Entry entry;
  entry.name = std::move(name);
  entry.crc = crc_of(content);
  entry.size = static_cast<std::uint32_t>(content.size());
  entry.offset = static_cast<std::uint32_t>(buffer_.size());

  put32(buffer_, 0x04034b50);  // local file header
  put16(buffer_, kVersionNeeded);
  put16(buffer_, 0);  // flags
  put16(buffer_, kMethodStored);
  put16(buffer_, kDosTime);
  put16(buffer_, kDosDate);
  put32(buffer_, entry.crc);
  put32(buffer_, entry.size);  // compressed == uncompressed for stored entries
  put32(buffer_, entry.size);
  put16(buffer_, static_cast<std::uint16_t>(entry.name.size()));
  put16(buffer_, 0);  // extra field length
  put_bytes(buffer_, entry.name);
  put_bytes(buffer_, content);

  entries_.push_back(std::move(entry));
}

std::vector<std::uint8_t> ZipWriter::finish() {
  const std::uint32_t cd_offset = static_cast<std::uint32_t>(buffer_.size());
  for (const Entry& entry : entries_) {
    put32(buffer_, 0x02014b50);  // central directory header
    put16(buffer_, kVersionMadeBy);
    put16(buffer_, kVersionNeeded);
    put16(buffer_, 0);  // flags
    put16(buffer_, kMethodStored);
    put16(buffer_, kDosTime);
    put16(buffer_, kDosDate);
    put32(buffer_, entry.crc);
    put32(buffer_, entry.size);
    put32(buffer_, entry.size);
    put16(buffer_, static_cast<std::uint16_t>(entry.name.size()));
    put16(buffer_, 0);  // extra field length
    put16(buffer_, 0);  // comment length
    put16(buffer_, 0);  // disk number
    put16(buffer_, 0);  // internal attributes
    put32(buffer_, 0);  // external attributes
    put32(buffer_, entry.offset);
    put_bytes(buffer_, entry.name);
  }
  const std::uint32_t cd_size = static_cast<std::uint32_t>(buffer_.size()) - cd_offset;

  put32(buffer_, 0x06054b50);  // end of central directory
  put16(buffer_, 0);
  put16(buffer_, 0);
  put16(buffer_, static_cast<std::uint16_t>(entries_.size()));
  put16(buffer_, static_cast<std::uint16_t>(entries_.size()));
  put32(buffer_, cd_size);
  put32(buffer_, cd_offset);
  put16(buffer_, 0);  // comment length

  return std::move(buffer_);
}

}  // namespace aiagen
