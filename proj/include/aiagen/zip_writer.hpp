#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aiagen {

// Minimal zip writer tuned for reproducible output: entries are stored
// uncompressed with a fixed modification timestamp, so identical inputs
// produce identical archives on every platform.
class ZipWriter {
 public:
  void add_file(std::string name, std::string_view content);

  // Appends the central directory and returns the archive bytes.
  std::vector<std::uint8_t> finish();

  std::size_t entry_count() const { return entries_.size(); }

 private:
  struct Entry {
    std::string name;
    std::uint32_t crc = 0;
    std::uint32_t size = 0;
    std::uint32_t offset = 0;
  };

  std::vector<std::uint8_t> buffer_;
  std::vector<Entry> entries_;
};

}  // namespace aiagen
