// Process and filesystem helpers for the CLI-level tests.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/wait.h>
#endif

namespace aiagen::testing {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return std::vector<std::uint8_t>(text.begin(), text.end());
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

inline CommandResult run_command(const std::string& command) {
  const auto log = std::filesystem::temp_directory_path() /
                   ("aiagen_cmd_" + std::to_string(std::random_device{}()) + ".log");
  const int raw = std::system((command + " > " + log.string() + " 2>&1").c_str());

  CommandResult result;
  result.output = read_text_file(log);
  std::filesystem::remove(log);
#if defined(__unix__) || defined(__APPLE__)
  if (raw != -1 && WIFEXITED(raw)) {
    result.exit_code = WEXITSTATUS(raw);
  }
#else
  result.exit_code = raw;
#endif
  return result;
}

inline bool python3_available() {
  static const bool available = run_command("python3 --version").exit_code == 0;
  return available;
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("aiagen_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace aiagen::testing
