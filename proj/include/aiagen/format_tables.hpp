#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace aiagen {

// Pinned App Inventor format constants: .scm framing, YaVersion, component
// $Version numbers and the empty .bky payload. The single source of truth
// is data/appinventor_format.json, embedded at build time; a different
// table file can be loaded at runtime when the target platform drifts.
struct FormatTables {
  std::string ya_version;
  std::vector<std::string> auth_url;
  std::vector<std::string> scm_prologue;  // lines before the JSON body
  std::string scm_epilogue;               // line after the JSON body
  std::string bky_empty;
  std::string form_version;
  std::map<std::string, std::string> component_versions;  // keyed by $Type

  // Looks up a $Type's pinned version; throws std::out_of_range with the
  // type name when the table has no entry.
  const std::string& version_of(const std::string& type_name) const;

  static FormatTables from_json_text(const std::string& text);
  static FormatTables load_file(const std::filesystem::path& path);

  // Tables embedded from data/appinventor_format.json.
  static const FormatTables& builtin();
};

}  // namespace aiagen
