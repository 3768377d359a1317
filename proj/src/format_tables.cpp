#include "aiagen/format_tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "format_tables_data.hpp"

namespace aiagen {

namespace {

using nlohmann::json;

std::string require_string(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw std::runtime_error(fmt::format("format tables: missing string key \"{}\"", key));
  }
  return doc[key].get<std::string>();
}

}  // namespace

const std::string& FormatTables::version_of(const std::string& type_name) const {
  auto it = component_versions.find(type_name);
  if (it == component_versions.end()) {
    throw std::out_of_range(
        fmt::format("format tables: no $Version pinned for component type \"{}\"", type_name));
  }
  return it->second;
}

FormatTables FormatTables::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(fmt::format("format tables: {}", e.what()));
  }

  FormatTables tables;
  tables.ya_version = require_string(doc, "ya_version");
  tables.scm_epilogue = require_string(doc, "scm_epilogue");
  tables.bky_empty = require_string(doc, "bky_empty");
  tables.form_version = require_string(doc, "form_version");

  if (!doc.contains("auth_url") || !doc["auth_url"].is_array()) {
    throw std::runtime_error("format tables: missing array key \"auth_url\"");
  }
  for (const auto& url : doc["auth_url"]) {
    tables.auth_url.push_back(url.get<std::string>());
  }

  if (!doc.contains("scm_prologue") || !doc["scm_prologue"].is_array()) {
    throw std::runtime_error("format tables: missing array key \"scm_prologue\"");
  }
  for (const auto& line : doc["scm_prologue"]) {
    tables.scm_prologue.push_back(line.get<std::string>());
  }

  if (!doc.contains("component_versions") || !doc["component_versions"].is_object()) {
    throw std::runtime_error("format tables: missing object key \"component_versions\"");
  }
  for (const auto& [type_name, version] : doc["component_versions"].items()) {
    tables.component_versions[type_name] = version.get<std::string>();
  }
  return tables;
}

FormatTables FormatTables::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error(fmt::format("format tables: cannot open {}", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

const FormatTables& FormatTables::builtin() {
  static const FormatTables tables = from_json_text(detail::kFormatTablesJson);
  return tables;
}

}  // namespace aiagen
