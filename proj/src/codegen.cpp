#include "aiagen/codegen.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "aiagen/zip_writer.hpp"

namespace aiagen {

namespace {

using ordered_json = nlohmann::ordered_json;

// App Inventor size codes.
constexpr const char* kAutomatic = "-1";
constexpr const char* kFillParent = "-2";

struct NameCounter {
  std::map<std::string, int> counts;

  std::string next(const std::string& type_name) {
    return fmt::format("{}{}", type_name, ++counts[type_name]);
  }
};

ComponentSpec build_component(const LayoutNode& node, bool is_root,
                              const BoundingBox& screen_box, const GenerationOptions& options,
                              const FormatTables& tables, UuidGenerator& uuids,
                              NameCounter& names) {
  ComponentSpec spec;
  if (node.is_leaf()) {
    const Detection& det = node.leaf();
    const WidgetMapping mapping = map_class_to_component(det.cls, options, tables);
    spec.type_name = mapping.type_name;
    spec.version = mapping.version;
    spec.name = names.next(spec.type_name);
    spec.uuid = uuids.next();
    spec.properties["AlignHorizontal"] = "1";
    spec.properties["AlignVertical"] = "1";
    const bool fills =
        screen_box.w > 0.0 && det.box.w > options.fill_parent_threshold * screen_box.w;
    spec.properties["Width"] = fills ? kFillParent : kAutomatic;
    if (det.cls == ComponentClass::Image || det.cls == ComponentClass::Map) {
      // Images and maps keep their detected pixel height.
      spec.properties["Height"] = fmt::format("{}", std::llround(det.box.h));
    } else {
      spec.properties["Height"] = kAutomatic;
    }
    return spec;
  }

  const auto& arr = node.arrangement();
  spec.type_name = arr.orientation == Orientation::Vertical ? "VerticalArrangement"
                                                            : "HorizontalArrangement";
  spec.version = tables.version_of(spec.type_name);
  spec.name = names.next(spec.type_name);
  spec.uuid = uuids.next();
  spec.properties["AlignHorizontal"] = "3";  // center
  spec.properties["AlignVertical"] = "1";
  spec.properties["Width"] = kFillParent;
  // The root arrangement fills the whole screen; nested rows and columns
  // size to their content.
  spec.properties["Height"] = is_root ? kFillParent : kAutomatic;
  spec.children.reserve(arr.children.size());
  for (const LayoutNode& child : arr.children) {
    spec.children.push_back(
        build_component(child, false, screen_box, options, tables, uuids, names));
  }
  return spec;
}

ordered_json component_to_json(const ComponentSpec& spec) {
  ordered_json j;
  j["$Name"] = spec.name;
  j["$Type"] = spec.type_name;
  j["$Version"] = spec.version;
  for (const auto& [key, value] : spec.properties) {
    j[key] = value;
  }
  j["Uuid"] = spec.uuid;
  if (!spec.children.empty()) {
    ordered_json children = ordered_json::array();
    for (const ComponentSpec& child : spec.children) {
      children.push_back(component_to_json(child));
    }
    j["$Components"] = std::move(children);
  }
  return j;
}

void validate_project(const AiaProject& project) {
  if (project.screens.empty()) {
    throw std::invalid_argument("project must contain at least one screen");
  }
  if (project.screens.size() > kMaxScreens) {
    throw std::invalid_argument(
        fmt::format("project has {} screens, the limit is {}", project.screens.size(),
                    kMaxScreens));
  }
  if (!is_valid_identifier(project.options.project_name)) {
    throw std::invalid_argument(fmt::format("invalid project name \"{}\"",
                                            project.options.project_name));
  }
  bool main_found = false;
  for (std::size_t i = 0; i < project.screens.size(); ++i) {
    const std::string& name = project.screens[i].first;
    if (!is_valid_identifier(name)) {
      throw std::invalid_argument(fmt::format("invalid screen name \"{}\"", name));
    }
    for (std::size_t j = i + 1; j < project.screens.size(); ++j) {
      if (project.screens[j].first == name) {
        throw std::invalid_argument(fmt::format("duplicate screen name \"{}\"", name));
      }
    }
    main_found = main_found || name == project.options.main_screen;
  }
  if (!main_found) {
    throw std::invalid_argument(fmt::format("main screen \"{}\" is not one of the project's screens",
                                            project.options.main_screen));
  }
}

}  // namespace

bool is_valid_identifier(const std::string& name) {
  if (name.empty()) {
    return false;
  }
  const char first = name.front();
  if (!(first >= 'A' && first <= 'Z') && !(first >= 'a' && first <= 'z')) {
    return false;
  }
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) {
      return false;
    }
  }
  return true;
}

UuidGenerator::UuidGenerator() : engine_(std::random_device{}()) {}

UuidGenerator::UuidGenerator(std::uint32_t seed) : engine_(seed) {}

std::string UuidGenerator::next() {
  // 31-bit draws; 0 is reserved for the Form and repeats are redrawn so a
  // screen never holds two components with the same Uuid.
  for (;;) {
    const std::uint32_t value = engine_() & 0x7fffffffu;
    if (value == 0 || !used_.insert(value).second) {
      continue;
    }
    return fmt::format("{}", value);
  }
}

WidgetMapping map_class_to_component(ComponentClass cls, const GenerationOptions& options,
                                     const FormatTables& tables) {
  if (cls == ComponentClass::Screen) {
    throw std::invalid_argument("Screen maps to the Form itself, not a widget component");
  }
  std::string type_name{to_string(cls)};
  if (cls == ComponentClass::ListPicker && options.list_style == ListStyle::Spinner) {
    type_name = "Spinner";
  }
  WidgetMapping mapping;
  mapping.version = tables.version_of(type_name);
  mapping.type_name = std::move(type_name);
  return mapping;
}

std::optional<ComponentSpec> layout_to_component_tree(const ScreenLayout& layout,
                                                      const GenerationOptions& options,
                                                      const FormatTables& tables,
                                                      UuidGenerator& uuids) {
  if (layout.empty()) {
    return std::nullopt;
  }
  NameCounter names;
  return build_component(layout.root, true, layout.screen_box, options, tables, uuids, names);
}

ScmDocument make_scm_document(const std::string& screen_name, const ScreenLayout& layout,
                              const GenerationOptions& options, const FormatTables& tables,
                              UuidGenerator& uuids) {
  ScmDocument doc;
  doc.auth_url = tables.auth_url;
  doc.ya_version = tables.ya_version;
  doc.form.name = screen_name;
  doc.form.type_name = "Form";
  doc.form.version = tables.form_version;
  doc.form.uuid = "0";
  doc.form.properties["AppName"] = options.project_name;
  doc.form.properties["Title"] = screen_name;
  if (auto tree = layout_to_component_tree(layout, options, tables, uuids)) {
    doc.form.children.push_back(std::move(*tree));
  }
  return doc;
}

std::string emit_scm(const ScmDocument& doc, const FormatTables& tables) {
  ordered_json body;
  body["authURL"] = doc.auth_url;
  body["YaVersion"] = doc.ya_version;
  body["Source"] = "Form";
  body["Properties"] = component_to_json(doc.form);

  std::string out;
  for (const std::string& line : tables.scm_prologue) {
    out += line;
    out += '\n';
  }
  out += body.dump();
  out += '\n';
  out += tables.scm_epilogue;
  out += '\n';
  return out;
}

std::string emit_bky(const FormatTables& tables) { return tables.bky_empty + "\n"; }

std::string emit_properties(const AiaProject& project) {
  const GenerationOptions& opt = project.options;
  std::string out;
  out += fmt::format("main=appinventor.ai_{}.{}.{}\n", opt.author_slug, opt.project_name,
                     opt.main_screen);
  out += fmt::format("name={}\n", opt.project_name);
  out += "assets=../assets\n";
  out += "source=../src\n";
  out += "build=../build\n";
  out += "versioncode=1\n";
  out += "versionname=1.0\n";
  return out;
}

std::vector<std::uint8_t> package_aia(const AiaProject& project, const FormatTables& tables) {
  validate_project(project);

  UuidGenerator uuids = project.options.deterministic_uuids
                            ? UuidGenerator(project.options.uuid_seed)
                            : UuidGenerator();

  ZipWriter zip;
  zip.add_file("youngandroidproject/project.properties", emit_properties(project));

  const std::string screen_dir = fmt::format("src/appinventor/ai_{}/{}",
                                             project.options.author_slug,
                                             project.options.project_name);
  const std::string bky = emit_bky(tables);
  for (const auto& [screen_name, layout] : project.screens) {
    const ScmDocument doc =
        make_scm_document(screen_name, layout, project.options, tables, uuids);
    zip.add_file(fmt::format("{}/{}.scm", screen_dir, screen_name), emit_scm(doc, tables));
    zip.add_file(fmt::format("{}/{}.bky", screen_dir, screen_name), bky);
  }
  return zip.finish();
}

}  // namespace aiagen
