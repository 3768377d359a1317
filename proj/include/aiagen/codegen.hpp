#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "aiagen/component_class.hpp"
#include "aiagen/format_tables.hpp"
#include "aiagen/layout.hpp"

namespace aiagen {

enum class ListStyle { ListPicker, Spinner };

struct GenerationOptions {
  std::string project_name;
  std::string main_screen;
  ListStyle list_style = ListStyle::ListPicker;
  std::string author_slug = "anonymous";
  bool deterministic_uuids = false;
  std::uint32_t uuid_seed = 0;

  // A leaf whose box width exceeds this fraction of the screen width is
  // emitted Fill-Parent ("-2") instead of Automatic ("-1").
  double fill_parent_threshold = 0.85;
};

// App Inventor project/screen identifier: [A-Za-z][A-Za-z0-9_]*.
bool is_valid_identifier(const std::string& name);

// One visual component record of a .scm document. Width/Height and the
// alignment values live in `properties`; emission order between $Version
// and Uuid is alphabetical, which std::map provides.
struct ComponentSpec {
  std::string name;
  std::string type_name;
  std::string version;
  std::string uuid;
  std::map<std::string, std::string> properties;
  std::vector<ComponentSpec> children;
};

struct ScmDocument {
  std::vector<std::string> auth_url;
  std::string ya_version;
  // Source is always the literal "Form"; form.uuid is "0".
  ComponentSpec form;
};

struct AiaProject {
  GenerationOptions options;
  std::vector<std::pair<std::string, ScreenLayout>> screens;  // 1..6, unique names
};

inline constexpr std::size_t kMaxScreens = 6;

// Decimal Uuid strings drawn uniformly from [1, 2^31-1], distinct per
// generator instance. "0" is reserved for the Form.
class UuidGenerator {
 public:
  UuidGenerator();  // nondeterministic seed
  explicit UuidGenerator(std::uint32_t seed);

  std::string next();

 private:
  std::mt19937 engine_;
  std::unordered_set<std::uint32_t> used_;
};

struct WidgetMapping {
  std::string type_name;
  std::string version;
};

// Pinned widget-class -> App Inventor component mapping; ListPicker follows
// options.list_style. Throws std::invalid_argument for Screen.
WidgetMapping map_class_to_component(ComponentClass cls, const GenerationOptions& options,
                                     const FormatTables& tables);

// Translates a layout tree into the Form's single child component tree.
// Names are type-prefixed counters assigned in pre-order; arrangements get
// AlignHorizontal "3" / AlignVertical "1"; the root arrangement fills the
// screen. Returns nullopt for an empty layout (the Form then has no
// children).
std::optional<ComponentSpec> layout_to_component_tree(const ScreenLayout& layout,
                                                      const GenerationOptions& options,
                                                      const FormatTables& tables,
                                                      UuidGenerator& uuids);

ScmDocument make_scm_document(const std::string& screen_name, const ScreenLayout& layout,
                              const GenerationOptions& options, const FormatTables& tables,
                              UuidGenerator& uuids);

// #| / $JSON framing around the single-line JSON body.
std::string emit_scm(const ScmDocument& doc, const FormatTables& tables);

// Empty blocks workspace, identical for every screen.
std::string emit_bky(const FormatTables& tables);

// youngandroidproject/project.properties payload.
std::string emit_properties(const AiaProject& project);

// Packages properties, .scm and .bky entries into a deterministic zip
// archive (fixed timestamps; stored entries). Throws std::invalid_argument
// when the screen count is outside 1..6 or names are invalid.
std::vector<std::uint8_t> package_aia(const AiaProject& project, const FormatTables& tables);

}  // namespace aiagen
