#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace aiagen {

// UI component taxonomy. Screen stands for the sketch canvas as a whole and
// is the only member that does not map to a widget.
enum class ComponentClass {
  Label,
  Button,
  Image,
  TextBox,
  CheckBox,
  ListPicker,
  Slider,
  Switch,
  Map,
  Screen,
};

inline constexpr std::size_t kComponentClassCount = 10;

constexpr std::array<ComponentClass, kComponentClassCount> all_component_classes() {
  return {ComponentClass::Label,    ComponentClass::Button, ComponentClass::Image,
          ComponentClass::TextBox,  ComponentClass::CheckBox, ComponentClass::ListPicker,
          ComponentClass::Slider,   ComponentClass::Switch, ComponentClass::Map,
          ComponentClass::Screen};
}

// Canonical case-sensitive name used in every file format.
std::string_view to_string(ComponentClass cls);

std::optional<ComponentClass> component_class_from_string(std::string_view name);

constexpr bool is_widget(ComponentClass cls) { return cls != ComponentClass::Screen; }

}  // namespace aiagen
