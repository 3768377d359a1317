#include "aiagen/component_class.hpp"

namespace aiagen {

namespace {

constexpr std::array<std::string_view, kComponentClassCount> kNames = {
    "Label",      "Button", "Image",  "TextBox", "CheckBox",
    "ListPicker", "Slider", "Switch", "Map",     "Screen"};

}  // namespace

std::string_view to_string(ComponentClass cls) {
  return kNames[static_cast<std::size_t>(cls)];
}

std::optional<ComponentClass> component_class_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) {
      return static_cast<ComponentClass>(i);
    }
  }
  return std::nullopt;
}

}  // namespace aiagen
