#include "aiagen/preview.hpp"

#include <algorithm>
#include <array>

#include <fmt/format.h>

namespace aiagen {

namespace {

// tab10 palette keyed by ComponentClass ordinal.
constexpr std::array<std::string_view, kComponentClassCount> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// Darker to lighter strokes as arrangements nest.
constexpr std::array<std::string_view, 5> kDepthShades = {"#37474f", "#546e7a", "#78909c",
                                                          "#90a4ae", "#b0bec5"};

void append_rect(std::string& out, std::string_view css_class, double x, double y, double w,
                 double h, std::string_view stroke, bool dashed) {
  out += fmt::format(
      "  <rect class=\"{}\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
      "fill=\"none\" stroke=\"{}\" stroke-width=\"2\"{}/>\n",
      css_class, x, y, w, h, stroke, dashed ? " stroke-dasharray=\"6 3\"" : "");
}

void append_label(std::string& out, std::string_view css_class, double x, double y,
                  std::string_view color, const std::string& text) {
  out += fmt::format(
      "  <text class=\"{}\" x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
      "font-size=\"12\" fill=\"{}\">{}</text>\n",
      css_class, x, y, color, text);
}

std::string svg_open(double width, double height) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.2f} {:.2f}\">\n",
      width, height, width, height);
}

void render_wireframe_node(const LayoutNode& node, int depth, std::string& out) {
  if (node.is_leaf()) {
    const Detection& det = node.leaf();
    const std::string_view color = class_color(det.cls);
    append_rect(out, "leaf", det.box.left(), det.box.top(), det.box.w, det.box.h, color, false);
    append_label(out, "leaf-label", det.box.left() + 2.0, det.box.top() + 12.0, color,
                 std::string(to_string(det.cls)));
    return;
  }

  const auto region = node.bounding_region();
  if (region) {
    const std::size_t shade = std::min<std::size_t>(depth, kDepthShades.size() - 1);
    const double inset =
        std::min({2.0 * depth, (region->w - 1.0) / 2.0, (region->h - 1.0) / 2.0});
    const double pad = std::max(0.0, inset);
    append_rect(out, "arr", region->left() + pad, region->top() + pad, region->w - 2.0 * pad,
                region->h - 2.0 * pad, kDepthShades[shade], true);
  }
  for (const LayoutNode& child : node.arrangement().children) {
    render_wireframe_node(child, depth + 1, out);
  }
}

}  // namespace

std::string_view class_color(ComponentClass cls) {
  return kPalette[static_cast<std::size_t>(cls)];
}

std::string render_detections_svg(const SketchDetections& input) {
  std::string out = svg_open(input.image_width, input.image_height);
  out += fmt::format(
      "  <rect class=\"canvas\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\" "
      "stroke=\"#cccccc\"/>\n",
      input.image_width, input.image_height);
  for (const Detection& det : input.detections) {
    const std::string_view color = class_color(det.cls);
    append_rect(out, "det", det.box.left(), det.box.top(), det.box.w, det.box.h, color, false);
    append_label(out, "det-label", det.box.left() + 2.0, det.box.top() + 12.0, color,
                 fmt::format("{} {:.2f}", to_string(det.cls), det.confidence));
  }
  out += "</svg>\n";
  return out;
}

std::string render_wireframe_svg(const ScreenLayout& layout) {
  // Canvas covers the screen box and every leaf, so nothing renders outside.
  double width = layout.screen_box.right();
  double height = layout.screen_box.bottom();
  if (const auto region = layout.root.bounding_region()) {
    width = std::max(width, region->right());
    height = std::max(height, region->bottom());
  }

  std::string out = svg_open(width, height);
  out += fmt::format(
      "  <rect class=\"canvas\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
      "fill=\"#ffffff\" stroke=\"#cccccc\"/>\n",
      layout.screen_box.left(), layout.screen_box.top(), layout.screen_box.w,
      layout.screen_box.h);
  render_wireframe_node(layout.root, 0, out);
  out += "</svg>\n";
  return out;
}

}  // namespace aiagen
