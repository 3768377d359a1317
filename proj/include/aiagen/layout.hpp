#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aiagen/detection.hpp"

namespace aiagen {

enum class Orientation { Vertical, Horizontal };

constexpr Orientation flip(Orientation o) {
  return o == Orientation::Vertical ? Orientation::Horizontal : Orientation::Vertical;
}

std::string_view to_string(Orientation o);

// Tree of alternating vertical/horizontal arrangements with widget leaves.
struct LayoutNode {
  struct Arrangement {
    Orientation orientation = Orientation::Vertical;
    std::vector<LayoutNode> children;
  };

  std::variant<Detection, Arrangement> node;

  static LayoutNode make_leaf(Detection det);
  static LayoutNode make_arrangement(Orientation o, std::vector<LayoutNode> children);

  bool is_leaf() const { return std::holds_alternative<Detection>(node); }
  const Detection& leaf() const { return std::get<Detection>(node); }
  const Arrangement& arrangement() const { return std::get<Arrangement>(node); }

  std::size_t leaf_count() const;

  // Tightest box covering every leaf box; empty for a childless arrangement.
  std::optional<BoundingBox> bounding_region() const;
};

struct ScreenLayout {
  BoundingBox screen_box;  // Screen detection box, or the full image rectangle
  LayoutNode root;         // always a Vertical arrangement; childless for an empty screen

  bool empty() const { return !root.is_leaf() && root.arrangement().children.empty(); }
};

// True when the projection intervals of a and b perpendicular to the
// stacking direction overlap with length greater than tolerance_px
// (Vertical compares y-intervals, Horizontal x-intervals). Symmetric.
bool is_aligned(const Detection& a, const Detection& b, Orientation o,
                double tolerance_px = 0.0);

// Recursive grouping: sort by the stacking coordinate, sweep off each
// component together with the transitive closure of components aligned to
// it, and lay closures out in the flipped orientation. A recursive call
// that receives exactly its caller's component set emits plain leaves
// instead of recursing again, which bounds the recursion depth.
// Throws std::invalid_argument on an empty component list.
LayoutNode align(const std::vector<Detection>& components, Orientation o,
                 double tolerance_px = 0.0);

// Lays out the non-Screen detections under a Vertical root. screen_box is
// the Screen detection's box when present, else the image rectangle. An
// empty widget list yields a childless root.
ScreenLayout build_screen_layout(const SketchDetections& input,
                                 double tolerance_px = 0.0);

// Indented outline, one node per line, stable for snapshot tests.
std::string dump_layout(const LayoutNode& node);
std::string dump_layout(const ScreenLayout& layout);

}  // namespace aiagen
