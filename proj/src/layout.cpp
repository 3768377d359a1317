#include "aiagen/layout.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

namespace aiagen {

namespace {

// Detections carry their input position so ties and the no-progress guard
// stay deterministic.
struct Item {
  Detection det;
  std::size_t input_index = 0;
};

double primary_key(const Item& item, Orientation o) {
  return o == Orientation::Vertical ? item.det.box.cy : item.det.box.cx;
}

double secondary_key(const Item& item, Orientation o) {
  return o == Orientation::Vertical ? item.det.box.cx : item.det.box.cy;
}

void sort_items(std::vector<Item>& items, Orientation o) {
  std::sort(items.begin(), items.end(), [o](const Item& a, const Item& b) {
    return std::make_tuple(primary_key(a, o), secondary_key(a, o), a.input_index) <
           std::make_tuple(primary_key(b, o), secondary_key(b, o), b.input_index);
  });
}

std::vector<std::size_t> key_set(const std::vector<Item>& items) {
  std::vector<std::size_t> keys;
  keys.reserve(items.size());
  for (const Item& item : items) {
    keys.push_back(item.input_index);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

LayoutNode align_impl(std::vector<Item> items, Orientation o,
                      const std::vector<std::size_t>& caller_keys, double tolerance_px) {
  sort_items(items, o);
  const std::vector<std::size_t> my_keys = key_set(items);

  // No-progress guard: a recursive call that received exactly its caller's
  // component set would regroup the same set forever. Emit plain leaves in
  // this orientation's order instead.
  if (my_keys == caller_keys) {
    std::vector<LayoutNode> leaves;
    leaves.reserve(items.size());
    for (Item& item : items) {
      leaves.push_back(LayoutNode::make_leaf(std::move(item.det)));
    }
    return LayoutNode::make_arrangement(o, std::move(leaves));
  }

  std::vector<LayoutNode> children;
  std::deque<Item> remaining(items.begin(), items.end());
  while (!remaining.empty()) {
    std::vector<Item> group;
    group.push_back(std::move(remaining.front()));
    remaining.pop_front();

    // Transitive closure: every component aligned with any group member
    // joins the group.
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (is_aligned(group[gi].det, it->det, o, tolerance_px)) {
          group.push_back(std::move(*it));
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }

    if (group.size() == 1) {
      children.push_back(LayoutNode::make_leaf(std::move(group.front().det)));
    } else {
      children.push_back(align_impl(std::move(group), flip(o), my_keys, tolerance_px));
    }
  }
  return LayoutNode::make_arrangement(o, std::move(children));
}

void dump_node(const LayoutNode& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.is_leaf()) {
    const Detection& det = node.leaf();
    out += fmt::format("{} cx={:g} cy={:g} w={:g} h={:g} conf={:g}\n", to_string(det.cls),
                       det.box.cx, det.box.cy, det.box.w, det.box.h, det.confidence);
    return;
  }
  const auto& arr = node.arrangement();
  if (auto region = node.bounding_region()) {
    out += fmt::format("{} cx={:g} cy={:g} w={:g} h={:g}\n", to_string(arr.orientation),
                       region->cx, region->cy, region->w, region->h);
  } else {
    out += fmt::format("{} empty\n", to_string(arr.orientation));
  }
  for (const LayoutNode& child : arr.children) {
    dump_node(child, depth + 1, out);
  }
}

}  // namespace

std::string_view to_string(Orientation o) {
  return o == Orientation::Vertical ? "Vertical" : "Horizontal";
}

LayoutNode LayoutNode::make_leaf(Detection det) {
  LayoutNode node;
  node.node = std::move(det);
  return node;
}

LayoutNode LayoutNode::make_arrangement(Orientation o, std::vector<LayoutNode> children) {
  LayoutNode node;
  node.node = Arrangement{o, std::move(children)};
  return node;
}

std::size_t LayoutNode::leaf_count() const {
  if (is_leaf()) {
    return 1;
  }
  std::size_t count = 0;
  for (const LayoutNode& child : arrangement().children) {
    count += child.leaf_count();
  }
  return count;
}

std::optional<BoundingBox> LayoutNode::bounding_region() const {
  if (is_leaf()) {
    return leaf().box;
  }
  std::optional<BoundingBox> region;
  for (const LayoutNode& child : arrangement().children) {
    if (auto sub = child.bounding_region()) {
      region = region ? union_box(*region, *sub) : *sub;
    }
  }
  return region;
}

bool is_aligned(const Detection& a, const Detection& b, Orientation o, double tolerance_px) {
  double lo_a = 0.0, hi_a = 0.0, lo_b = 0.0, hi_b = 0.0;
  if (o == Orientation::Vertical) {
    lo_a = a.box.top();
    hi_a = a.box.bottom();
    lo_b = b.box.top();
    hi_b = b.box.bottom();
  } else {
    lo_a = a.box.left();
    hi_a = a.box.right();
    lo_b = b.box.left();
    hi_b = b.box.right();
  }
  return std::min(hi_a, hi_b) - std::max(lo_a, lo_b) > tolerance_px;
}

LayoutNode align(const std::vector<Detection>& components, Orientation o, double tolerance_px) {
  if (components.empty()) {
    throw std::invalid_argument("align: component list is empty");
  }
  std::vector<Item> items;
  items.reserve(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    items.push_back(Item{components[i], i});
  }
  return align_impl(std::move(items), o, {}, tolerance_px);
}

ScreenLayout build_screen_layout(const SketchDetections& input, double tolerance_px) {
  ScreenLayout layout;
  if (const Detection* screen = input.screen()) {
    layout.screen_box = screen->box;
  } else {
    layout.screen_box =
        BoundingBox::from_corners(0.0, 0.0, input.image_width, input.image_height);
  }

  const std::vector<Detection> widgets = input.widgets();
  if (widgets.empty()) {
    layout.root = LayoutNode::make_arrangement(Orientation::Vertical, {});
  } else {
    layout.root = align(widgets, Orientation::Vertical, tolerance_px);
  }
  return layout;
}

std::string dump_layout(const LayoutNode& node) {
  std::string out;
  dump_node(node, 0, out);
  return out;
}

std::string dump_layout(const ScreenLayout& layout) {
  std::string out = fmt::format("Screen cx={:g} cy={:g} w={:g} h={:g}\n", layout.screen_box.cx,
                                layout.screen_box.cy, layout.screen_box.w, layout.screen_box.h);
  dump_node(layout.root, 1, out);
  return out;
}

}  // namespace aiagen
