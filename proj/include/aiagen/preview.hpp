#pragma once

#include <string>
#include <string_view>

#include "aiagen/detection.hpp"
#include "aiagen/layout.hpp"

namespace aiagen {

// Fixed stroke color per class, keyed by enum ordinal.
std::string_view class_color(ComponentClass cls);

// One labeled rectangle per detection (class name + confidence to two
// decimals) on a canvas sized to the image. Deterministic byte-for-byte.
std::string render_detections_svg(const SketchDetections& input);

// Dashed outlines for arrangements at their bounding regions (inset and
// shaded by nesting depth), solid labeled boxes for leaves.
std::string render_wireframe_svg(const ScreenLayout& layout);

}  // namespace aiagen
