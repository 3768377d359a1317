#include "aiagen/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace aiagen {

BoundingBox BoundingBox::from_corners(double x1, double y1, double x2, double y2) {
  BoundingBox box;
  box.cx = (x1 + x2) / 2.0;
  box.cy = (y1 + y2) / 2.0;
  box.w = std::abs(x2 - x1);
  box.h = std::abs(y2 - y1);
  return box;
}

BoundingBox union_box(const BoundingBox& a, const BoundingBox& b) {
  const double left = std::min(a.left(), b.left());
  const double top = std::min(a.top(), b.top());
  const double right = std::max(a.right(), b.right());
  const double bottom = std::max(a.bottom(), b.bottom());
  return BoundingBox::from_corners(left, top, right, bottom);
}

double intersection_area(const BoundingBox& a, const BoundingBox& b) {
  const double overlap_x = std::min(a.right(), b.right()) - std::max(a.left(), b.left());
  if (overlap_x <= 0.0) {
    return 0.0;
  }
  const double overlap_y = std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
  if (overlap_y <= 0.0) {
    return 0.0;
  }
  return overlap_x * overlap_y;
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  const double intersection = intersection_area(a, b);
  const double union_area = a.area() + b.area() - intersection;
  return union_area > 0.0 ? intersection / union_area : 0.0;
}

}  // namespace aiagen
