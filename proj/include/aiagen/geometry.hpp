#pragma once

namespace aiagen {

// Axis-aligned box stored as center point plus extent, in pixels.
struct BoundingBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  double left() const { return cx - w / 2.0; }
  double right() const { return cx + w / 2.0; }
  double top() const { return cy - h / 2.0; }
  double bottom() const { return cy + h / 2.0; }
  double area() const { return w * h; }

  bool valid() const { return w > 0.0 && h > 0.0; }

  // Corner order does not matter; extents are taken as absolute values.
  static BoundingBox from_corners(double x1, double y1, double x2, double y2);

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Smallest box covering both a and b.
BoundingBox union_box(const BoundingBox& a, const BoundingBox& b);

// Overlap area in pixels^2; zero when disjoint. Symmetric.
double intersection_area(const BoundingBox& a, const BoundingBox& b);

// Jaccard index on areas, in [0,1]. 1 iff identical, 0 iff disjoint.
double iou(const BoundingBox& a, const BoundingBox& b);

}  // namespace aiagen
