#include "aiagen/dedup.hpp"

#include <algorithm>
#include <vector>

namespace aiagen {

double overlap_fraction(const Detection& a, const Detection& b) {
  const double smaller = std::min(a.box.area(), b.box.area());
  if (smaller <= 0.0) {
    return 0.0;
  }
  return intersection_area(a.box, b.box) / smaller;
}

SketchDetections eliminate_overlaps(const SketchDetections& input) {
  const auto& dets = input.detections;

  std::vector<std::size_t> order;
  order.reserve(dets.size());
  for (std::size_t i = 0; i < dets.size(); ++i) {
    if (is_widget(dets[i].cls)) {
      order.push_back(i);
    }
  }
  // Highest confidence first; ties go to the larger area, then input order.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dets[a].confidence != dets[b].confidence) {
      return dets[a].confidence > dets[b].confidence;
    }
    if (dets[a].box.area() != dets[b].box.area()) {
      return dets[a].box.area() > dets[b].box.area();
    }
    return a < b;
  });

  std::vector<bool> keep(dets.size(), false);
  std::vector<std::size_t> accepted;
  for (std::size_t candidate : order) {
    const bool conflicts =
        std::any_of(accepted.begin(), accepted.end(), [&](std::size_t winner) {
          return overlap_fraction(dets[candidate], dets[winner]) > 0.5;
        });
    if (!conflicts) {
      accepted.push_back(candidate);
      keep[candidate] = true;
    }
  }

  SketchDetections result;
  result.image_id = input.image_id;
  result.image_width = input.image_width;
  result.image_height = input.image_height;
  for (std::size_t i = 0; i < dets.size(); ++i) {
    // Screen boxes define the canvas and are never eliminated.
    if (keep[i] || !is_widget(dets[i].cls)) {
      result.detections.push_back(dets[i]);
    }
  }
  return result;
}

}  // namespace aiagen
