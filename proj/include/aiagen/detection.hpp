#pragma once

#include <string>
#include <vector>

#include "aiagen/component_class.hpp"
#include "aiagen/geometry.hpp"

namespace aiagen {

// One classified bounding box with a confidence score. Ground-truth
// annotations ingest with confidence 1.0.
struct Detection {
  ComponentClass cls = ComponentClass::Label;
  double confidence = 0.0;  // in [0,1]
  BoundingBox box;

  friend bool operator==(const Detection&, const Detection&) = default;
};

// All detections for one sketch image. After ingestion every box lies within
// [0,width] x [0,height] and at most one Screen detection remains.
struct SketchDetections {
  std::string image_id;
  int image_width = 0;
  int image_height = 0;
  std::vector<Detection> detections;

  // First Screen detection, or nullptr when none survived ingestion.
  const Detection* screen() const;

  // All non-Screen detections in input order.
  std::vector<Detection> widgets() const;

  friend bool operator==(const SketchDetections&, const SketchDetections&) = default;
};

}  // namespace aiagen
