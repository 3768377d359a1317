#include "aiagen/detection.hpp"

namespace aiagen {

const Detection* SketchDetections::screen() const {
  for (const Detection& det : detections) {
    if (det.cls == ComponentClass::Screen) {
      return &det;
    }
  }
  return nullptr;
}

std::vector<Detection> SketchDetections::widgets() const {
  std::vector<Detection> out;
  out.reserve(detections.size());
  for (const Detection& det : detections) {
    if (is_widget(det.cls)) {
      out.push_back(det);
    }
  }
  return out;
}

}  // namespace aiagen
