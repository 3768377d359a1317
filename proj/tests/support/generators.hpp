// Seeded random-input generators shared by the property tests.
#pragma once

#include <random>
#include <string>

#include "aiagen/detection.hpp"

namespace aiagen::testing {

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  bool chance(double p) { return uniform(0.0, 1.0) < p; }

  std::mt19937& engine() { return engine_; }

 private:
  std::mt19937 engine_;
};

inline BoundingBox random_box_within(Rng& rng, double width, double height,
                                     double min_side = 4.0) {
  const double w = rng.uniform(min_side, width / 2.0);
  const double h = rng.uniform(min_side, height / 2.0);
  const double cx = rng.uniform(w / 2.0, width - w / 2.0);
  const double cy = rng.uniform(h / 2.0, height - h / 2.0);
  return BoundingBox{cx, cy, w, h};
}

inline ComponentClass random_widget_class(Rng& rng) {
  // Screen excluded; index 0..8 covers the widget classes.
  return static_cast<ComponentClass>(rng.uniform_int(0, 8));
}

inline Detection random_widget(Rng& rng, double width, double height) {
  Detection det;
  det.cls = random_widget_class(rng);
  det.confidence = rng.uniform(0.05, 1.0);
  det.box = random_box_within(rng, width, height);
  return det;
}

inline SketchDetections random_sketch(Rng& rng, int max_widgets, bool maybe_screen = true) {
  SketchDetections sketch;
  sketch.image_id = "random";
  sketch.image_width = 720;
  sketch.image_height = 1280;
  if (maybe_screen && rng.chance(0.5)) {
    Detection screen;
    screen.cls = ComponentClass::Screen;
    screen.confidence = rng.uniform(0.5, 1.0);
    screen.box = BoundingBox{360.0, 640.0, rng.uniform(600.0, 720.0),
                             rng.uniform(1000.0, 1280.0)};
    sketch.detections.push_back(screen);
  }
  const int count = rng.uniform_int(0, max_widgets);
  for (int i = 0; i < count; ++i) {
    sketch.detections.push_back(random_widget(rng, 720.0, 1280.0));
  }
  return sketch;
}

}  // namespace aiagen::testing
