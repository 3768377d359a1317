#include "aiagen/parse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace aiagen {

namespace {

using nlohmann::json;

// 1-based line of a byte offset, for parse_error context.
std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("line {}: {}", line_of_offset(text, e.byte), e.what()));
  }
}

const json& require_key(const json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(fmt::format("{}: missing required key \"{}\"", context, key));
  }
  return *it;
}

double require_number(const json& obj, const char* key, const std::string& context) {
  const json& value = require_key(obj, key, context);
  if (!value.is_number()) {
    throw ParseError(fmt::format("{}: key \"{}\" must be a number", context, key));
  }
  return value.get<double>();
}

int require_positive_int(const json& obj, const char* key, const std::string& context) {
  const double value = require_number(obj, key, context);
  if (value <= 0 || value != std::floor(value)) {
    throw ParseError(fmt::format("{}: key \"{}\" must be a positive integer, got {}", context,
                                 key, value));
  }
  return static_cast<int>(value);
}

std::string require_string(const json& obj, const char* key, const std::string& context) {
  const json& value = require_key(obj, key, context);
  if (!value.is_string()) {
    throw ParseError(fmt::format("{}: key \"{}\" must be a string", context, key));
  }
  return value.get<std::string>();
}

ComponentClass require_class(const std::string& name, const std::string& context) {
  auto cls = component_class_from_string(name);
  if (!cls) {
    throw ParseError(fmt::format("{}: unknown component class \"{}\"", context, name));
  }
  return *cls;
}

Detection clamp_to_image(Detection det, double width, double height,
                         const std::string& context) {
  const double left = std::max(0.0, det.box.left());
  const double top = std::max(0.0, det.box.top());
  const double right = std::min(width, det.box.right());
  const double bottom = std::min(height, det.box.bottom());
  if (right - left <= 0.0 || bottom - top <= 0.0) {
    throw ParseError(fmt::format("{}: box lies entirely outside the image bounds", context));
  }
  det.box = BoundingBox::from_corners(left, top, right, bottom);
  return det;
}

// Keeps only the highest-confidence Screen detection (first on ties);
// everything else stays in input order.
void keep_best_screen(std::vector<Detection>& detections) {
  std::ptrdiff_t best = -1;
  for (std::size_t i = 0; i < detections.size(); ++i) {
    if (detections[i].cls != ComponentClass::Screen) {
      continue;
    }
    if (best < 0 || detections[i].confidence > detections[static_cast<std::size_t>(best)].confidence) {
      best = static_cast<std::ptrdiff_t>(i);
    }
  }
  if (best < 0) {
    return;
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < detections.size(); ++i) {
    if (detections[i].cls == ComponentClass::Screen && i != static_cast<std::size_t>(best)) {
      continue;
    }
    detections[out++] = detections[i];
  }
  detections.resize(out);
}

}  // namespace

SketchDetections parse_detections(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw ParseError("detection document: top level must be a JSON object");
  }

  SketchDetections result;
  result.image_id = require_string(doc, "image", "detection document");
  result.image_width = require_positive_int(doc, "width", "detection document");
  result.image_height = require_positive_int(doc, "height", "detection document");

  const json& entries = require_key(doc, "detections", "detection document");
  if (!entries.is_array()) {
    throw ParseError("detection document: key \"detections\" must be an array");
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string context = fmt::format("detections[{}]", i);
    const json& entry = entries[i];
    if (!entry.is_object()) {
      throw ParseError(fmt::format("{}: entry must be an object", context));
    }

    Detection det;
    det.cls = require_class(require_string(entry, "class", context), context);
    det.confidence = require_number(entry, "confidence", context);
    if (det.confidence < 0.0 || det.confidence > 1.0) {
      throw ParseError(
          fmt::format("{}: confidence {} is outside [0,1]", context, det.confidence));
    }
    det.box.cx = require_number(entry, "cx", context);
    det.box.cy = require_number(entry, "cy", context);
    det.box.w = require_number(entry, "w", context);
    det.box.h = require_number(entry, "h", context);
    if (det.box.w <= 0.0 || det.box.h <= 0.0) {
      throw ParseError(fmt::format("{}: box size {}x{} is not positive", context, det.box.w,
                                   det.box.h));
    }

    result.detections.push_back(
        clamp_to_image(det, result.image_width, result.image_height, context));
  }

  keep_best_screen(result.detections);
  return result;
}

SketchDetections parse_labelme(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw ParseError("labelme document: top level must be a JSON object");
  }

  SketchDetections result;
  result.image_width = require_positive_int(doc, "imageWidth", "labelme document");
  result.image_height = require_positive_int(doc, "imageHeight", "labelme document");

  const json& shapes = require_key(doc, "shapes", "labelme document");
  if (!shapes.is_array()) {
    throw ParseError("labelme document: key \"shapes\" must be an array");
  }

  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const std::string context = fmt::format("shapes[{}]", i);
    const json& shape = shapes[i];
    if (!shape.is_object()) {
      throw ParseError(fmt::format("{}: shape must be an object", context));
    }

    const std::string shape_type = require_string(shape, "shape_type", context);
    if (shape_type != "rectangle") {
      throw ParseError(
          fmt::format("{}: shape_type \"{}\" is not supported, only \"rectangle\"", context,
                      shape_type));
    }

    Detection det;
    det.cls = require_class(require_string(shape, "label", context), context);
    det.confidence = 1.0;

    const json& points = require_key(shape, "points", context);
    if (!points.is_array() || points.size() != 2 || !points[0].is_array() ||
        !points[1].is_array() || points[0].size() != 2 || points[1].size() != 2 ||
        !points[0][0].is_number() || !points[0][1].is_number() || !points[1][0].is_number() ||
        !points[1][1].is_number()) {
      throw ParseError(
          fmt::format("{}: rectangle points must be two [x,y] pairs", context));
    }

    det.box = BoundingBox::from_corners(points[0][0].get<double>(), points[0][1].get<double>(),
                                        points[1][0].get<double>(), points[1][1].get<double>());
    if (!det.box.valid()) {
      throw ParseError(fmt::format("{}: rectangle has zero area", context));
    }

    result.detections.push_back(
        clamp_to_image(det, result.image_width, result.image_height, context));
  }

  keep_best_screen(result.detections);
  return result;
}

InputSchema detect_schema(const std::string& text) {
  const json doc = parse_json(text);
  if (doc.is_object()) {
    if (doc.contains("detections")) {
      return InputSchema::DetectionDocument;
    }
    if (doc.contains("shapes")) {
      return InputSchema::Labelme;
    }
  }
  throw ParseError(
      "unrecognized document: expected a top-level \"detections\" or \"shapes\" array");
}

SketchDetections parse_any(const std::string& text) {
  switch (detect_schema(text)) {
    case InputSchema::DetectionDocument:
      return parse_detections(text);
    case InputSchema::Labelme:
      return parse_labelme(text);
  }
  throw ParseError("unreachable schema");
}

SketchDetections load_detections_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(fmt::format("{}: cannot open file", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  try {
    SketchDetections result = parse_any(buffer.str());
    if (result.image_id.empty()) {
      result.image_id = path.stem().string();
    }
    return result;
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace aiagen
