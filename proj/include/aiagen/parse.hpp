#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "aiagen/detection.hpp"

namespace aiagen {

// Malformed or invalid input document. Messages carry the offending file,
// field, or value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InputSchema { DetectionDocument, Labelme };

// Detection document: {"image": str, "width": int, "height": int,
// "detections": [{"class", "confidence", "cx", "cy", "w", "h"}, ...]}.
// Boxes are clamped to the image rectangle; when several Screen entries
// exist only the highest-confidence one (first on ties) is kept.
SketchDetections parse_detections(const std::string& text);

// labelme annotation document. Reads imageWidth, imageHeight and rectangle
// shapes; every shape becomes a Detection with confidence 1.0. All other
// keys are ignored.
SketchDetections parse_labelme(const std::string& text);

// Keyed on the presence of a top-level "detections" vs "shapes" array.
InputSchema detect_schema(const std::string& text);

SketchDetections parse_any(const std::string& text);

// Reads the file and parses with schema auto-detection. Errors mention the
// path; an empty image_id (labelme) defaults to the file stem.
SketchDetections load_detections_file(const std::filesystem::path& path);

}  // namespace aiagen
