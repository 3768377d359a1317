#pragma once

#include "aiagen/detection.hpp"

namespace aiagen {

// Intersection area divided by the smaller of the two box areas, in [0,1].
// Symmetric; 1.0 when one box contains the other.
double overlap_fraction(const Detection& a, const Detection& b);

// Removes overlapping widget detections: candidates are visited in
// descending confidence (ties: larger area, then input order) and accepted
// iff their overlap_fraction against every already-accepted widget is
// <= 0.5. Screen detections are exempt. Survivors keep their input order
// and are never modified.
SketchDetections eliminate_overlaps(const SketchDetections& input);

}  // namespace aiagen
