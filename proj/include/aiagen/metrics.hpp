#pragma once

#include <map>
#include <string>
#include <vector>

#include "aiagen/detection.hpp"

namespace aiagen {

// Darknet layer sizing for a class count: filters = (classes + 5) * 3.
// Throws std::invalid_argument for classes < 1.
int darknet_filters(int classes);

// Training length for a class count: max_batches = classes * 2000.
// Throws std::invalid_argument for classes < 1.
int darknet_max_batches(int classes);

struct DarknetConfig {
  int classes = 0;
  int filters = 0;
  int max_batches = 0;
  int batch_size = 64;

  static DarknetConfig for_classes(int classes);
};

// One ranked prediction after matching: confidence, whether it matched a
// ground truth at the IoU threshold, and the matched IoU (0 for a false
// positive).
struct RankedDetection {
  double confidence = 0.0;
  bool true_positive = false;
  double iou = 0.0;
};

struct MatchOptions {
  double iou_threshold = 0.5;  // must be in (0,1)
  bool include_screen = false;
};

// Matching outcome, pooled per class. Lists are ordered by confidence
// descending; false negatives are implied by ground_truth_counts.
struct MatchResult {
  std::map<ComponentClass, std::vector<RankedDetection>> per_class;
  std::map<ComponentClass, int> ground_truth_counts;

  // Pools another image's result into this one, keeping per-class lists
  // sorted by confidence descending.
  void merge(const MatchResult& other);

  int total_ground_truth() const;
};

// Greedy matching in descending prediction confidence (ties: box
// coordinates lexicographically, then input order): each prediction takes
// the unmatched same-class ground truth with the highest IoU when that IoU
// reaches the threshold, otherwise counts as a false positive. Ground
// truths match at most once. Screen is excluded unless
// options.include_screen. Throws std::invalid_argument on mismatched image
// ids or a threshold outside (0,1).
MatchResult match_detections(const SketchDetections& predictions,
                             const SketchDetections& ground_truth,
                             const MatchOptions& options = {});

enum class ApInterpolation { AllPoint, ElevenPoint };

// Area under the interpolated precision/recall curve for one class's
// ranked list. Throws std::invalid_argument when ground_truth_count < 1.
double average_precision(const std::vector<RankedDetection>& ranked, int ground_truth_count,
                         ApInterpolation interpolation = ApInterpolation::AllPoint);

// Arithmetic mean of per-class APs over classes with at least one ground
// truth. Throws std::invalid_argument when no class has any ground truth.
double mean_average_precision(const MatchResult& result,
                              ApInterpolation interpolation = ApInterpolation::AllPoint);

struct PrecisionRecallF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Counts TP/FP among predictions with confidence >= threshold, pooled over
// classes. Precision is 1.0 when nothing is predicted; F1 is 0 when
// precision + recall is 0.
PrecisionRecallF1 precision_recall_f1(const MatchResult& result,
                                      double confidence_threshold = 0.25);

struct EvalReport {
  std::map<ComponentClass, double> per_class_ap;  // classes with >= 1 ground truth
  double map = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double mean_iou = 0.0;  // over matched pairs; 0 when nothing matched
  double confidence_threshold = 0.25;
  double iou_threshold = 0.5;

  static EvalReport from_matches(const MatchResult& result, const MatchOptions& match_options,
                                 double confidence_threshold = 0.25,
                                 ApInterpolation interpolation = ApInterpolation::AllPoint);

  // Line-oriented per-class table plus the summary figures.
  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace aiagen
