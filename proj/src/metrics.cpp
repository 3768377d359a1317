#include "aiagen/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

namespace aiagen {

int darknet_filters(int classes) {
  if (classes < 1) {
    throw std::invalid_argument(fmt::format("darknet_filters: classes must be >= 1, got {}",
                                            classes));
  }
  return (classes + 5) * 3;
}

int darknet_max_batches(int classes) {
  if (classes < 1) {
    throw std::invalid_argument(fmt::format("darknet_max_batches: classes must be >= 1, got {}",
                                            classes));
  }
  return classes * 2000;
}

DarknetConfig DarknetConfig::for_classes(int classes) {
  DarknetConfig config;
  config.classes = classes;
  config.filters = darknet_filters(classes);
  config.max_batches = darknet_max_batches(classes);
  return config;
}

void MatchResult::merge(const MatchResult& other) {
  for (const auto& [cls, entries] : other.per_class) {
    auto& mine = per_class[cls];
    mine.insert(mine.end(), entries.begin(), entries.end());
    std::stable_sort(mine.begin(), mine.end(), [](const RankedDetection& a,
                                                  const RankedDetection& b) {
      return a.confidence > b.confidence;
    });
  }
  for (const auto& [cls, count] : other.ground_truth_counts) {
    ground_truth_counts[cls] += count;
  }
}

int MatchResult::total_ground_truth() const {
  int total = 0;
  for (const auto& [cls, count] : ground_truth_counts) {
    total += count;
  }
  return total;
}

MatchResult match_detections(const SketchDetections& predictions,
                             const SketchDetections& ground_truth,
                             const MatchOptions& options) {
  if (predictions.image_id != ground_truth.image_id) {
    throw std::invalid_argument(fmt::format(
        "match_detections: image ids differ (\"{}\" vs \"{}\")", predictions.image_id,
        ground_truth.image_id));
  }
  if (!(options.iou_threshold > 0.0 && options.iou_threshold < 1.0)) {
    throw std::invalid_argument(fmt::format(
        "match_detections: IoU threshold must be in (0,1), got {}", options.iou_threshold));
  }

  const auto counted = [&](const Detection& det) {
    return options.include_screen || is_widget(det.cls);
  };

  // Rank predictions by confidence descending; ties break on box
  // coordinates, then input order, so matching is input-order invariant.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < predictions.detections.size(); ++i) {
    if (counted(predictions.detections[i])) {
      order.push_back(i);
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Detection& da = predictions.detections[a];
    const Detection& db = predictions.detections[b];
    return std::make_tuple(-da.confidence, da.box.cx, da.box.cy, da.box.w, da.box.h, a) <
           std::make_tuple(-db.confidence, db.box.cx, db.box.cy, db.box.w, db.box.h, b);
  });

  MatchResult result;
  std::vector<bool> gt_matched(ground_truth.detections.size(), false);
  for (std::size_t i = 0; i < ground_truth.detections.size(); ++i) {
    if (counted(ground_truth.detections[i])) {
      result.ground_truth_counts[ground_truth.detections[i].cls] += 1;
    }
  }

  for (std::size_t index : order) {
    const Detection& pred = predictions.detections[index];

    // Best unmatched same-class ground truth by IoU; first one on ties.
    std::ptrdiff_t best = -1;
    double best_iou = 0.0;
    for (std::size_t g = 0; g < ground_truth.detections.size(); ++g) {
      const Detection& gt = ground_truth.detections[g];
      if (gt_matched[g] || gt.cls != pred.cls || !counted(gt)) {
        continue;
      }
      const double value = iou(pred.box, gt.box);
      if (value > best_iou) {
        best_iou = value;
        best = static_cast<std::ptrdiff_t>(g);
      }
    }

    RankedDetection entry;
    entry.confidence = pred.confidence;
    if (best >= 0 && best_iou >= options.iou_threshold) {
      entry.true_positive = true;
      entry.iou = best_iou;
      gt_matched[static_cast<std::size_t>(best)] = true;
    }
    result.per_class[pred.cls].push_back(entry);
  }
  return result;
}

double average_precision(const std::vector<RankedDetection>& ranked, int ground_truth_count,
                         ApInterpolation interpolation) {
  if (ground_truth_count < 1) {
    throw std::invalid_argument("average_precision: class has no ground truths");
  }

  std::vector<RankedDetection> entries = ranked;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RankedDetection& a, const RankedDetection& b) {
                     return a.confidence > b.confidence;
                   });

  std::vector<double> recall(entries.size());
  std::vector<double> precision(entries.size());
  int true_positives = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    true_positives += entries[i].true_positive ? 1 : 0;
    recall[i] = static_cast<double>(true_positives) / ground_truth_count;
    precision[i] = static_cast<double>(true_positives) / static_cast<double>(i + 1);
  }

  if (interpolation == ApInterpolation::ElevenPoint) {
    double sum = 0.0;
    for (int step = 0; step <= 10; ++step) {
      const double target = step / 10.0;
      double best = 0.0;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (recall[i] >= target) {
          best = std::max(best, precision[i]);
        }
      }
      sum += best;
    }
    return sum / 11.0;
  }

  // All-point interpolation: monotone precision envelope from high recall
  // down, integrated over the measured recall steps.
  std::vector<double> envelope(precision);
  for (std::size_t i = envelope.size(); i-- > 1;) {
    envelope[i - 1] = std::max(envelope[i - 1], envelope[i]);
  }
  double area = 0.0;
  double prev_recall = 0.0;
  for (std::size_t i = 0; i < envelope.size(); ++i) {
    area += (recall[i] - prev_recall) * envelope[i];
    prev_recall = recall[i];
  }
  return area;
}

double mean_average_precision(const MatchResult& result, ApInterpolation interpolation) {
  double sum = 0.0;
  int classes = 0;
  for (const auto& [cls, count] : result.ground_truth_counts) {
    if (count < 1) {
      continue;
    }
    const auto it = result.per_class.find(cls);
    static const std::vector<RankedDetection> kEmpty;
    sum += average_precision(it != result.per_class.end() ? it->second : kEmpty, count,
                             interpolation);
    ++classes;
  }
  if (classes == 0) {
    throw std::invalid_argument("mean_average_precision: no class has any ground truth");
  }
  return sum / classes;
}

PrecisionRecallF1 precision_recall_f1(const MatchResult& result, double confidence_threshold) {
  if (confidence_threshold < 0.0 || confidence_threshold > 1.0) {
    throw std::invalid_argument(fmt::format(
        "precision_recall_f1: confidence threshold must be in [0,1], got {}",
        confidence_threshold));
  }
  int true_positives = 0;
  int predictions = 0;
  for (const auto& [cls, entries] : result.per_class) {
    for (const RankedDetection& entry : entries) {
      if (entry.confidence < confidence_threshold) {
        continue;
      }
      ++predictions;
      true_positives += entry.true_positive ? 1 : 0;
    }
  }
  const int total_gt = result.total_ground_truth();

  PrecisionRecallF1 out;
  out.precision =
      predictions > 0 ? static_cast<double>(true_positives) / predictions : 1.0;
  out.recall = total_gt > 0 ? static_cast<double>(true_positives) / total_gt : 1.0;
  out.f1 = (out.precision + out.recall) > 0.0
               ? 2.0 * out.precision * out.recall / (out.precision + out.recall)
               : 0.0;
  return out;
}

EvalReport EvalReport::from_matches(const MatchResult& result, const MatchOptions& match_options,
                                    double confidence_threshold,
                                    ApInterpolation interpolation) {
  EvalReport report;
  report.confidence_threshold = confidence_threshold;
  report.iou_threshold = match_options.iou_threshold;

  for (const auto& [cls, count] : result.ground_truth_counts) {
    if (count < 1) {
      continue;
    }
    const auto it = result.per_class.find(cls);
    static const std::vector<RankedDetection> kEmpty;
    report.per_class_ap[cls] = average_precision(
        it != result.per_class.end() ? it->second : kEmpty, count, interpolation);
  }
  report.map = mean_average_precision(result, interpolation);

  const PrecisionRecallF1 prf = precision_recall_f1(result, confidence_threshold);
  report.precision = prf.precision;
  report.recall = prf.recall;
  report.f1 = prf.f1;

  double iou_sum = 0.0;
  int matched = 0;
  for (const auto& [cls, entries] : result.per_class) {
    for (const RankedDetection& entry : entries) {
      if (entry.true_positive) {
        iou_sum += entry.iou;
        ++matched;
      }
    }
  }
  report.mean_iou = matched > 0 ? iou_sum / matched : 0.0;
  return report;
}

std::string EvalReport::to_text() const {
  std::string out;
  out += fmt::format("{:<12} {:>8}\n", "class", "AP");
  for (const auto& [cls, ap] : per_class_ap) {
    out += fmt::format("{:<12} {:>8.4f}\n", to_string(cls), ap);
  }
  out += fmt::format("{:<12} {:>8.4f}\n", "mAP", map);
  out += fmt::format("{:<12} {:>8.4f} (confidence >= {:g})\n", "precision", precision,
                     confidence_threshold);
  out += fmt::format("{:<12} {:>8.4f} (confidence >= {:g})\n", "recall", recall,
                     confidence_threshold);
  out += fmt::format("{:<12} {:>8.4f} (confidence >= {:g})\n", "F1", f1, confidence_threshold);
  out += fmt::format("{:<12} {:>8.4f} (matches at IoU >= {:g})\n", "mean IoU", mean_iou,
                     iou_threshold);
  return out;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json per_class = nlohmann::ordered_json::object();
  for (const auto& [cls, ap] : per_class_ap) {
    per_class[std::string(to_string(cls))] = ap;
  }
  j["per_class_ap"] = std::move(per_class);
  j["mAP"] = map;
  j["precision"] = precision;
  j["recall"] = recall;
  j["f1"] = f1;
  j["mean_iou"] = mean_iou;
  j["confidence_threshold"] = confidence_threshold;
  j["iou_threshold"] = iou_threshold;
  return j.dump(2) + "\n";
}

}  // namespace aiagen
