// Independent oracles used by the tests. These deliberately avoid the
// library's computation paths: IoU is counted on a discretized grid and AP
// is enumerated point-by-point with full rescans.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "aiagen/geometry.hpp"

namespace aiagen::testing {

// IoU measured by counting unit cells whose centers land inside each box
// after scaling everything by `scale`.
inline double grid_iou(const BoundingBox& a, const BoundingBox& b, int scale = 100) {
  const double al = a.left() * scale, ar = a.right() * scale;
  const double at = a.top() * scale, ab = a.bottom() * scale;
  const double bl = b.left() * scale, br = b.right() * scale;
  const double bt = b.top() * scale, bb = b.bottom() * scale;

  const long lo_x = static_cast<long>(std::floor(std::min(al, bl)));
  const long hi_x = static_cast<long>(std::ceil(std::max(ar, br)));
  const long lo_y = static_cast<long>(std::floor(std::min(at, bt)));
  const long hi_y = static_cast<long>(std::ceil(std::max(ab, bb)));

  long long intersection = 0;
  long long union_cells = 0;
  for (long x = lo_x; x < hi_x; ++x) {
    for (long y = lo_y; y < hi_y; ++y) {
      const double px = x + 0.5;
      const double py = y + 0.5;
      const bool in_a = px > al && px < ar && py > at && py < ab;
      const bool in_b = px > bl && px < br && py > bt && py < bb;
      intersection += (in_a && in_b) ? 1 : 0;
      union_cells += (in_a || in_b) ? 1 : 0;
    }
  }
  return union_cells > 0 ? static_cast<double>(intersection) / union_cells : 0.0;
}

// Point-by-point PR-curve enumeration: for every recall level reached, the
// best precision at or beyond it is found by scanning the whole ranked
// list again, and rectangles are accumulated between consecutive levels.
inline double brute_force_ap(const std::vector<bool>& ranked_true_positive, int ground_truths) {
  const std::size_t n = ranked_true_positive.size();
  std::vector<double> recall(n);
  std::vector<double> precision(n);
  int tp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tp += ranked_true_positive[i] ? 1 : 0;
    recall[i] = static_cast<double>(tp) / ground_truths;
    precision[i] = static_cast<double>(tp) / static_cast<double>(i + 1);
  }

  double area = 0.0;
  double prev_recall = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (recall[i] <= prev_recall) {
      continue;
    }
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (recall[j] >= recall[i]) {
        best = std::max(best, precision[j]);
      }
    }
    area += (recall[i] - prev_recall) * best;
    prev_recall = recall[i];
  }
  return area;
}

}  // namespace aiagen::testing
