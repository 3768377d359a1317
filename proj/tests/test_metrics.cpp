#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "aiagen/metrics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace aiagen;

namespace {

Detection det(ComponentClass cls, double conf, BoundingBox box) {
  return Detection{cls, conf, box};
}

SketchDetections image(std::string id, std::vector<Detection> dets) {
  SketchDetections s;
  s.image_id = std::move(id);
  s.image_width = 720;
  s.image_height = 1280;
  s.detections = std::move(dets);
  return s;
}

std::vector<RankedDetection> ranked(std::initializer_list<bool> flags) {
  std::vector<RankedDetection> out;
  double conf = 1.0;
  for (bool tp : flags) {
    out.push_back(RankedDetection{conf, tp, tp ? 1.0 : 0.0});
    conf -= 0.05;
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("darknet config formulas") {
  CHECK(darknet_filters(10) == 45);
  CHECK(darknet_filters(1) == 18);
  CHECK_THROWS_AS(darknet_filters(0), std::invalid_argument);

  CHECK(darknet_max_batches(10) == 20000);
  CHECK(darknet_max_batches(1) == 2000);
  CHECK_THROWS_AS(darknet_max_batches(-3), std::invalid_argument);

  const DarknetConfig config = DarknetConfig::for_classes(10);
  CHECK(config.filters == 45);
  CHECK(config.max_batches == 20000);
  CHECK(config.batch_size == 64);
}

TEST_CASE("identical predictions match perfectly") {
  const auto gt = image("img", {det(ComponentClass::Button, 1.0, {100.0, 100.0, 50.0, 20.0}),
                                det(ComponentClass::Label, 1.0, {100.0, 200.0, 80.0, 20.0})});
  const MatchResult result = match_detections(gt, gt);
  CHECK(result.total_ground_truth() == 2);
  for (const auto& [cls, entries] : result.per_class) {
    for (const auto& entry : entries) {
      CHECK(entry.true_positive);
      CHECK(entry.iou == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("a shifted box below the IoU threshold is a false positive") {
  const auto gt = image("img", {det(ComponentClass::Button, 1.0, {1.0, 1.0, 2.0, 2.0})});
  const auto pred = image("img", {det(ComponentClass::Button, 0.9, {2.0, 1.0, 2.0, 2.0})});
  const MatchResult result = match_detections(pred, gt);  // IoU = 1/3 < 0.5
  REQUIRE(result.per_class.count(ComponentClass::Button) == 1);
  const auto& entries = result.per_class.at(ComponentClass::Button);
  REQUIRE(entries.size() == 1);
  CHECK_FALSE(entries[0].true_positive);
  CHECK(result.ground_truth_counts.at(ComponentClass::Button) == 1);  // 1 FN implied
}

TEST_CASE("each ground truth matches at most once") {
  const auto gt = image("img", {det(ComponentClass::Button, 1.0, {1.0, 1.0, 2.0, 2.0})});
  const auto preds = image("img", {det(ComponentClass::Button, 0.8, {1.2, 1.0, 2.0, 2.0}),
                                   det(ComponentClass::Button, 0.9, {1.0, 1.0, 2.0, 2.0})});
  const MatchResult result = match_detections(preds, gt);
  const auto& entries = result.per_class.at(ComponentClass::Button);
  REQUIRE(entries.size() == 2);
  // Ranked by confidence: the 0.9 wins the ground truth, the 0.8 is a FP.
  CHECK(entries[0].confidence == doctest::Approx(0.9));
  CHECK(entries[0].true_positive);
  CHECK_FALSE(entries[1].true_positive);
}

TEST_CASE("mismatched image ids are rejected") {
  const auto a = image("a", {});
  const auto b = image("b", {});
  CHECK_THROWS_AS(match_detections(a, b), std::invalid_argument);
}

TEST_CASE("matching ignores prediction input order") {
  testing::Rng rng(31);
  for (int round = 0; round < 30; ++round) {
    auto gt = testing::random_sketch(rng, 6, false);
    gt.image_id = "img";
    auto pred = testing::random_sketch(rng, 8, false);
    pred.image_id = "img";

    const MatchResult base = match_detections(pred, gt);
    std::shuffle(pred.detections.begin(), pred.detections.end(), rng.engine());
    const MatchResult shuffled = match_detections(pred, gt);

    for (const auto& [cls, entries] : base.per_class) {
      REQUIRE(shuffled.per_class.count(cls) == 1);
      const auto& other = shuffled.per_class.at(cls);
      REQUIRE(other.size() == entries.size());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].confidence == doctest::Approx(other[i].confidence));
        CHECK(entries[i].true_positive == other[i].true_positive);
      }
    }
  }
}

TEST_CASE("Screen is excluded from evaluation unless requested") {
  const auto gt = image("img", {det(ComponentClass::Screen, 1.0, {360.0, 640.0, 700.0, 1200.0}),
                                det(ComponentClass::Button, 1.0, {100.0, 100.0, 50.0, 20.0})});
  const MatchResult excluded = match_detections(gt, gt);
  CHECK(excluded.ground_truth_counts.count(ComponentClass::Screen) == 0);
  CHECK(excluded.total_ground_truth() == 1);

  MatchOptions options;
  options.include_screen = true;
  const MatchResult included = match_detections(gt, gt, options);
  CHECK(included.ground_truth_counts.at(ComponentClass::Screen) == 1);
}

TEST_CASE("average precision fixtures") {
  CHECK(average_precision(ranked({true, true}), 2) == doctest::Approx(1.0));
  CHECK(std::abs(average_precision(ranked({true, false, true}), 2) - 5.0 / 6.0) <= 1e-12);
  CHECK(average_precision(ranked({false}), 1) == doctest::Approx(0.0));
  CHECK(average_precision({}, 3) == doctest::Approx(0.0));
  CHECK_THROWS_AS(average_precision(ranked({true}), 0), std::invalid_argument);
}

TEST_CASE("eleven-point interpolation variant") {
  const double ap = average_precision(ranked({true, false, true}), 2,
                                      ApInterpolation::ElevenPoint);
  // Recall levels 0..0.5 see precision 1.0, 0.6..1.0 see 2/3.
  CHECK(ap == doctest::Approx(28.0 / 33.0).epsilon(1e-12));
}

TEST_CASE("average precision equals the brute-force enumerator on random lists") {
  testing::Rng rng(55);
  for (int round = 0; round < 100; ++round) {
    const int ground_truths = rng.uniform_int(1, 5);
    const int n = rng.uniform_int(0, 10);
    std::vector<RankedDetection> list;
    std::vector<bool> flags;
    int tp_left = ground_truths;
    double conf = 1.0;
    for (int i = 0; i < n; ++i) {
      const bool tp = tp_left > 0 && rng.chance(0.5);
      tp_left -= tp ? 1 : 0;
      list.push_back(RankedDetection{conf, tp, tp ? 1.0 : 0.0});
      flags.push_back(tp);
      conf -= rng.uniform(0.0, 0.08);
    }
    const double expected = testing::brute_force_ap(flags, ground_truths);
    CHECK(std::abs(average_precision(list, ground_truths) - expected) <= 1e-9);
  }
}

TEST_CASE("mAP is the mean over classes with ground truth") {
  MatchResult result;
  result.ground_truth_counts[ComponentClass::Button] = 2;
  result.per_class[ComponentClass::Button] = ranked({true, true});
  result.ground_truth_counts[ComponentClass::Label] = 1;
  result.per_class[ComponentClass::Label] = ranked({false});
  CHECK(mean_average_precision(result) == doctest::Approx(0.5));

  MatchResult single;
  single.ground_truth_counts[ComponentClass::Button] = 2;
  single.per_class[ComponentClass::Button] = ranked({true, false, true});
  CHECK(mean_average_precision(single) == doctest::Approx(5.0 / 6.0));

  MatchResult empty;
  CHECK_THROWS_AS(mean_average_precision(empty), std::invalid_argument);
}

TEST_CASE("pooling across images matches the per-class oracle") {
  // Three hand-built images merged into one pooled result.
  const auto gt1 = image("one", {det(ComponentClass::Button, 1.0, {100.0, 100.0, 50.0, 20.0}),
                                 det(ComponentClass::Label, 1.0, {100.0, 300.0, 80.0, 20.0})});
  const auto pred1 = image("one", {det(ComponentClass::Button, 0.9, {100.0, 100.0, 50.0, 20.0}),
                                   det(ComponentClass::Label, 0.4, {300.0, 300.0, 80.0, 20.0})});
  const auto gt2 = image("two", {det(ComponentClass::Button, 1.0, {200.0, 200.0, 60.0, 30.0})});
  const auto pred2 = image("two", {det(ComponentClass::Button, 0.7, {204.0, 200.0, 60.0, 30.0}),
                                   det(ComponentClass::Button, 0.6, {500.0, 500.0, 60.0, 30.0})});
  const auto gt3 = image("three", {det(ComponentClass::Label, 1.0, {100.0, 100.0, 80.0, 20.0})});
  const auto pred3 = image("three", {det(ComponentClass::Label, 0.8, {102.0, 100.0, 80.0, 20.0})});

  MatchResult pooled;
  pooled.merge(match_detections(pred1, gt1));
  pooled.merge(match_detections(pred2, gt2));
  pooled.merge(match_detections(pred3, gt3));

  double expected_sum = 0.0;
  int classes = 0;
  for (const auto& [cls, count] : pooled.ground_truth_counts) {
    std::vector<bool> flags;
    for (const auto& entry : pooled.per_class.at(cls)) {
      flags.push_back(entry.true_positive);
    }
    expected_sum += testing::brute_force_ap(flags, count);
    ++classes;
  }
  REQUIRE(classes == 2);
  CHECK(std::abs(mean_average_precision(pooled) - expected_sum / classes) <= 1e-9);
}

TEST_CASE("precision, recall and F1") {
  MatchResult perfect;
  perfect.ground_truth_counts[ComponentClass::Button] = 2;
  perfect.per_class[ComponentClass::Button] = ranked({true, true});
  const auto prf = precision_recall_f1(perfect);
  CHECK(prf.precision == doctest::Approx(1.0));
  CHECK(prf.recall == doctest::Approx(1.0));
  CHECK(prf.f1 == doctest::Approx(1.0));

  // Four of five predictions correct over four ground truths.
  MatchResult mixed;
  mixed.ground_truth_counts[ComponentClass::Button] = 4;
  mixed.per_class[ComponentClass::Button] = ranked({true, true, true, true, false});
  const auto prf2 = precision_recall_f1(mixed);
  CHECK(prf2.precision == doctest::Approx(0.8));
  CHECK(prf2.recall == doctest::Approx(1.0));
  CHECK(prf2.f1 == doctest::Approx(8.0 / 9.0));

  // Nothing above threshold: vacuous precision, zero recall and F1.
  MatchResult quiet;
  quiet.ground_truth_counts[ComponentClass::Button] = 3;
  quiet.per_class[ComponentClass::Button] = {RankedDetection{0.1, true, 0.9}};
  const auto prf3 = precision_recall_f1(quiet, 0.25);
  CHECK(prf3.precision == doctest::Approx(1.0));
  CHECK(prf3.recall == doctest::Approx(0.0));
  CHECK(prf3.f1 == doctest::Approx(0.0));
}

TEST_CASE("F1 bounds on random results") {
  testing::Rng rng(66);
  for (int round = 0; round < 200; ++round) {
    MatchResult result;
    const int gt_count = rng.uniform_int(1, 10);
    result.ground_truth_counts[ComponentClass::Button] = gt_count;
    const int n = rng.uniform_int(0, 12);
    int tp_left = gt_count;
    auto& list = result.per_class[ComponentClass::Button];
    for (int i = 0; i < n; ++i) {
      const bool tp = tp_left > 0 && rng.chance(0.5);
      tp_left -= tp ? 1 : 0;
      list.push_back(RankedDetection{rng.uniform(0.0, 1.0), tp, tp ? 1.0 : 0.0});
    }
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return a.confidence > b.confidence;
    });
    const auto prf = precision_recall_f1(result, rng.uniform(0.0, 1.0));
    CHECK(prf.f1 >= 0.0);
    CHECK(prf.f1 <= 2.0 * std::min(prf.precision, prf.recall) + 1e-12);
  }
}

TEST_CASE("evaluation report is internally consistent") {
  const auto gt = image("img", {det(ComponentClass::Button, 1.0, {100.0, 100.0, 50.0, 20.0}),
                                det(ComponentClass::Label, 1.0, {100.0, 300.0, 80.0, 20.0})});
  const MatchResult result = match_detections(gt, gt);
  const EvalReport report = EvalReport::from_matches(result, MatchOptions{});

  double sum = 0.0;
  for (const auto& [cls, ap] : report.per_class_ap) {
    sum += ap;
  }
  CHECK(report.map == doctest::Approx(sum / report.per_class_ap.size()));
  CHECK(report.map == doctest::Approx(1.0));
  CHECK(report.f1 == doctest::Approx(1.0));
  CHECK(report.mean_iou == doctest::Approx(1.0));

  const std::string text = report.to_text();
  CHECK(text.find("mAP") != std::string::npos);
  CHECK(text.find("Button") != std::string::npos);
  const std::string json = report.to_json();
  CHECK(json.find("\"mAP\"") != std::string::npos);
}

TEST_SUITE_END();
