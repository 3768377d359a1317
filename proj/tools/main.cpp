#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "aiagen/codegen.hpp"
#include "aiagen/dedup.hpp"
#include "aiagen/format_tables.hpp"
#include "aiagen/layout.hpp"
#include "aiagen/metrics.hpp"
#include "aiagen/parse.hpp"
#include "aiagen/preview.hpp"

namespace fs = std::filesystem;
using namespace aiagen;

namespace {

// Exit codes: 0 success, 2 usage error, 3 input parse/validation error,
// 4 output write error.
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitWrite = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw WriteError(fmt::format("cannot open {} for writing", tmp.string()));
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      throw WriteError(fmt::format("failed writing {}", tmp.string()));
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    throw WriteError(fmt::format("cannot move {} into place: {}", path.string(), ec.message()));
  }
}

struct CommonOptions {
  std::string format_tables_path;
  double align_tolerance = 0.0;

  FormatTables tables() const {
    if (format_tables_path.empty()) {
      return FormatTables::builtin();
    }
    try {
      return FormatTables::load_file(format_tables_path);
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
};

struct ConvertOptions {
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> screen_names;
  GenerationOptions generation;
  bool dump_layout = false;
};

struct EvaluateOptions {
  std::vector<std::string> predictions;
  std::vector<std::string> ground_truths;
  std::string output_base = "eval_report";
  MatchOptions match;
  double conf_threshold = 0.25;
  ApInterpolation interpolation = ApInterpolation::AllPoint;
};

struct PreviewOptions {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  bool dump_layout = false;
};

int run_convert(const ConvertOptions& opt, const CommonOptions& common) {
  if (opt.inputs.empty()) {
    throw UsageError("convert: no input files given");
  }
  if (opt.inputs.size() > kMaxScreens) {
    throw UsageError(fmt::format(
        "convert: {} inputs given, but a project can hold at most {} screens",
        opt.inputs.size(), kMaxScreens));
  }

  GenerationOptions gen = opt.generation;
  if (!is_valid_identifier(gen.project_name)) {
    throw UsageError(fmt::format(
        "convert: project name \"{}\" must match [A-Za-z][A-Za-z0-9_]*", gen.project_name));
  }

  std::vector<std::string> names = opt.screen_names;
  if (names.empty()) {
    for (std::size_t i = 0; i < opt.inputs.size(); ++i) {
      names.push_back(fmt::format("Screen{}", i + 1));
    }
  }
  if (names.size() != opt.inputs.size()) {
    throw UsageError(fmt::format("convert: {} screen names for {} inputs", names.size(),
                                 opt.inputs.size()));
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_valid_identifier(names[i])) {
      throw UsageError(fmt::format("convert: invalid screen name \"{}\"", names[i]));
    }
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) {
        throw UsageError(fmt::format("convert: duplicate screen name \"{}\"", names[i]));
      }
    }
  }
  if (gen.main_screen.empty()) {
    gen.main_screen = names.front();
  }
  if (std::find(names.begin(), names.end(), gen.main_screen) == names.end()) {
    throw UsageError(fmt::format("convert: main screen \"{}\" is not among the screen names",
                                 gen.main_screen));
  }

  const FormatTables tables = common.tables();

  AiaProject project;
  project.options = gen;
  for (std::size_t i = 0; i < opt.inputs.size(); ++i) {
    const SketchDetections parsed = load_detections_file(opt.inputs[i]);
    const SketchDetections deduped = eliminate_overlaps(parsed);
    project.screens.emplace_back(names[i],
                                 build_screen_layout(deduped, common.align_tolerance));
  }

  const fs::path output =
      opt.output.empty() ? fs::path(gen.project_name + ".aia") : fs::path(opt.output);
  const std::vector<std::uint8_t> archive = package_aia(project, tables);
  write_file_atomic(output,
                    std::string_view(reinterpret_cast<const char*>(archive.data()),
                                     archive.size()));
  std::cout << fmt::format("wrote {} ({} screens)\n", output.string(), project.screens.size());

  if (opt.dump_layout) {
    const fs::path dir = output.has_parent_path() ? output.parent_path() : fs::path(".");
    for (const auto& [screen_name, layout] : project.screens) {
      write_file_atomic(dir / fmt::format("{}.layout.txt", screen_name), dump_layout(layout));
    }
  }
  return 0;
}

int run_evaluate(const EvaluateOptions& opt) {
  if (opt.predictions.empty() || opt.ground_truths.empty()) {
    throw UsageError("evaluate: need at least one prediction file and one --gt file");
  }

  std::map<std::string, SketchDetections> preds;
  for (const std::string& path : opt.predictions) {
    SketchDetections parsed = load_detections_file(path);
    if (!preds.emplace(parsed.image_id, parsed).second) {
      throw ParseError(fmt::format("duplicate prediction image id \"{}\" ({})",
                                   parsed.image_id, path));
    }
  }
  std::map<std::string, SketchDetections> gts;
  for (const std::string& path : opt.ground_truths) {
    SketchDetections parsed = load_detections_file(path);
    if (!gts.emplace(parsed.image_id, parsed).second) {
      throw ParseError(fmt::format("duplicate ground-truth image id \"{}\" ({})",
                                   parsed.image_id, path));
    }
  }

  std::vector<std::string> orphans;
  for (const auto& [id, unused] : preds) {
    if (!gts.count(id)) {
      orphans.push_back(fmt::format("prediction \"{}\" has no ground truth", id));
    }
  }
  for (const auto& [id, unused] : gts) {
    if (!preds.count(id)) {
      orphans.push_back(fmt::format("ground truth \"{}\" has no prediction", id));
    }
  }
  if (!orphans.empty()) {
    std::string message = "unmatched image ids:";
    for (const std::string& line : orphans) {
      message += "\n  " + line;
    }
    throw ParseError(message);
  }

  MatchResult pooled;
  for (const auto& [id, pred] : preds) {
    pooled.merge(match_detections(pred, gts.at(id), opt.match));
  }

  const EvalReport report =
      EvalReport::from_matches(pooled, opt.match, opt.conf_threshold, opt.interpolation);
  const std::string text = report.to_text();
  std::cout << text;
  write_file_atomic(opt.output_base + ".txt", text);
  write_file_atomic(opt.output_base + ".json", report.to_json());
  return 0;
}

// Image ids become file names; keep them free of path separators.
std::string sanitize_for_filename(const std::string& id) {
  std::string out = id.empty() ? "preview" : id;
  for (char& c : out) {
    if (c == '/' || c == '\\') {
      c = '_';
    }
  }
  return out;
}

int run_preview(const PreviewOptions& opt, const CommonOptions& common) {
  if (opt.inputs.empty()) {
    throw UsageError("preview: no input files given");
  }
  const fs::path dir(opt.out_dir);
  for (const std::string& input : opt.inputs) {
    const SketchDetections parsed = load_detections_file(input);
    const ScreenLayout layout =
        build_screen_layout(eliminate_overlaps(parsed), common.align_tolerance);
    const std::string stem = sanitize_for_filename(parsed.image_id);
    write_file_atomic(dir / fmt::format("{}.detections.svg", stem),
                      render_detections_svg(parsed));
    write_file_atomic(dir / fmt::format("{}.wireframe.svg", stem),
                      render_wireframe_svg(layout));
    if (opt.dump_layout) {
      write_file_atomic(dir / fmt::format("{}.layout.txt", stem), dump_layout(layout));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile UI-component detections into an importable App Inventor project"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file (flags take precedence)");

  CommonOptions common;
  app.add_option("--format-tables", common.format_tables_path,
                 "Alternate pinned-format table file (JSON)");
  app.add_option("--align-tolerance", common.align_tolerance,
                 "Projection overlap in pixels required before two boxes count as aligned")
      ->check(CLI::NonNegativeNumber);

  const std::map<std::string, ListStyle> list_styles{{"listpicker", ListStyle::ListPicker},
                                                     {"spinner", ListStyle::Spinner}};
  const std::map<std::string, ApInterpolation> interpolations{
      {"allpoint", ApInterpolation::AllPoint}, {"elevenpoint", ApInterpolation::ElevenPoint}};

  ConvertOptions convert;
  convert.generation.project_name = "SketchApp";
  CLI::App* cmd_convert =
      app.add_subcommand("convert", "Build an .aia archive from detection/annotation files");
  cmd_convert->add_option("inputs", convert.inputs, "Input documents, one per screen (max 6)")
      ->required();
  cmd_convert->add_option("--name", convert.generation.project_name, "Project name");
  cmd_convert->add_option("--main-screen", convert.generation.main_screen,
                          "Main screen name (default: first screen)");
  cmd_convert->add_option("--screen-names", convert.screen_names,
                          "Screen names in input order (default: Screen1..ScreenN)")
      ->delimiter(',');
  cmd_convert
      ->add_option("--list-style", convert.generation.list_style,
                   "Component emitted for ListPicker detections")
      ->transform(CLI::CheckedTransformer(list_styles, CLI::ignore_case));
  cmd_convert->add_option("--author", convert.generation.author_slug,
                          "Author slug used in project paths");
  cmd_convert->add_flag("--deterministic", convert.generation.deterministic_uuids,
                        "Seeded component Uuids for reproducible archives");
  cmd_convert->add_option("--seed", convert.generation.uuid_seed,
                          "Uuid seed for --deterministic");
  cmd_convert
      ->add_option("--fill-threshold", convert.generation.fill_parent_threshold,
                   "Screen-width fraction beyond which a widget fills the parent")
      ->check(CLI::Range(0.0, 1.0));
  cmd_convert->add_flag("--dump-layout", convert.dump_layout,
                        "Also write a layout outline per screen");
  cmd_convert->add_option("-o,--output", convert.output, "Output .aia path");

  EvaluateOptions evaluate;
  CLI::App* cmd_evaluate =
      app.add_subcommand("evaluate", "Score detections against ground-truth annotations");
  cmd_evaluate->add_option("predictions", evaluate.predictions, "Prediction documents")
      ->required();
  cmd_evaluate->add_option("--gt", evaluate.ground_truths, "Ground-truth documents")
      ->required();
  cmd_evaluate
      ->add_option("--iou-threshold", evaluate.match.iou_threshold,
                   "IoU needed for a match (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  cmd_evaluate
      ->add_option("--conf-threshold", evaluate.conf_threshold,
                   "Confidence cutoff for precision/recall/F1 (default 0.25)")
      ->check(CLI::Range(0.0, 1.0));
  cmd_evaluate
      ->add_option("--interpolation", evaluate.interpolation,
                   "AP interpolation variant (default allpoint)")
      ->transform(CLI::CheckedTransformer(interpolations, CLI::ignore_case));
  cmd_evaluate->add_flag("--include-screen", evaluate.match.include_screen,
                         "Also evaluate the Screen class");
  cmd_evaluate->add_option("-o,--output", evaluate.output_base,
                           "Report base path; writes <base>.txt and <base>.json");

  PreviewOptions preview;
  CLI::App* cmd_preview =
      app.add_subcommand("preview", "Render detection and wireframe SVGs per input");
  cmd_preview->add_option("inputs", preview.inputs, "Input documents")->required();
  cmd_preview->add_option("-o,--output", preview.out_dir, "Output directory (default .)");
  cmd_preview->add_flag("--dump-layout", preview.dump_layout,
                        "Also write a layout outline per input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_convert->parsed()) {
      return run_convert(convert, common);
    }
    if (cmd_evaluate->parsed()) {
      return run_evaluate(evaluate);
    }
    if (cmd_preview->parsed()) {
      return run_preview(preview, common);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWrite;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
