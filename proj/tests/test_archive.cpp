#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "aiagen/codegen.hpp"
#include "aiagen/zip_writer.hpp"
#include "support/testutil.hpp"
#include "support/zip_reader.hpp"

using namespace aiagen;

namespace {

ScreenLayout one_button_layout(double cy = 200.0) {
  ScreenLayout layout;
  layout.screen_box = {360.0, 640.0, 720.0, 1280.0};
  layout.root = LayoutNode::make_arrangement(
      Orientation::Vertical,
      {LayoutNode::make_leaf(
          Detection{ComponentClass::Button, 0.9, BoundingBox{360.0, cy, 200.0, 60.0}})});
  return layout;
}

AiaProject project_with_screens(std::size_t count, const std::string& name = "Test") {
  AiaProject project;
  project.options.project_name = name;
  project.options.main_screen = "Screen1";
  project.options.deterministic_uuids = true;
  project.options.uuid_seed = 11;
  for (std::size_t i = 0; i < count; ++i) {
    project.screens.emplace_back("Screen" + std::to_string(i + 1),
                                 one_button_layout(150.0 + 100.0 * i));
  }
  return project;
}

}  // namespace

TEST_SUITE_BEGIN("archive");

TEST_CASE("zip writer round-trips through the independent reader") {
  ZipWriter writer;
  writer.add_file("dir/a.txt", "hello");
  writer.add_file("b.bin", std::string("\x00\x01\x02", 3));
  const auto bytes = writer.finish();

  const auto entries = testing::read_zip(bytes);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "dir/a.txt");
  CHECK(entries[0].content == "hello");
  CHECK(entries[1].name == "b.bin");
  CHECK(entries[1].content == std::string("\x00\x01\x02", 3));
}

TEST_CASE("single-screen archive has exactly the three expected entries") {
  const auto bytes = package_aia(project_with_screens(1), FormatTables::builtin());
  const auto entries = testing::read_zip(bytes);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "youngandroidproject/project.properties");
  CHECK(entries[1].name == "src/appinventor/ai_anonymous/Test/Screen1.scm");
  CHECK(entries[2].name == "src/appinventor/ai_anonymous/Test/Screen1.bky");
}

TEST_CASE("archives hold 1 + 2N entries for N screens") {
  const FormatTables& tables = FormatTables::builtin();
  for (std::size_t n = 1; n <= kMaxScreens; ++n) {
    const auto entries = testing::read_zip(package_aia(project_with_screens(n), tables));
    REQUIRE(entries.size() == 1 + 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string base = "src/appinventor/ai_anonymous/Test/Screen" +
                               std::to_string(i + 1);
      CHECK(entries[1 + 2 * i].name == base + ".scm");
      CHECK(entries[2 + 2 * i].name == base + ".bky");

      // Every .scm body parses and declares a Form source.
      const std::string& scm = entries[1 + 2 * i].content;
      const auto start = scm.find("$JSON\n");
      const auto end = scm.rfind("\n|#");
      REQUIRE(start != std::string::npos);
      const auto body = nlohmann::json::parse(scm.substr(start + 6, end - start - 6));
      CHECK(body["Source"] == "Form");

      CHECK(entries[2 + 2 * i].content == tables.bky_empty + "\n");
    }
  }
}

TEST_CASE("screen count limits") {
  CHECK_THROWS_WITH_AS(package_aia(project_with_screens(7), FormatTables::builtin()),
                       doctest::Contains("6"), std::invalid_argument);
  CHECK_THROWS_AS(package_aia(project_with_screens(0), FormatTables::builtin()),
                  std::invalid_argument);
}

TEST_CASE("invalid names are rejected") {
  auto bad_name = project_with_screens(1, "2Fast");
  CHECK_THROWS_AS(package_aia(bad_name, FormatTables::builtin()), std::invalid_argument);

  auto dup = project_with_screens(2);
  dup.screens[1].first = "Screen1";
  CHECK_THROWS_WITH_AS(package_aia(dup, FormatTables::builtin()),
                       doctest::Contains("duplicate"), std::invalid_argument);

  auto missing_main = project_with_screens(1);
  missing_main.options.main_screen = "Elsewhere";
  CHECK_THROWS_AS(package_aia(missing_main, FormatTables::builtin()), std::invalid_argument);
}

TEST_CASE("deterministic mode reproduces archive bytes") {
  const auto project = project_with_screens(3);
  const auto first = package_aia(project, FormatTables::builtin());
  const auto second = package_aia(project, FormatTables::builtin());
  CHECK(first == second);
}

TEST_CASE("author slug and project name shape the entry paths") {
  auto project = project_with_screens(1, "Shop");
  project.options.author_slug = "kim";
  const auto entries = testing::read_zip(package_aia(project, FormatTables::builtin()));
  CHECK(entries[1].name == "src/appinventor/ai_kim/Shop/Screen1.scm");
}

TEST_CASE("python zipfile accepts the archive") {
  if (!testing::python3_available()) {
    return;
  }
  testing::TempDir dir;
  const auto bytes = package_aia(project_with_screens(2), FormatTables::builtin());
  const auto path = dir / "out.aia";
  testing::write_text_file(path, std::string(bytes.begin(), bytes.end()));

  const auto result =
      testing::run_command("python3 -m zipfile -t " + path.string());
  CHECK(result.exit_code == 0);

  const auto listing = testing::run_command("python3 -m zipfile -l " + path.string());
  CHECK(listing.output.find("youngandroidproject/project.properties") != std::string::npos);
  CHECK(listing.output.find("src/appinventor/ai_anonymous/Test/Screen2.bky") !=
        std::string::npos);
}

TEST_SUITE_END();
