// Copyright (c) 2026 The syn3dtxt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "syn3dtxt/audit.hpp"
#include "syn3dtxt/cli.hpp"
#include "syn3dtxt/image_io.hpp"
#include "test_support.hpp"

namespace syn3dtxt {
namespace {

using testing::TempDir;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "syn3dtxt");
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> gen_args(const std::filesystem::path& out, int count, int seed) {
  return {"gen",   "--corpus", testing::corpus_file().string(), "--fonts", testing::fonts_dir().string(),
          "--backgrounds", testing::backgrounds_dir().string(), "--out", out.string(),
          "--count", std::to_string(count), "--seed", std::to_string(seed), "-q"};
}

std::vector<std::string> with(std::vector<std::string> a, std::initializer_list<std::string> extra) {
  a.insert(a.end(), extra);
  return a;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"gen", "--count", "many"}).code, kExitUsage);
}

TEST(Cli, GenTwiceIsByteIdentical) {
  TempDir a("gen_a"), b("gen_b");
  ASSERT_EQ(cli(gen_args(a.path(), 12, 42)).code, kExitOk);
  ASSERT_EQ(cli(with(gen_args(b.path(), 12, 42), {"--workers", "3"})).code, kExitOk);
  EXPECT_EQ(testing::tree_hash(a.path()), testing::tree_hash(b.path()));
  EXPECT_EQ(testing::count_files(a.path()), 12u * 7 + 1);
}

TEST(Cli, GenMissingFontsDirExitsWithUsageCode) {
  TempDir a("gen_nofonts");
  auto args = gen_args(a / "out", 3, 1);
  args[4] = (a / "no_such_fonts").string();
  const CliRun r = cli(args);
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(contains(r.err, "no_such_fonts")) << r.err;
}

TEST(Cli, GenInvalidConfigValueExitsWithUsageCode) {
  TempDir a("gen_bad");
  EXPECT_EQ(cli(with(gen_args(a / "out", 3, 1), {"--bend-fraction", "2"})).code, kExitUsage);
  EXPECT_EQ(cli(with(gen_args(a / "out", 3, 1), {"--width", "100"})).code, kExitUsage);
}

TEST(Cli, GenJsonSummary) {
  TempDir a("gen_json");
  const CliRun r = cli(with(gen_args(a.path(), 6, 3), {"--json"}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("count"), 6);
}

TEST(Cli, BendFractionOneGivesOnlyBentSamples) {
  TempDir a("gen_bent");
  ASSERT_EQ(cli(with(gen_args(a.path(), 15, 5), {"--bend-fraction", "1"})).code, kExitOk);
  const ManifestContents m = read_manifest(a.path());
  ASSERT_EQ(m.records.size(), 15u);
  for (const auto& r : m.records) {
    EXPECT_EQ(r.kind, SampleKind::CylinderBent);
    EXPECT_FALSE(r.axes.has_value());
    ASSERT_TRUE(r.sweep_angle.has_value());
  }
}

TEST(Cli, ConfigFromEnvironment) {
  TempDir a("gen_env");
  nlohmann::json cfg = {{"corpus", testing::corpus_file().string()},
                        {"fonts_dir", testing::fonts_dir().string()},
                        {"backgrounds_dir", testing::backgrounds_dir().string()},
                        {"output_dir", "data"},
                        {"count", 4},
                        {"seed", 8}};
  testing::write_file(a / "cfg.json", cfg.dump());
  ::setenv(kConfigEnvVar, (a / "cfg.json").c_str(), 1);
  const CliRun r = cli({"gen", "-q"});
  ::unsetenv(kConfigEnvVar);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(read_manifest(a / "data").records.size(), 4u);
  // Flags override the file.
  ::setenv(kConfigEnvVar, (a / "cfg.json").c_str(), 1);
  const CliRun r2 = cli({"gen", "-q", "--count", "2", "--out", (a / "more").string()});
  ::unsetenv(kConfigEnvVar);
  ASSERT_EQ(r2.code, kExitOk) << r2.err;
  EXPECT_EQ(read_manifest(a / "more").records.size(), 2u);
}

TEST(CliPreview, ZeroAnglesFaceTheCamera) {
  TempDir a("pv0");
  const CliRun r = cli({"preview", "--fonts", testing::fonts_dir().string(), "--out", a.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "normal: (0.000000, 0.000000, 1.000000)")) << r.out;
  EXPECT_TRUE(contains(r.out, "rgb: (128, 128, 255)")) << r.out;
  for (auto layer : kLayers) EXPECT_TRUE(std::filesystem::exists(a / (std::string(layer) + ".png"))) << layer;
}

TEST(CliPreview, PitchAndYawFarField) {
  // Yaw 45 then pitch 45 applied to +z: (-sqrt(1/2), -1/2, 1/2), encoded by
  // round((n + 1) / 2 * 255) -> (37.34, 63.75, 191.25).
  TempDir a("pv45");
  const CliRun r = cli({"preview", "--fonts", testing::fonts_dir().string(), "--theta", "45", "--phi", "45",
                     "--policy", "far", "--out", a.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "normal: (-0.707107, -0.500000, 0.500000)")) << r.out;
  EXPECT_TRUE(contains(r.out, "rgb: (37, 64, 191)")) << r.out;
  const Image mask = read_image(a / "mask_s.png");
  const Image bin = read_image(a / "bin_s.png");
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x)
      if (bin.at(x, y) == 255) ASSERT_EQ(mask.at(x, y, 0), 37);
}

TEST(CliPreview, ArcStaysOnCanvas) {
  TempDir a("pvarc");
  for (const char* dir : {"up", "down"}) {
    const CliRun r = cli({"preview", "--fonts", testing::fonts_dir().string(), "--text", "Curvature",
                       "--arc", "120", "--arc-direction", dir, "--out", a.path().string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Image bin = read_image(a / "bin_s.png");
    std::size_t ink = 0, border = 0;
    for (int y = 0; y < bin.height(); ++y) {
      for (int x = 0; x < bin.width(); ++x) {
        if (bin.at(x, y) != 255) continue;
        ++ink;
        border += x == 0 || y == 0 || x == bin.width() - 1 || y == bin.height() - 1;
      }
    }
    EXPECT_GT(ink, 200u) << dir;
    EXPECT_EQ(border, 0u) << dir;
  }
}

TEST(CliPreview, BendListsOneNormalPerGlyph) {
  TempDir a("pvbend");
  const CliRun r = cli({"preview", "--fonts", testing::fonts_dir().string(), "--text", "HELLO", "--text-t", "WORLD",
                     "--bend", "90", "--out", a.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "glyph 0 'H' yaw -45.000")) << r.out;
  EXPECT_TRUE(contains(r.out, "glyph 4 'O' yaw 45.000")) << r.out;
}

TEST(CliPreview, RejectsBadArguments) {
  const std::string fonts = testing::fonts_dir().string();
  EXPECT_EQ(cli({"preview"}).code, kExitUsage);
  EXPECT_EQ(cli({"preview", "--fonts", fonts, "--arc", "45", "--out", "/tmp/x"}).code, kExitUsage);
  EXPECT_EQ(cli({"preview", "--fonts", fonts, "--gamma", "120", "--out", "/tmp/x"}).code, kExitUsage);
  EXPECT_EQ(cli({"preview", "--fonts", fonts, "--fill", "1,2", "--out", "/tmp/x"}).code, kExitUsage);
  EXPECT_EQ(cli({"preview", "--fonts", fonts, "--bend", "10", "--out", "/tmp/x"}).code, kExitUsage);
}

class AuditedDataset : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir("audit");
    const CliRun r = cli(with(gen_args(dir_->path(), 60, 21), {"--bend-fraction", "0.3"}));
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  static void TearDownTestSuite() { delete dir_; }
  static TempDir* dir_;
};
TempDir* AuditedDataset::dir_ = nullptr;

TEST_F(AuditedDataset, CleanDatasetPassesFullValidation) {
  const CliRun r = cli({"validate", dir_->path().string(), "--full", "--json"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("records"), 60);
  for (const auto& c : j.at("checks")) EXPECT_EQ(c.at("checked"), 60) << c.at("name");
  for (const auto& d : j.at("distributions")) EXPECT_TRUE(d.at("skipped").get<bool>());
}

TEST_F(AuditedDataset, PairSubsetIsStable) {
  AuditOptions o;
  o.pair_fraction = 0.25;
  const AuditReport a = validate_dataset(dir_->path(), o);
  const AuditReport b = validate_dataset(dir_->path(), o);
  ASSERT_TRUE(a.passed());
  std::uint64_t selected = 0;
  for (std::uint64_t i = 0; i < 60; ++i) selected += pair_check_selected(i, 0.25);
  for (const auto& c : a.checks) {
    if (c.name == "pair_invariant") {
      EXPECT_EQ(c.checked, selected);
      EXPECT_GT(selected, 0u);
    }
  }
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST_F(AuditedDataset, DeletedMaskFailsWithItsId) {
  TempDir copy("audit_del");
  std::filesystem::copy(dir_->path(), copy.path(), std::filesystem::copy_options::recursive);
  std::filesystem::remove(copy / "mask_t/000013.png");
  const CliRun r = cli({"validate", copy.path().string()});
  EXPECT_EQ(r.code, kExitAuditFailed);
  EXPECT_TRUE(contains(r.out, "000013")) << r.out;
}

TEST_F(AuditedDataset, TamperedPixelsAreCaught) {
  TempDir copy("audit_px");
  std::filesystem::copy(dir_->path(), copy.path(), std::filesystem::copy_options::recursive);
  // Paint the target image's top-left pixel, which lies off the text.
  Image it = read_image(copy / "i_t/000002.png");
  ASSERT_EQ(read_image(copy / "bin_t/000002.png").at(0, 0), 0);
  it.at(0, 0, 0) = static_cast<std::uint8_t>(it.at(0, 0, 0) ^ 0x80);
  write_png(copy / "i_t/000002.png", it);
  // Recolor one mask pixel of another sample.
  Image m = read_image(copy / "mask_s/000004.png");
  const Image bin = read_image(copy / "bin_s/000004.png");
  bool done = false;
  for (int y = 0; y < bin.height() && !done; ++y)
    for (int x = 0; x < bin.width() && !done; ++x)
      if (bin.at(x, y) == 255) {
        m.at(x, y, 0) = 0;
        m.at(x, y, 1) = 255;
        m.at(x, y, 2) = 0;
        done = true;
      }
  write_png(copy / "mask_s/000004.png", m);
  AuditOptions o;
  o.full = true;
  const AuditReport rep = validate_dataset(copy.path(), o);
  EXPECT_FALSE(rep.passed());
  std::set<std::string> ids;
  for (const auto& v : rep.violations) ids.insert(v.id);
  EXPECT_TRUE(ids.count("000002"));
  EXPECT_EQ(ids.size(), 1u) << "a single off-color pixel should not flip the modal color";
}

TEST_F(AuditedDataset, EditedAngleBreaksSelfConsistency) {
  TempDir copy("audit_angle");
  std::filesystem::copy(dir_->path(), copy.path(), std::filesystem::copy_options::recursive);
  const ManifestContents m = read_manifest(copy.path());
  std::ostringstream os;
  std::string edited;
  for (SampleRecord r : m.records) {
    if (edited.empty() && r.kind == SampleKind::FlatRotated && r.axes && uses_phi(*r.axes)) {
      r.rotation.yaw_phi = -r.rotation.yaw_phi;
      edited = r.id;
    }
    os << record_to_json(r).dump() << '\n';
  }
  ASSERT_FALSE(edited.empty());
  testing::write_file(copy / "manifest.jsonl", os.str());
  const AuditReport rep = validate_dataset(copy.path());
  EXPECT_FALSE(rep.passed());
  ASSERT_FALSE(rep.violations.empty());
  EXPECT_EQ(rep.violations.front().id, edited);
}

TEST_F(AuditedDataset, StatsJsonGroupsSumToHundred) {
  const CliRun r = cli({"stats", dir_->path().string(), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("records"), 60);
  const auto& g = j.at("axis_groups");
  EXPECT_NEAR(g.at("single").get<double>() + g.at("dual").get<double>() + g.at("triple").get<double>(), 100.0,
              1e-9);
  const CliRun t = cli({"stats", dir_->path().string()});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_TRUE(contains(t.out, "theta+phi+gamma")) << t.out;
}

TEST(CliStats, EmptyDirectoryIsAnError) {
  TempDir a("stats_empty");
  EXPECT_EQ(cli({"stats", a.path().string()}).code, kExitUsage);
  EXPECT_EQ(cli({"validate", a.path().string()}).code, kExitUsage);
  testing::write_file(a / "manifest.jsonl", "");
  EXPECT_EQ(cli({"stats", a.path().string()}).code, kExitUsage);
}

TEST(Audit, RiggedAxisDistributionIsRejected) {
  TempDir a("rigged");
  DatasetConfig c = testing::test_config(a.path(), 5000, 31);
  c.canvas_w = 64;
  c.canvas_h = 16;
  c.axis_weights = {0, 0, 100, 0, 0, 0, 0};
  generate_dataset(c);
  AuditOptions o;
  o.pair_fraction = 0.01;
  const AuditReport rep = validate_dataset(a.path(), o);
  EXPECT_FALSE(rep.passed());
  bool axis_failed = false;
  for (const auto& d : rep.distributions) {
    if (d.name == "axis_combination") {
      EXPECT_FALSE(d.skipped);
      axis_failed = !d.passed();
    }
  }
  EXPECT_TRUE(axis_failed);
  // Per-record checks are still clean; only the distribution is wrong.
  for (const auto& ch : rep.checks) EXPECT_TRUE(ch.passed()) << ch.name;
  const CliRun r = cli({"validate", a.path().string(), "--fraction", "0"});
  EXPECT_EQ(r.code, kExitAuditFailed);
}

}  // namespace
}  // namespace syn3dtxt
