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

#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "syn3dtxt/dataset_io.hpp"
#include "syn3dtxt/image_io.hpp"
#include "test_support.hpp"

namespace syn3dtxt {
namespace {

using testing::TempDir;
using testing::test_config;

const Resources& resources() {
  static const Resources r = load_resources(test_config("unused", 1, 0));
  return r;
}

TEST(FormatId, PadsToSixOrMore) {
  EXPECT_EQ(format_id(0, 10), "000000");
  EXPECT_EQ(format_id(42, 1000), "000042");
  EXPECT_EQ(format_id(999999, 1000000), "999999");
  EXPECT_EQ(format_id(5, 1000001), "0000005");
  EXPECT_EQ(format_id(1234567, 150000000), "001234567");
}

TEST(DatasetConfig, ValidationRejectsBadValues) {
  DatasetConfig c = test_config("out", 10, 0);
  EXPECT_NO_THROW(c.validate());
  auto bad = [&](auto mutate) {
    DatasetConfig d = c;
    mutate(d);
    EXPECT_THROW(d.validate(), ConfigError);
  };
  bad([](DatasetConfig& d) { d.count = 0; });
  bad([](DatasetConfig& d) { d.canvas_h = 8; });
  bad([](DatasetConfig& d) { d.canvas_w = 200; });
  bad([](DatasetConfig& d) { d.bend_fraction = 1.5; });
  bad([](DatasetConfig& d) { d.workers = -1; });
  bad([](DatasetConfig& d) { d.axis_weights = {0, 0, 0, 0, 0, 0, 0}; });
  bad([](DatasetConfig& d) { d.axis_weights = {-1, 20, 20, 20, 5, 5, 31}; });
}

TEST(DatasetConfig, CameraDefaultsToTwiceLongerSide) {
  DatasetConfig c = test_config("out", 1, 0);
  EXPECT_DOUBLE_EQ(c.camera().focal_length, 512.0);
  EXPECT_DOUBLE_EQ(c.camera().plane_distance, 512.0);
  c.focal_length = 300.0;
  EXPECT_DOUBLE_EQ(c.camera().focal_length, 300.0);
  EXPECT_DOUBLE_EQ(c.camera().plane_distance, 512.0);
}

TEST(LoadConfig, RelativePathsAndUnknownKeys) {
  TempDir dir("cfg");
  std::filesystem::create_directories(dir / "sub");
  testing::write_file(dir / "sub/c.json",
                      R"({"corpus": "words.txt", "fonts_dir": "/abs/fonts", "count": 12, "seed": 9,
                          "bend_fraction": 0.25, "axis_weights": [1,1,1,1,1,1,1]})");
  const DatasetConfig c = load_config(dir / "sub/c.json");
  EXPECT_EQ(c.corpus, dir / "sub/words.txt");
  EXPECT_EQ(c.fonts_dir, std::filesystem::path("/abs/fonts"));
  EXPECT_EQ(c.count, 12u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_DOUBLE_EQ(c.bend_fraction, 0.25);
  EXPECT_EQ(c.axis_weights, (AxisWeights{1, 1, 1, 1, 1, 1, 1}));

  testing::write_file(dir / "bad.json", R"({"count": 3, "colour": "red"})");
  try {
    load_config(dir / "bad.json");
    FAIL() << "unknown key accepted";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
  testing::write_file(dir / "typed.json", R"({"count": "three"})");
  EXPECT_THROW(load_config(dir / "typed.json"), ConfigError);
  testing::write_file(dir / "broken.json", "{");
  EXPECT_THROW(load_config(dir / "broken.json"), ConfigError);
  EXPECT_THROW(load_config(dir / "absent.json"), ConfigError);
}

TEST(LoadConfig, RoundTripsThroughJson) {
  DatasetConfig c = test_config("/tmp/o", 77, 5);
  c.bend_fraction = 0.5;
  c.workers = 3;
  DatasetConfig d;
  apply_config_json(d, config_to_json(c));
  EXPECT_EQ(d.corpus, c.corpus);
  EXPECT_EQ(d.output_dir, c.output_dir);
  EXPECT_EQ(d.count, 77u);
  EXPECT_EQ(d.seed, 5u);
  EXPECT_EQ(d.workers, 3);
  EXPECT_DOUBLE_EQ(d.camera().focal_length, c.camera().focal_length);
}

TEST(LoadResources, MissingDirectoriesAreConfigErrors) {
  DatasetConfig c = test_config("out", 1, 0);
  c.fonts_dir = "/nonexistent/fonts";
  EXPECT_THROW(load_resources(c), ConfigError);
  c = test_config("out", 1, 0);
  c.corpus = "/nonexistent/words.txt";
  EXPECT_THROW(load_resources(c), ConfigError);
  c = test_config("out", 1, 0);
  c.backgrounds_dir = "/nonexistent/bg";
  EXPECT_THROW(load_resources(c), ConfigError);
}

TEST(GenerateSample, PureFunctionOfIndex) {
  const DatasetConfig c = test_config("out", 100, 11);
  for (std::uint64_t i : {0u, 1u, 57u}) {
    const GeneratedSample a = generate_sample(resources(), c, i);
    const GeneratedSample b = generate_sample(resources(), c, i);
    EXPECT_EQ(a.record, b.record);
    EXPECT_EQ(a.images.i_s, b.images.i_s);
    EXPECT_EQ(a.images.mask_t, b.images.mask_t);
    EXPECT_EQ(a.images.t_b, b.images.t_b);
  }
  const GeneratedSample x = generate_sample(resources(), c, 3);
  const GeneratedSample y = generate_sample(resources(), test_config("out", 100, 12), 3);
  EXPECT_FALSE(x.record == y.record);
}

TEST(GenerateSample, RecordsPassTheirOwnChecks) {
  DatasetConfig c = test_config("out", 300, 13);
  c.bend_fraction = 0.4;
  int bent = 0;
  for (std::uint64_t i = 0; i < c.count; ++i) {
    const GeneratedSample s = generate_sample(resources(), c, i);
    ASSERT_TRUE(check_record(s.record).empty()) << s.record.id;
    ASSERT_NE(s.record.text_s, s.record.text_t);
    ASSERT_EQ(s.images.i_s.width(), 256);
    ASSERT_EQ(s.images.i_s.height(), 64);
    bent += s.record.kind == SampleKind::CylinderBent;
  }
  EXPECT_GT(bent, 80);
  EXPECT_LT(bent, 160);
}

TEST(GenerateSample, GammaOnlyMaskIsFrontFacing) {
  DatasetConfig c = test_config("out", 20, 14);
  c.axis_weights = {0, 0, 100, 0, 0, 0, 0};
  for (std::uint64_t i = 0; i < c.count; ++i) {
    const GeneratedSample s = generate_sample(resources(), c, i);
    ASSERT_EQ(s.record.axes, AxisCombination::Gamma);
    ASSERT_NE(s.record.rotation.roll_gamma, 0.0);
    const Image& m = s.images.mask_s;
    for (int y = 0; y < m.height(); ++y) {
      for (int x = 0; x < m.width(); ++x) {
        if (s.images.bin_s.at(x, y) != 255) continue;
        ASSERT_EQ(m.at(x, y, 0), 128);
        ASSERT_EQ(m.at(x, y, 1), 128);
        ASSERT_EQ(m.at(x, y, 2), 255);
      }
    }
  }
}

TEST(CheckRecord, FlagsBrokenRecords) {
  const SampleRecord good = generate_sample(resources(), test_config("out", 10, 15), 4).record;
  ASSERT_EQ(good.kind, SampleKind::FlatRotated);
  ASSERT_TRUE(check_record(good).empty());
  auto flagged = [&](auto mutate) {
    SampleRecord r = good;
    mutate(r);
    return !check_record(r).empty();
  };
  EXPECT_TRUE(flagged([](SampleRecord& r) { r.text_t = r.text_s; }));
  EXPECT_TRUE(flagged([](SampleRecord& r) { r.id = "000999"; }));
  EXPECT_TRUE(flagged([](SampleRecord& r) { r.arc.total_angle = 45; }));
  EXPECT_TRUE(flagged([](SampleRecord& r) { r.rotation.roll_gamma = 90.0; }));
  EXPECT_TRUE(flagged([](SampleRecord& r) { r.axes.reset(); }));
  EXPECT_TRUE(flagged([](SampleRecord& r) { r.sweep_angle = 60.0; }));
  EXPECT_TRUE(flagged([](SampleRecord& r) {
    r.kind = SampleKind::CylinderBent;
    r.axes.reset();
    r.rotation = {};
    r.sweep_angle = 150.0;
  }));
}

TEST(Manifest, RecordJsonRoundTrip) {
  DatasetConfig c = test_config("out", 40, 16);
  c.bend_fraction = 0.5;
  for (std::uint64_t i = 0; i < c.count; ++i) {
    const SampleRecord r = generate_sample(resources(), c, i).record;
    const SampleRecord back = record_from_json(nlohmann::json::parse(record_to_json(r).dump()));
    ASSERT_EQ(back, r) << r.id;
  }
}

TEST(Manifest, MissingFieldIsManifestError) {
  const SampleRecord r = generate_sample(resources(), test_config("out", 10, 17), 0).record;
  for (const char* key : {"id", "text_s", "gamma", "files", "fill_rgb"}) {
    nlohmann::json j = nlohmann::json::parse(record_to_json(r).dump());
    j.erase(key);
    EXPECT_THROW(record_from_json(j), ManifestError) << key;
  }
  nlohmann::json j = nlohmann::json::parse(record_to_json(r).dump());
  j["font_id"] = "zero";
  EXPECT_THROW(record_from_json(j), ManifestError);
}

class GeneratedDataset : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir("ds");
    DatasetConfig c = test_config(dir_->path(), 24, 18);
    c.bend_fraction = 0.3;
    c.workers = 2;
    summary_ = new DatasetSummary(generate_dataset(c));
  }
  static void TearDownTestSuite() {
    delete summary_;
    delete dir_;
  }
  static TempDir* dir_;
  static DatasetSummary* summary_;
};
TempDir* GeneratedDataset::dir_ = nullptr;
DatasetSummary* GeneratedDataset::summary_ = nullptr;

TEST_F(GeneratedDataset, SevenImagesPerSampleAndOneManifestLine) {
  EXPECT_EQ(summary_->count, 24u);
  EXPECT_EQ(testing::count_files(dir_->path()), 24u * 7 + 1);
  for (auto layer : kLayers) {
    std::size_t n = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir_->path() / std::string(layer))) {
      EXPECT_EQ(e.path().extension(), ".png");
      ++n;
    }
    EXPECT_EQ(n, 24u) << layer;
  }
  std::istringstream in(testing::read_file(dir_->path() / "manifest.jsonl"));
  std::string line;
  std::vector<std::string> ids;
  while (std::getline(in, line)) ids.push_back(nlohmann::json::parse(line).at("id"));
  ASSERT_EQ(ids.size(), 24u);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(ids.front(), "000000");
  EXPECT_EQ(ids.back(), "000023");
}

TEST_F(GeneratedDataset, FilesMatchRecordsAndDecode) {
  const ManifestContents m = read_manifest(dir_->path());
  EXPECT_TRUE(m.violations.empty());
  ASSERT_EQ(m.records.size(), 24u);
  for (const SampleRecord& r : m.records) {
    for (std::size_t k = 0; k < kLayers.size(); ++k) {
      EXPECT_EQ(r.files[k], std::string(kLayers[k]) + "/" + r.id + ".png");
      const Image img = read_image(dir_->path() / r.files[k]);
      EXPECT_EQ(img.width(), 256);
      EXPECT_EQ(img.height(), 64);
    }
  }
  std::uint64_t total = 0;
  for (const auto& [k, v] : summary_->per_kind) total += v;
  EXPECT_EQ(total, 24u);
}

TEST_F(GeneratedDataset, MissingFileIsAViolation) {
  TempDir copy("ds_copy");
  std::filesystem::copy(dir_->path(), copy.path(), std::filesystem::copy_options::recursive);
  std::filesystem::remove(copy / "mask_s/000007.png");
  const ManifestContents m = read_manifest(copy.path());
  ASSERT_EQ(m.violations.size(), 1u);
  EXPECT_EQ(m.violations[0].id, "000007");
  EXPECT_NE(m.violations[0].message.find("mask_s"), std::string::npos);
}

TEST_F(GeneratedDataset, CorruptLineNamesItsNumber) {
  TempDir copy("ds_corrupt");
  std::filesystem::copy(dir_->path(), copy.path(), std::filesystem::copy_options::recursive);
  std::istringstream in(testing::read_file(copy / "manifest.jsonl"));
  std::ostringstream out;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) out << (n == 5 ? line.substr(0, line.size() / 2) : line) << '\n';
  testing::write_file(copy / "manifest.jsonl", out.str());
  try {
    read_manifest(copy.path());
    FAIL() << "truncated line accepted";
  } catch (const ManifestError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
}

TEST(GenerateDataset, WorkerCountDoesNotChangeOutput) {
  TempDir a("w1"), b("w8");
  DatasetConfig c = test_config(a.path(), 30, 19);
  c.bend_fraction = 0.3;
  c.workers = 1;
  generate_dataset(c);
  c.output_dir = b.path();
  c.workers = 8;
  generate_dataset(c);
  EXPECT_EQ(testing::read_file(a / "manifest.jsonl"), testing::read_file(b / "manifest.jsonl"));
  EXPECT_EQ(testing::tree_hash(a.path()), testing::tree_hash(b.path()));
}

TEST(GenerateDataset, FailuresAreListedAndNoManifestIsWritten) {
  TempDir dir("fail");
  testing::write_file(dir / "one.txt", "lonely\n");
  DatasetConfig c = test_config(dir / "out", 5, 20);
  c.corpus = dir / "one.txt";
  c.workers = 1;
  try {
    generate_dataset(c);
    FAIL() << "single-word corpus accepted";
  } catch (const GenerationFailed& e) {
    EXPECT_EQ(e.failed_indices(), (std::vector<std::uint64_t>{0}));
  }
  EXPECT_FALSE(std::filesystem::exists(dir / "out/manifest.jsonl"));
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (int workers : {1, 3, 16}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) ASSERT_EQ(h.load(), 1);
  }
}

TEST(ParallelFor, RethrowsWorkerException) {
  EXPECT_THROW(parallel_for(50, 4,
                            [](std::size_t i) {
                              if (i == 17) throw IoError("boom");
                            }),
               IoError);
}

}  // namespace
}  // namespace syn3dtxt
