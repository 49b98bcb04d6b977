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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "syn3dtxt/compositor.hpp"
#include "syn3dtxt/error.hpp"
#include "syn3dtxt/geometry3d.hpp"
#include "syn3dtxt/sampler.hpp"
#include "syn3dtxt/textraster.hpp"
#include "syn3dtxt/warp.hpp"

namespace syn3dtxt {

/// Output layers, in manifest order. Each is written to out/<layer>/<id>.png.
inline constexpr std::array<std::string_view, 7> kLayers{"i_s",   "i_t",   "mask_s", "mask_t",
                                                         "bin_s", "bin_t", "t_b"};

inline constexpr std::string_view kManifestName = "manifest.jsonl";

/// Resampling bound for degenerate projections and font coverage misses.
inline constexpr int kMaxResampleAttempts = 20;

/// Generation recipe. Serialized as a flat JSON object (see README); every
/// field can be overridden from the command line.
struct DatasetConfig {
  std::filesystem::path corpus;
  std::filesystem::path fonts_dir;
  std::filesystem::path backgrounds_dir;
  std::filesystem::path output_dir;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  double bend_fraction = 0.0;
  int canvas_w = 256;
  int canvas_h = 64;
  /// Both default to 2 * max(canvas_w, canvas_h).
  std::optional<double> focal_length;
  std::optional<double> plane_distance;
  /// 0 selects std::thread::hardware_concurrency().
  int workers = 0;
  /// Axis-combination weights in percent. Weights other than the defaults
  /// produce datasets the validator will flag.
  AxisWeights axis_weights = kDefaultAxisWeights;

  CameraModel camera() const;
  int worker_count() const;
  void validate() const;
};

/// Merges the keys of a JSON config object into `cfg`. Unknown keys throw.
void apply_config_json(DatasetConfig& cfg, const nlohmann::json& j);
DatasetConfig load_config(const std::filesystem::path& file);
nlohmann::ordered_json config_to_json(const DatasetConfig& cfg);

struct Resources {
  FontSet fonts;
  WordCorpus corpus;
  BackgroundPool backgrounds;
};

Resources load_resources(const DatasetConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// One manifest row.
struct SampleRecord {
  std::string id;
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::string text_s;
  std::string text_t;
  int font_id = 0;
  std::string font_file;
  Rgb fill;
  SampleKind kind = SampleKind::FlatRotated;
  std::optional<AxisCombination> axes;  // FlatRotated only
  RotationSpec rotation;
  ArcParams arc;
  std::optional<double> sweep_angle;  // CylinderBent only
  int attempts = 1;
  std::string bg_source;
  std::array<double, 4> bg_rect{};
  CameraModel camera;
  int canvas_w = 0;
  int canvas_h = 0;
  std::array<std::string, 7> files;  // kLayers order, relative to the dataset root

  RenderParams render_params() const;
  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// Zero-padded id, at least 6 digits and wide enough for `count - 1`.
std::string format_id(std::uint64_t index, std::uint64_t count);

nlohmann::ordered_json record_to_json(const SampleRecord& r);
/// Throws ManifestError on missing or ill-typed fields.
SampleRecord record_from_json(const nlohmann::json& j);

/// Invariant violations of a record that need no image data.
std::vector<std::string> check_record(const SampleRecord& r);

struct GeneratedSample {
  SampleRecord record;
  RenderedSample images;
};

/// Pipeline: rasterize -> arc_warp -> (planar rotation | cylinder bend) ->
/// composite_pair. A pure function of (cfg, resources, index).
GeneratedSample generate_sample(const Resources& res, const DatasetConfig& cfg, std::uint64_t index);

void write_sample(const std::filesystem::path& out_dir, const GeneratedSample& sample);

struct DatasetSummary {
  std::uint64_t count = 0;
  std::map<std::string, std::uint64_t> per_axis_combination;
  std::map<int, std::uint64_t> per_arc_level;
  std::map<std::string, std::uint64_t> per_kind;
  double seconds = 0.0;

  nlohmann::ordered_json to_json() const;
};

class GenerationFailed : public Error {
 public:
  GenerationFailed(std::string message, std::vector<std::uint64_t> failed)
      : Error(std::move(message)), failed_(std::move(failed)) {}
  const std::vector<std::uint64_t>& failed_indices() const { return failed_; }

 private:
  std::vector<std::uint64_t> failed_;
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Writes cfg.count samples and the manifest (sorted by id). File content is
/// independent of the worker count. Throws GenerationFailed listing the failed
/// indices if any sample fails; no manifest is written in that case.
DatasetSummary generate_dataset(const DatasetConfig& cfg, const Resources& res,
                                const ProgressFn& progress = {});
DatasetSummary generate_dataset(const DatasetConfig& cfg, const ProgressFn& progress = {});

struct Violation {
  std::string id;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ManifestContents {
  std::vector<SampleRecord> records;
  std::vector<Violation> violations;
};

/// Parses out/manifest.jsonl and re-checks every record invariant, including
/// that the referenced files exist. A line that is not valid JSON throws
/// ManifestError naming the line number.
ManifestContents read_manifest(const std::filesystem::path& dir);

/// Runs `fn(i)` for i in [0, n) on `workers` threads.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace syn3dtxt
