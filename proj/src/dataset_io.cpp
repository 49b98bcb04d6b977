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

#include "syn3dtxt/dataset_io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "syn3dtxt/image_io.hpp"

namespace syn3dtxt {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ManifestError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ManifestError(std::string("bad field '") + key + "': " + e.what());
  }
}

PixelBox union_ink(const Image& a, const Image& b) {
  const auto ba = ink_bounds(a);
  const auto bb = ink_bounds(b);
  if (!ba && !bb) return {0, 0, a.width() - 1, a.height() - 1};
  if (!ba) return *bb;
  if (!bb) return *ba;
  return {std::min(ba->x0, bb->x0), std::min(ba->y0, bb->y0), std::max(ba->x1, bb->x1),
          std::max(ba->y1, bb->y1)};
}

}  // namespace

CameraModel DatasetConfig::camera() const {
  const CameraModel def = CameraModel::for_canvas(canvas_w, canvas_h);
  return {focal_length.value_or(def.focal_length), plane_distance.value_or(def.plane_distance)};
}

int DatasetConfig::worker_count() const {
  if (workers > 0) return workers;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void DatasetConfig::validate() const {
  if (count < 1) throw ConfigError("count must be at least 1");
  if (canvas_w < 16 || canvas_h < 16) throw ConfigError("canvas must be at least 16x16");
  if (canvas_w < 4 * canvas_h) throw ConfigError("canvas width must be at least 4x its height");
  if (!(bend_fraction >= 0.0 && bend_fraction <= 1.0)) {
    throw ConfigError("bend_fraction must lie in [0, 1]");
  }
  if (workers < 0) throw ConfigError("workers must be non-negative");
  try {
    camera().validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("camera: ") + e.what());
  }
  int total = 0;
  for (int w : axis_weights) {
    if (w < 0) throw ConfigError("axis weights must be non-negative");
    total += w;
  }
  if (total <= 0) throw ConfigError("axis weights must not all be zero");
}

void apply_config_json(DatasetConfig& cfg, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "corpus") cfg.corpus = value.get<std::string>();
      else if (key == "fonts_dir") cfg.fonts_dir = value.get<std::string>();
      else if (key == "backgrounds_dir") cfg.backgrounds_dir = value.get<std::string>();
      else if (key == "output_dir") cfg.output_dir = value.get<std::string>();
      else if (key == "count") cfg.count = value.get<std::uint64_t>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "bend_fraction") cfg.bend_fraction = value.get<double>();
      else if (key == "canvas_width") cfg.canvas_w = value.get<int>();
      else if (key == "canvas_height") cfg.canvas_h = value.get<int>();
      else if (key == "focal_length") cfg.focal_length = value.get<double>();
      else if (key == "plane_distance") cfg.plane_distance = value.get<double>();
      else if (key == "workers") cfg.workers = value.get<int>();
      else if (key == "axis_weights") cfg.axis_weights = value.get<AxisWeights>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

DatasetConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + file.string() + ": " + e.what());
  }
  DatasetConfig cfg;
  apply_config_json(cfg, j);
  // Relative resource paths resolve against the config file's directory.
  const auto base = file.parent_path();
  for (auto* p : {&cfg.corpus, &cfg.fonts_dir, &cfg.backgrounds_dir, &cfg.output_dir}) {
    if (!p->empty() && p->is_relative()) *p = base / *p;
  }
  return cfg;
}

ordered_json config_to_json(const DatasetConfig& cfg) {
  const CameraModel cam = cfg.camera();
  ordered_json j;
  j["corpus"] = cfg.corpus.string();
  j["fonts_dir"] = cfg.fonts_dir.string();
  j["backgrounds_dir"] = cfg.backgrounds_dir.string();
  j["output_dir"] = cfg.output_dir.string();
  j["count"] = cfg.count;
  j["seed"] = cfg.seed;
  j["bend_fraction"] = cfg.bend_fraction;
  j["canvas_width"] = cfg.canvas_w;
  j["canvas_height"] = cfg.canvas_h;
  j["focal_length"] = cam.focal_length;
  j["plane_distance"] = cam.plane_distance;
  j["workers"] = cfg.workers;
  j["axis_weights"] = cfg.axis_weights;
  return j;
}

Resources load_resources(const DatasetConfig& cfg, std::vector<std::string>* warnings) {
  Resources res;
  res.fonts = load_fonts(cfg.fonts_dir, warnings);
  try {
    res.corpus = load_corpus(cfg.corpus);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  res.backgrounds = load_backgrounds(cfg.backgrounds_dir);
  return res;
}

RenderParams SampleRecord::render_params() const {
  RenderParams p;
  p.kind = kind;
  p.rotation = rotation;
  p.arc = arc;
  p.sweep_angle = sweep_angle.value_or(0.0);
  p.camera = camera;
  p.font_id = font_id;
  p.fill = fill;
  return p;
}

std::string format_id(std::uint64_t index, std::uint64_t count) {
  std::size_t width = 6;
  const std::string last = std::to_string(count > 0 ? count - 1 : 0);
  width = std::max(width, last.size());
  std::string s = std::to_string(index);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

ordered_json record_to_json(const SampleRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["index"] = r.index;
  j["seed"] = r.seed;
  j["text_s"] = r.text_s;
  j["text_t"] = r.text_t;
  j["font_id"] = r.font_id;
  j["font_file"] = r.font_file;
  j["fill_rgb"] = {r.fill.r, r.fill.g, r.fill.b};
  j["kind"] = to_string(r.kind);
  j["axis_combination"] = r.axes ? ordered_json(to_string(*r.axes)) : ordered_json(nullptr);
  j["gamma"] = r.rotation.roll_gamma;
  j["theta"] = r.rotation.pitch_theta;
  j["phi"] = r.rotation.yaw_phi;
  j["order_policy"] = to_string(r.rotation.order_policy);
  j["arc_angle"] = r.arc.total_angle;
  j["arc_direction"] = to_string(r.arc.direction);
  j["sweep_angle"] = r.sweep_angle ? ordered_json(*r.sweep_angle) : ordered_json(nullptr);
  j["attempts"] = r.attempts;
  j["bg_source"] = r.bg_source;
  j["bg_crop"] = r.bg_rect;
  j["camera"] = {{"f", r.camera.focal_length}, {"d", r.camera.plane_distance}};
  j["canvas"] = {r.canvas_w, r.canvas_h};
  ordered_json files;
  for (std::size_t i = 0; i < kLayers.size(); ++i) files[std::string(kLayers[i])] = r.files[i];
  j["files"] = files;
  return j;
}

SampleRecord record_from_json(const json& j) {
  if (!j.is_object()) throw ManifestError("record is not a JSON object");
  SampleRecord r;
  r.id = get_field<std::string>(j, "id");
  r.index = get_field<std::uint64_t>(j, "index");
  r.seed = get_field<std::uint64_t>(j, "seed");
  r.text_s = get_field<std::string>(j, "text_s");
  r.text_t = get_field<std::string>(j, "text_t");
  r.font_id = get_field<int>(j, "font_id");
  r.font_file = get_field<std::string>(j, "font_file");
  const auto fill = get_field<std::array<int, 3>>(j, "fill_rgb");
  for (int c : fill) {
    if (c < 0 || c > 255) throw ManifestError("fill_rgb component out of range");
  }
  r.fill = {static_cast<std::uint8_t>(fill[0]), static_cast<std::uint8_t>(fill[1]),
            static_cast<std::uint8_t>(fill[2])};
  try {
    r.kind = sample_kind_from_string(get_field<std::string>(j, "kind"));
    if (j.contains("axis_combination") && !j["axis_combination"].is_null()) {
      r.axes = axis_combination_from_string(get_field<std::string>(j, "axis_combination"));
    }
    r.rotation.order_policy = order_policy_from_string(get_field<std::string>(j, "order_policy"));
    r.arc.direction = arc_direction_from_string(get_field<std::string>(j, "arc_direction"));
  } catch (const InvalidArgument& e) {
    throw ManifestError(e.what());
  }
  r.rotation.roll_gamma = get_field<double>(j, "gamma");
  r.rotation.pitch_theta = get_field<double>(j, "theta");
  r.rotation.yaw_phi = get_field<double>(j, "phi");
  r.arc.total_angle = get_field<int>(j, "arc_angle");
  if (j.contains("sweep_angle") && !j["sweep_angle"].is_null()) {
    r.sweep_angle = get_field<double>(j, "sweep_angle");
  }
  r.attempts = get_field<int>(j, "attempts");
  r.bg_source = get_field<std::string>(j, "bg_source");
  r.bg_rect = get_field<std::array<double, 4>>(j, "bg_crop");
  const json cam = get_field<json>(j, "camera");
  r.camera = {get_field<double>(cam, "f"), get_field<double>(cam, "d")};
  const auto canvas = get_field<std::array<int, 2>>(j, "canvas");
  r.canvas_w = canvas[0];
  r.canvas_h = canvas[1];
  const json files = get_field<json>(j, "files");
  for (std::size_t i = 0; i < kLayers.size(); ++i) {
    r.files[i] = get_field<std::string>(files, std::string(kLayers[i]).c_str());
  }
  return r;
}

std::vector<std::string> check_record(const SampleRecord& r) {
  std::vector<std::string> v;
  if (r.id.empty() || !std::all_of(r.id.begin(), r.id.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      std::stoull(r.id) != r.index) {
    v.push_back("id does not match index " + std::to_string(r.index));
  }
  if (r.text_s == r.text_t) v.push_back("text_s equals text_t");
  for (const auto* t : {&r.text_s, &r.text_t}) {
    if (t->empty() || t->size() > kMaxWordLength) v.push_back("text length out of range: '" + *t + "'");
  }
  if (std::find(std::begin(kArcLevels), std::end(kArcLevels), r.arc.total_angle) == std::end(kArcLevels)) {
    v.push_back("arc angle " + std::to_string(r.arc.total_angle) + " is not a valid level");
  }
  const RotationSpec& s = r.rotation;
  if (r.kind == SampleKind::FlatRotated) {
    if (!r.axes) {
      v.push_back("FlatRotated record without axis_combination");
    } else {
      const struct {
        const char* name;
        double value;
        bool active;
      } axes[] = {{"gamma", s.roll_gamma, uses_gamma(*r.axes)},
                  {"theta", s.pitch_theta, uses_theta(*r.axes)},
                  {"phi", s.yaw_phi, uses_phi(*r.axes)}};
      for (const auto& a : axes) {
        if (!a.active && a.value != 0.0) {
          v.push_back(std::string(a.name) + " is nonzero but inactive for " +
                      std::string(to_string(*r.axes)));
        }
        if (a.active && !categorize_angle(a.value)) {
          std::ostringstream os;
          os << a.name << " = " << a.value << " outside the angle categories";
          v.push_back(os.str());
        }
      }
    }
    if (r.sweep_angle) v.push_back("FlatRotated record carries a sweep angle");
  } else {
    if (r.axes) v.push_back("CylinderBent record carries an axis combination");
    if (s.roll_gamma != 0.0 || s.pitch_theta != 0.0 || s.yaw_phi != 0.0) {
      v.push_back("CylinderBent record has nonzero rotation angles");
    }
    if (!r.sweep_angle || !(*r.sweep_angle >= kMinSweepDeg && *r.sweep_angle <= kMaxSweepDeg)) {
      v.push_back("CylinderBent sweep angle missing or outside [30, 120]");
    }
  }
  if (r.canvas_w < 16 || r.canvas_h < 16) v.push_back("canvas too small");
  return v;
}

GeneratedSample generate_sample(const Resources& res, const DatasetConfig& cfg, std::uint64_t index) {
  const SampleRng root(cfg.seed, index);
  const CameraModel cam = cfg.camera();
  const int w = cfg.canvas_w;
  const int h = cfg.canvas_h;
  const auto& words = res.corpus.words;

  GeneratedSample out;
  SampleRecord& rec = out.record;
  rec.index = index;
  rec.id = format_id(index, cfg.count);
  rec.seed = cfg.seed;
  rec.camera = cam;
  rec.canvas_w = w;
  rec.canvas_h = h;

  SampleRng kind_rng = root.substream(stream::kKind);
  rec.kind = sample_kind(kind_rng, cfg.bend_fraction);

  SampleRng text_rng = root.substream(stream::kText);
  rec.text_s = words[text_rng.below(words.size())];
  for (int i = 0; i < 1000 && (rec.text_t.empty() || rec.text_t == rec.text_s); ++i) {
    rec.text_t = words[text_rng.below(words.size())];
  }
  if (rec.text_t == rec.text_s) throw ConfigError("corpus needs at least two distinct words");

  SampleRng font_rng = root.substream(stream::kFont);
  bool covered = false;
  for (int i = 0; i < kMaxResampleAttempts && !covered; ++i) {
    rec.font_id = sample_font(font_rng, res.fonts);
    covered = res.fonts.covers(rec.font_id, rec.text_s) && res.fonts.covers(rec.font_id, rec.text_t);
  }
  if (!covered) throw ResampleExhausted("no font covers '" + rec.text_s + "' and '" + rec.text_t + "'");
  rec.font_file = res.fonts.at(rec.font_id).file_path.filename().string();

  SampleRng bg_rng = root.substream(stream::kBackground);
  BackgroundCrop bg = crop_background(res.backgrounds, bg_rng, w, h);
  rec.bg_source = std::filesystem::relative(res.backgrounds.files[bg.source_index],
                                            res.backgrounds.root)
                      .generic_string();
  rec.bg_rect = bg.rect;

  SampleRng arc_rng = root.substream(stream::kArc);
  rec.arc = sample_arc(arc_rng);
  const TextMask mask_s = arc_warp(rasterize(rec.text_s, rec.font_id, res.fonts, w, h), rec.arc);
  const TextMask mask_t = arc_warp(rasterize(rec.text_t, rec.font_id, res.fonts, w, h), rec.arc);

  WarpedText warped_s;
  WarpedText warped_t;
  bool placed = false;
  std::string last_error;
  SampleRng bend_rng = root.substream(stream::kBend);
  for (int attempt = 0; attempt < kMaxResampleAttempts && !placed; ++attempt) {
    rec.attempts = attempt + 1;
    try {
      if (rec.kind == SampleKind::FlatRotated) {
        SampleRng rot_rng = root.substream(stream::kRotation + static_cast<std::uint64_t>(attempt));
        const SampledRotation rot = build_rotation_spec(rot_rng, cfg.axis_weights);
        rec.axes = rot.axes;
        rec.rotation = rot.spec;
        warped_s = planar_rotate(mask_s, rec.rotation, cam);
        warped_t = planar_rotate(mask_t, rec.rotation, cam);
      } else {
        const BendParams bend = sample_bend(bend_rng);
        rec.sweep_angle = bend.sweep_angle;
        warped_s = cylinder_bend(mask_s, bend, cam).text;
        warped_t = cylinder_bend(mask_t, bend, cam).text;
      }
      // Small canvases can thin steeply foreshortened text below the ink threshold.
      if (!ink_bounds(warped_s.binary) || !ink_bounds(warped_t.binary)) {
        last_error = "warped text has no ink";
        continue;
      }
      placed = true;
    } catch (const DegenerateProjection& e) {
      last_error = e.what();
    } catch (const DegenerateHomography& e) {
      last_error = e.what();
    }
  }
  if (!placed) {
    throw ResampleExhausted("sample " + rec.id + ": no valid projection after " +
                            std::to_string(kMaxResampleAttempts) + " draws (" + last_error + ")");
  }

  const PixelBox ink = union_ink(warped_s.binary, warped_t.binary);
  SampleRng fill_rng = root.substream(stream::kFill);
  rec.fill = sample_fill(
      fill_rng, [&](Rgb c) { return contrast(c, bg.image, ink); }, kContrastFloor);

  const RenderParams params = rec.render_params();
  out.images = composite_pair(warped_s, params, warped_t, params, bg.image);
  for (std::size_t i = 0; i < kLayers.size(); ++i) {
    rec.files[i] = std::string(kLayers[i]) + "/" + rec.id + ".png";
  }
  return out;
}

void write_sample(const std::filesystem::path& out_dir, const GeneratedSample& sample) {
  const RenderedSample& img = sample.images;
  const std::array<const Image*, 7> layers{&img.i_s,   &img.i_t,   &img.mask_s, &img.mask_t,
                                           &img.bin_s, &img.bin_t, &img.t_b};
  for (std::size_t i = 0; i < kLayers.size(); ++i) {
    write_png(out_dir / sample.record.files[i], *layers[i]);
  }
}

ordered_json DatasetSummary::to_json() const {
  ordered_json j;
  j["count"] = count;
  j["axis_combination"] = ordered_json::object();
  for (AxisCombination c : kAxisCombinations) {
    const auto it = per_axis_combination.find(std::string(to_string(c)));
    j["axis_combination"][std::string(to_string(c))] = it == per_axis_combination.end() ? 0 : it->second;
  }
  j["arc_level"] = ordered_json::object();
  for (int level : kArcLevels) {
    const auto it = per_arc_level.find(level);
    j["arc_level"][std::to_string(level)] = it == per_arc_level.end() ? 0 : it->second;
  }
  j["kind"] = ordered_json::object();
  for (SampleKind k : {SampleKind::FlatRotated, SampleKind::CylinderBent}) {
    const auto it = per_kind.find(std::string(to_string(k)));
    j["kind"][std::string(to_string(k))] = it == per_kind.end() ? 0 : it->second;
  }
  j["seconds"] = seconds;
  return j;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  const std::size_t threads = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (i < failed_at) {
            failed_at = i;
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

DatasetSummary generate_dataset(const DatasetConfig& cfg, const Resources& res,
                                const ProgressFn& progress) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto& out = cfg.output_dir;
  if (out.empty()) throw ConfigError("output directory is not set");
  std::error_code ec;
  for (auto layer : kLayers) {
    std::filesystem::create_directories(out / std::string(layer), ec);
    if (ec) throw IoError("cannot create " + (out / std::string(layer)).string() + ": " + ec.message());
  }

  const std::size_t n = cfg.count;
  std::vector<SampleRecord> records(n);
  std::vector<std::string> errors(n);
  std::atomic<bool> abort{false};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mu;
  parallel_for(n, cfg.worker_count(), [&](std::size_t i) {
    if (abort.load()) return;
    try {
      GeneratedSample s = generate_sample(res, cfg, i);
      write_sample(out, s);
      records[i] = std::move(s.record);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      abort = true;
    }
    const auto d = ++done;
    if (progress) {
      std::lock_guard lock(progress_mu);
      progress(d, n);
    }
  });

  std::vector<std::uint64_t> failed;
  std::string first_error;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      if (failed.empty()) first_error = errors[i];
      failed.push_back(i);
    }
  }
  if (!failed.empty()) {
    std::ostringstream os;
    os << "generation aborted: " << failed.size() << " failed sample(s), indices";
    for (std::size_t i = 0; i < std::min<std::size_t>(failed.size(), 20); ++i) os << ' ' << failed[i];
    if (failed.size() > 20) os << " ...";
    os << "; first error: " << first_error;
    throw GenerationFailed(os.str(), std::move(failed));
  }

  const auto manifest = out / std::string(kManifestName);
  const auto tmp = out / (std::string(kManifestName) + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write " + tmp.string());
    for (const auto& r : records) os << record_to_json(r).dump() << '\n';
    if (!os) throw IoError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, manifest);

  DatasetSummary summary;
  summary.count = n;
  for (const auto& r : records) {
    if (r.axes) ++summary.per_axis_combination[std::string(to_string(*r.axes))];
    ++summary.per_arc_level[r.arc.total_angle];
    ++summary.per_kind[std::string(to_string(r.kind))];
  }
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

DatasetSummary generate_dataset(const DatasetConfig& cfg, const ProgressFn& progress) {
  cfg.validate();
  const Resources res = load_resources(cfg);
  return generate_dataset(cfg, res, progress);
}

ManifestContents read_manifest(const std::filesystem::path& dir) {
  const auto path = dir / std::string(kManifestName);
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  ManifestContents out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ManifestError(path.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
    SampleRecord r;
    try {
      r = record_from_json(j);
    } catch (const ManifestError& e) {
      throw ManifestError(path.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
    for (auto& msg : check_record(r)) out.violations.push_back({r.id, std::move(msg)});
    for (const auto& f : r.files) {
      std::error_code ec;
      if (!std::filesystem::is_regular_file(dir / f, ec)) {
        out.violations.push_back({r.id, "missing file " + f});
      }
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace syn3dtxt
