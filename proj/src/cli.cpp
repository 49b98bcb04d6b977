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

#include "syn3dtxt/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "syn3dtxt/audit.hpp"
#include "syn3dtxt/dataset_io.hpp"
#include "syn3dtxt/image_io.hpp"

namespace syn3dtxt {
namespace {

struct GenFlags {
  std::string config;
  std::optional<std::string> corpus, fonts, backgrounds, out;
  std::optional<std::uint64_t> count, seed;
  std::optional<double> bend_fraction, focal, distance;
  std::optional<int> width, height, workers;
  bool json = false;
  bool quiet = false;
};

struct PreviewFlags {
  std::string fonts;
  std::string backgrounds;
  std::string text = "Hello";
  std::string text_t = "World";
  int font = 0;
  double gamma = 0.0, theta = 0.0, phi = 0.0;
  std::string policy = "near";
  int arc = 0;
  std::string arc_direction = "up";
  std::optional<double> bend;
  std::optional<std::string> fill;
  std::uint64_t seed = 0;
  int width = 256, height = 64;
  std::string out = "preview";
};

struct ValidateFlags {
  std::string dir;
  double fraction = 0.1;
  bool full = false;
  bool json = false;
  int workers = 0;
};

struct StatsFlags {
  std::string dir;
  bool json = false;
};

std::string fmt_normal(const UnitNormal& n) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << '(' << n.nx << ", " << n.ny << ", " << n.nz << ')';
  return os.str();
}

std::string fmt_rgb(Rgb c) {
  std::ostringstream os;
  os << '(' << int(c.r) << ", " << int(c.g) << ", " << int(c.b) << ')';
  return os.str();
}

Rgb parse_rgb(const std::string& s) {
  int r = 0, g = 0, b = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%d,%d,%d%c", &r, &g, &b, &tail) != 3 || r < 0 || r > 255 || g < 0 ||
      g > 255 || b < 0 || b > 255) {
    throw InvalidArgument("--fill expects R,G,B with components in 0..255, got '" + s + "'");
  }
  return {std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)};
}

int cmd_gen(const GenFlags& f, std::ostream& out, std::ostream& err) {
  DatasetConfig cfg;
  std::string config_path = f.config;
  if (config_path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr) config_path = env;
  }
  if (!config_path.empty()) cfg = load_config(config_path);
  if (f.corpus) cfg.corpus = *f.corpus;
  if (f.fonts) cfg.fonts_dir = *f.fonts;
  if (f.backgrounds) cfg.backgrounds_dir = *f.backgrounds;
  if (f.out) cfg.output_dir = *f.out;
  if (f.count) cfg.count = *f.count;
  if (f.seed) cfg.seed = *f.seed;
  if (f.bend_fraction) cfg.bend_fraction = *f.bend_fraction;
  if (f.width) cfg.canvas_w = *f.width;
  if (f.height) cfg.canvas_h = *f.height;
  if (f.focal) cfg.focal_length = *f.focal;
  if (f.distance) cfg.plane_distance = *f.distance;
  if (f.workers) cfg.workers = *f.workers;
  for (const auto& [name, path] : {std::pair{"corpus", &cfg.corpus}, std::pair{"fonts", &cfg.fonts_dir},
                                   std::pair{"backgrounds", &cfg.backgrounds_dir},
                                   std::pair{"out", &cfg.output_dir}}) {
    if (path->empty()) throw ConfigError(std::string("--") + name + " is required (flag or config file)");
  }
  cfg.validate();

  std::vector<std::string> warnings;
  const Resources res = load_resources(cfg, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  std::uint64_t next_report = 0;
  const ProgressFn progress = [&](std::uint64_t done, std::uint64_t total) {
    if (f.quiet || (done < next_report && done != total)) return;
    err << "\rgenerated " << done << '/' << total << std::flush;
    next_report = done + std::max<std::uint64_t>(1, total / 20);
    if (done == total) err << '\n';
  };
  const DatasetSummary summary = generate_dataset(cfg, res, progress);
  if (f.json) {
    out << summary.to_json().dump(2) << '\n';
  } else {
    out << "wrote " << summary.count << " samples to " << cfg.output_dir.string() << " in " << std::fixed
        << std::setprecision(1) << summary.seconds << " s\n";
    for (const auto& [k, v] : summary.per_kind) out << "  " << k << ": " << v << '\n';
    for (const auto& [k, v] : summary.per_axis_combination) out << "  axes " << k << ": " << v << '\n';
    for (const auto& [k, v] : summary.per_arc_level) out << "  arc " << k << ": " << v << '\n';
  }
  return kExitOk;
}

int cmd_preview(const PreviewFlags& f, std::ostream& out, std::ostream& err) {
  const FontSet fonts = load_fonts(f.fonts);
  if (f.font < 0 || static_cast<std::size_t>(f.font) >= fonts.size()) {
    throw InvalidArgument("--font must be in [0, " + std::to_string(fonts.size()) + ")");
  }
  if (f.text == f.text_t) err << "warning: source and target texts are identical\n";
  const int w = f.width;
  const int h = f.height;
  if (w < 16 || h < 16) throw InvalidArgument("canvas must be at least 16x16");
  const CameraModel cam = CameraModel::for_canvas(w, h);
  const SampleRng root(f.seed, 0);

  Image bg(w, h, 3, 128);
  if (!f.backgrounds.empty()) {
    SampleRng bg_rng = root.substream(stream::kBackground);
    bg = crop_background(load_backgrounds(f.backgrounds), bg_rng, w, h).image;
  }

  RenderParams params;
  params.camera = cam;
  params.font_id = f.font;
  params.arc = {f.arc, arc_direction_from_string(f.arc_direction)};
  params.arc.validate();
  const TextMask mask_s = arc_warp(rasterize(f.text, f.font, fonts, w, h), params.arc);
  const TextMask mask_t = arc_warp(rasterize(f.text_t, f.font, fonts, w, h), params.arc);

  WarpedText ws, wt;
  std::vector<std::string> normal_lines;
  if (f.bend) {
    params.kind = SampleKind::CylinderBent;
    params.sweep_angle = *f.bend;
    const BendParams bend{*f.bend};
    bend.validate();
    const BendResult bs = cylinder_bend(mask_s, bend, cam);
    ws = bs.text;
    wt = cylinder_bend(mask_t, bend, cam).text;
    for (std::size_t i = 0; i < bs.station_deg.size(); ++i) {
      const UnitNormal n = plane_normal(rot_yaw(bs.station_deg[i]));
      std::ostringstream os;
      os << "glyph " << i << " '" << mask_s.glyphs[i].ch << "' yaw " << std::fixed << std::setprecision(3)
         << bs.station_deg[i] << ": normal: " << fmt_normal(n) << " rgb: " << fmt_rgb(encode_normal(n).rgb());
      normal_lines.push_back(os.str());
    }
  } else {
    params.rotation = {f.gamma, f.theta, f.phi, order_policy_from_string(f.policy)};
    params.rotation.validate();
    ws = planar_rotate(mask_s, params.rotation, cam);
    wt = planar_rotate(mask_t, params.rotation, cam);
    const UnitNormal n = plane_normal(compose_rotation(params.rotation));
    normal_lines.push_back("normal: " + fmt_normal(n));
    normal_lines.push_back("rgb: " + fmt_rgb(encode_normal(n).rgb()));
  }

  if (f.fill) {
    params.fill = parse_rgb(*f.fill);
  } else {
    const auto ink = ink_bounds(ws.binary).value_or(PixelBox{0, 0, w - 1, h - 1});
    SampleRng fill_rng = root.substream(stream::kFill);
    params.fill = sample_fill(fill_rng, [&](Rgb c) { return contrast(c, bg, ink); }, kContrastFloor);
  }

  const RenderedSample r = composite_pair(ws, params, wt, params, bg);
  const std::filesystem::path dir = f.out;
  std::filesystem::create_directories(dir);
  const std::array<const Image*, 7> layers{&r.i_s, &r.i_t, &r.mask_s, &r.mask_t, &r.bin_s, &r.bin_t, &r.t_b};
  for (std::size_t i = 0; i < kLayers.size(); ++i) {
    write_png(dir / (std::string(kLayers[i]) + ".png"), *layers[i]);
  }
  for (const auto& line : normal_lines) out << line << '\n';
  out << "fill: " << fmt_rgb(params.fill) << '\n';
  out << "wrote " << kLayers.size() << " images to " << dir.string() << '\n';
  return kExitOk;
}

int cmd_validate(const ValidateFlags& f, std::ostream& out) {
  AuditOptions opts;
  opts.pair_fraction = f.fraction;
  opts.full = f.full;
  opts.workers = f.workers;
  if (!(f.fraction >= 0.0 && f.fraction <= 1.0)) throw InvalidArgument("--fraction must lie in [0, 1]");
  const AuditReport report = validate_dataset(f.dir, opts);
  if (f.json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.exit_code();
}

int cmd_stats(const StatsFlags& f, std::ostream& out) {
  const ManifestContents m = read_manifest(f.dir);
  if (m.records.empty()) throw IoError("manifest in " + f.dir + " has no records");
  const DatasetStats stats = compute_stats(m.records);
  if (f.json) {
    out << stats.to_json().dump(2) << '\n';
  } else {
    out << stats.to_text();
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic 3D-oriented scene text pair generator"};
  app.name(args.empty() ? "syn3dtxt" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);

  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "Generate a paired dataset");
  gen->add_option("--config", gf.config, std::string("JSON config file (default: $") + kConfigEnvVar + ")");
  gen->add_option("--corpus", gf.corpus, "Word list, one word per line");
  gen->add_option("--fonts", gf.fonts, "Font directory");
  gen->add_option("--backgrounds", gf.backgrounds, "Background image directory");
  gen->add_option("--out", gf.out, "Output directory");
  gen->add_option("--count", gf.count, "Number of samples");
  gen->add_option("--seed", gf.seed, "Master seed");
  gen->add_option("--bend-fraction", gf.bend_fraction, "Probability of a CylinderBent sample");
  gen->add_option("--width", gf.width, "Canvas width");
  gen->add_option("--height", gf.height, "Canvas height");
  gen->add_option("--focal", gf.focal, "Focal length in pixels");
  gen->add_option("--distance", gf.distance, "Plane distance in pixels");
  gen->add_option("--workers", gf.workers, "Worker threads (0 = all cores)");
  gen->add_flag("--json", gf.json, "Print the summary as JSON");
  gen->add_flag("-q,--quiet", gf.quiet, "No progress output");

  PreviewFlags pf;
  auto* preview = app.add_subcommand("preview", "Render one configuration for inspection");
  preview->add_option("--fonts", pf.fonts, "Font directory")->required();
  preview->add_option("--backgrounds", pf.backgrounds, "Background directory (default: flat gray)");
  preview->add_option("--text", pf.text, "Source text");
  preview->add_option("--text-t", pf.text_t, "Target text");
  preview->add_option("--font", pf.font, "Font id (index into the sorted font directory)");
  preview->add_option("--gamma", pf.gamma, "Roll in degrees");
  preview->add_option("--theta", pf.theta, "Pitch in degrees");
  preview->add_option("--phi", pf.phi, "Yaw in degrees");
  preview->add_option("--policy", pf.policy, "Order policy: near or far");
  preview->add_option("--arc", pf.arc, "Arc level: 0, 60 or 120");
  preview->add_option("--arc-direction", pf.arc_direction, "up or down");
  preview->add_option("--bend", pf.bend, "Cylinder bend sweep in degrees (30-120)");
  preview->add_option("--fill", pf.fill, "Fill color R,G,B");
  preview->add_option("--seed", pf.seed, "Seed for background crop and fill");
  preview->add_option("--width", pf.width, "Canvas width");
  preview->add_option("--height", pf.height, "Canvas height");
  preview->add_option("--out", pf.out, "Output directory");

  ValidateFlags vf;
  auto* validate = app.add_subcommand("validate", "Audit a dataset");
  validate->add_option("dir", vf.dir, "Dataset directory")->required();
  validate->add_option("--fraction", vf.fraction, "Fraction of samples given the pixel pair check");
  validate->add_flag("--full", vf.full, "Pixel pair check on every sample");
  validate->add_flag("--json", vf.json, "Print the report as JSON");
  validate->add_option("--workers", vf.workers, "Worker threads (0 = all cores)");

  StatsFlags sf;
  auto* stats = app.add_subcommand("stats", "Print empirical distributions of a dataset");
  stats->add_option("dir", sf.dir, "Dataset directory")->required();
  stats->add_flag("--json", sf.json, "Print JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("syn3dtxt");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gf, out, err);
    if (*preview) return cmd_preview(pf, out, err);
    if (*validate) return cmd_validate(vf, out);
    if (*stats) return cmd_stats(sf, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace syn3dtxt
