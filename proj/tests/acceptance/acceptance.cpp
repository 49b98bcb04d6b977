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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "syn3dtxt/audit.hpp"
#include "syn3dtxt/cli.hpp"
#include "syn3dtxt/dataset_io.hpp"
#include "syn3dtxt/geometry3d.hpp"
#include "syn3dtxt/image_io.hpp"
#include "syn3dtxt/warp.hpp"
#include "test_support.hpp"

namespace syn3dtxt {
namespace {

using testing::TempDir;
using Clock = std::chrono::steady_clock;
using M3 = std::array<double, 9>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Rotation matrices written out from their textbook form.
M3 roll_m(double deg) {
  const double r = deg * std::numbers::pi / 180.0, c = std::cos(r), s = std::sin(r);
  return {c, -s, 0, s, c, 0, 0, 0, 1};
}
M3 yaw_m(double deg) {
  const double r = deg * std::numbers::pi / 180.0, c = std::cos(r), s = std::sin(r);
  return {c, 0, -s, 0, 1, 0, s, 0, c};
}
M3 pitch_m(double deg) {
  const double r = deg * std::numbers::pi / 180.0, c = std::cos(r), s = std::sin(r);
  return {1, 0, 0, 0, c, -s, 0, s, c};
}
M3 mul(const M3& a, const M3& b) {
  M3 o{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) o[i * 3 + j] += a[i * 3 + k] * b[k * 3 + j];
  return o;
}
M3 oracle_compose(const RotationSpec& s) {
  const M3 r = roll_m(s.roll_gamma), p = pitch_m(s.pitch_theta), y = yaw_m(s.yaw_phi);
  return s.order_policy == OrderPolicy::NearField ? mul(y, mul(p, r)) : mul(p, mul(y, r));
}
double gap(const Mat4& a, const M3& b) {
  double g = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g = std::max(g, std::abs(a(i, j) - b[i * 3 + j]));
  return g;
}
std::array<std::uint8_t, 3> oracle_encode(double x, double y, double z) {
  const auto q = [](double c) { return static_cast<std::uint8_t>(std::round(255.0 * (c + 1.0) / 2.0)); };
  return {q(x), q(y), q(z)};
}

RotationSpec random_spec(std::mt19937_64& g) {
  std::uniform_real_distribution<double> a(-90.0, 90.0);
  return {a(g), a(g), a(g), g() % 2 ? OrderPolicy::NearField : OrderPolicy::FarField};
}

Outcome rotation_algebra() {
  const auto t0 = Clock::now();
  std::mt19937_64 g(101);
  double ortho = 0.0, det = 0.0, single = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const RotationSpec s = random_spec(g);
    const Mat4 m = compose_rotation(s);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double dot = 0.0;
        for (int k = 0; k < 3; ++k) dot += m(k, a) * m(k, b);
        ortho = std::max(ortho, std::abs(dot - (a == b ? 1.0 : 0.0)));
      }
    det = std::max(det, std::abs(m.determinant3() - 1.0));
    single = std::max(single, gap(compose_rotation({s.roll_gamma, 0, 0, s.order_policy}), roll_m(s.roll_gamma)));
    single = std::max(single, gap(compose_rotation({0, s.pitch_theta, 0, s.order_policy}), pitch_m(s.pitch_theta)));
    single = std::max(single, gap(compose_rotation({0, 0, s.yaw_phi, s.order_policy}), yaw_m(s.yaw_phi)));
  }
  const double t = seconds_since(t0);
  return {ortho <= 1e-9 && det <= 1e-9 && single <= 1e-12 && t < 5.0,
          fmt("10000 specs: max |RtR-I| %.2e, max |det-1| %.2e (<=1e-9), single-axis gap %.2e (<=1e-12), %.2f s (<5 s)",
              ortho, det, single, t)};
}

Outcome normal_encoding() {
  const auto t0 = Clock::now();
  std::mt19937_64 g(202);
  std::normal_distribution<double> n01;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double x = n01(g), y = n01(g), z = n01(g);
    const double len = std::sqrt(x * x + y * y + z * z);
    const UnitNormal n{x / len, y / len, z / len};
    worst = std::max(worst, angular_error_deg(n, decode_normal(encode_normal(n))));
  }
  const double t = seconds_since(t0);
  const bool fx = encode_normal({0, 0, 1}).rgb() == Rgb{128, 128, 255} &&
                  encode_normal({1, 0, 0}).rgb() == Rgb{255, 128, 128} &&
                  encode_normal({0, -1, 0}).rgb() == Rgb{128, 0, 128};
  return {worst <= 0.6 && fx && t < 1.0,
          fmt("10000 normals: worst round trip %.4f deg (<=0.6), axis fixtures %s, %.3f s (<1 s)", worst,
              fx ? "exact" : "WRONG", t)};
}

Outcome non_commutativity() {
  std::mt19937_64 g(303);
  std::uniform_real_distribution<double> a(-90.0, 90.0);
  int differ = 0, agree = 0;
  double min_gap = 1e9, max_same = 0.0;
  for (int i = 0; i < 1000; ++i) {
    SampleRng r(303, static_cast<std::uint64_t>(i));
    const double theta = sample_angle(r), phi = sample_angle(r), gamma = a(g);
    const double d = max_abs_diff(compose_rotation({gamma, theta, phi, OrderPolicy::NearField}),
                                  compose_rotation({gamma, theta, phi, OrderPolicy::FarField}));
    min_gap = std::min(min_gap, d);
    differ += d > 1e-6;
    const bool zero_theta = i % 2 == 0;
    const RotationSpec z{gamma, zero_theta ? 0.0 : theta, zero_theta ? phi : 0.0, OrderPolicy::NearField};
    RotationSpec zf = z;
    zf.order_policy = OrderPolicy::FarField;
    const double s = max_abs_diff(compose_rotation(z), compose_rotation(zf));
    max_same = std::max(max_same, s);
    agree += s <= 1e-12;
  }
  return {differ == 1000 && agree == 1000,
          fmt("theta,phi != 0: %d/1000 differ (min gap %.3e > 1e-6); one of them 0: %d/1000 agree (max gap %.1e <= 1e-12)",
              differ, min_gap, agree, max_same)};
}

Outcome identity_cases() {
  const FontSet fonts = load_fonts(testing::fonts_dir());
  bool arc_ok = true;
  for (const char* w : {"identity", "Warp", "x", "Quartz42"}) {
    for (int font = 0; font < static_cast<int>(fonts.size()); ++font) {
      const TextMask m = rasterize(w, font, fonts, 256, 64);
      for (ArcDirection d : {ArcDirection::ArchUp, ArcDirection::ArchDown}) {
        const TextMask o = arc_warp(m, {0, d});
        arc_ok = arc_ok && o.alpha == m.alpha && o.labels == m.labels && o.glyphs == m.glyphs;
      }
    }
  }
  double corner = 0.0, off_axis = 0.0;
  for (auto [w, h] : {std::pair{256, 64}, {128, 32}, {400, 100}, {64, 16}}) {
    const Homography hm = planar_homography(w, h, compose_rotation({}), CameraModel::for_canvas(w, h));
    for (Point2 p : {Point2{0, 0}, {double(w), 0}, {double(w), double(h)}, {0, double(h)}}) {
      const Point2 q = hm.apply(p);
      corner = std::max(corner, std::hypot(q.x - p.x, q.y - p.y));
    }
    for (int k : {1, 3, 6, 7}) off_axis = std::max(off_axis, std::abs(hm.entries()[k]));
  }
  return {arc_ok && corner <= 1e-6 && off_axis <= 1e-9,
          fmt("0 deg arc byte-identical: %s; zero rotation: corner error %.2e px (<=1e-6), off-axis terms %.1e",
              arc_ok ? "yes" : "NO", corner, off_axis)};
}

std::vector<std::string> gen_args(const std::filesystem::path& out, int count, int seed) {
  return {"syn3dtxt", "gen", "--corpus", testing::corpus_file().string(), "--fonts", testing::fonts_dir().string(),
          "--backgrounds", testing::backgrounds_dir().string(), "--out", out.string(), "--count",
          std::to_string(count), "--seed", std::to_string(seed), "-q"};
}

int run_gen(std::vector<std::string> args, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

Outcome distribution(const std::filesystem::path& dir) {
  const auto t0 = Clock::now();
  std::string err;
  if (run_gen(gen_args(dir, 10000, 2024), &err) != 0) return {false, "gen failed: " + err};
  const double t = seconds_since(t0);
  const ManifestContents m = read_manifest(dir);
  std::array<std::uint64_t, 7> counts{};
  std::uint64_t flat = 0, range_violations = 0;
  for (const SampleRecord& r : m.records) {
    if (r.kind != SampleKind::FlatRotated || !r.axes) continue;
    ++flat;
    ++counts[static_cast<std::size_t>(*r.axes)];
    const std::array<std::pair<bool, double>, 3> axes{std::pair{uses_theta(*r.axes), r.rotation.pitch_theta},
                                                      {uses_phi(*r.axes), r.rotation.yaw_phi},
                                                      {uses_gamma(*r.axes), r.rotation.roll_gamma}};
    for (auto [active, v] : axes) {
      const double a = std::abs(v);
      const bool in_range = a == 30.0 || (a >= 45.0 && a <= 60.0) || (a >= 65.0 && a <= 70.0);
      range_violations += active ? !in_range : v != 0.0;
    }
  }
  double worst_pp = 0.0;
  std::ostringstream freq;
  for (std::size_t i = 0; i < 7; ++i) {
    const double pct = 100.0 * double(counts[i]) / double(std::max<std::uint64_t>(flat, 1));
    worst_pp = std::max(worst_pp, std::abs(pct - kDefaultAxisWeights[i]));
    freq << (i ? " " : "") << fmt("%.2f", pct);
  }
  const std::vector<std::uint64_t> obs(counts.begin(), counts.end());
  const ChiSquare chi = chi_square_test("axis_combination", obs,
                                        std::vector<double>(kDefaultAxisWeights.begin(), kDefaultAxisWeights.end()));
  const bool ok = flat == 10000 && worst_pp <= 1.5 && chi.passed() && range_violations == 0 && t < 600.0 &&
                  m.violations.empty();
  return {ok, fmt("n=%llu, freq%% [%s] worst %.2f pp (<=1.5), chi2 %.2f df %d crit %.3f p %.4f, range violations %llu, %.1f s (<600 s)",
                  static_cast<unsigned long long>(flat), freq.str().c_str(), worst_pp, chi.statistic, chi.df,
                  chi.critical, chi.p_value, static_cast<unsigned long long>(range_violations), t)};
}

struct Pixels {
  std::map<std::array<std::uint8_t, 3>, std::uint64_t> colors;
  std::map<std::array<std::uint8_t, 3>, std::pair<double, std::uint64_t>> x_sum;
};

Pixels mask_colors(const Image& mask, const Image& bin) {
  Pixels p;
  for (int y = 0; y < bin.height(); ++y)
    for (int x = 0; x < bin.width(); ++x) {
      if (bin.at(x, y) != 255) continue;
      const std::array<std::uint8_t, 3> c{mask.at(x, y, 0), mask.at(x, y, 1), mask.at(x, y, 2)};
      ++p.colors[c];
      auto& s = p.x_sum[c];
      s.first += x;
      ++s.second;
    }
  return p;
}

double decoded_yaw(const std::array<std::uint8_t, 3>& c) {
  const double x = c[0] / 127.5 - 1.0, z = c[2] / 127.5 - 1.0;
  return std::atan2(-x, z) * 180.0 / std::numbers::pi;
}

// Returns an empty string when the record's masks agree with its angles.
std::string consistency_problem(const std::filesystem::path& dir, const SampleRecord& r, bool* single_glyph) {
  for (int k : {2, 3}) {
    const Image mask = read_image(dir / r.files[k]);
    const Image bin = read_image(dir / r.files[k + 2]);
    const Pixels p = mask_colors(mask, bin);
    if (p.colors.empty()) return "no ink";
    if (r.kind == SampleKind::FlatRotated) {
      const M3 m = oracle_compose(r.rotation);
      const auto want = oracle_encode(m[2], m[5], m[8]);
      const auto mode = std::max_element(p.colors.begin(), p.colors.end(),
                                         [](const auto& a, const auto& b) { return a.second < b.second; });
      if (mode->first != want) return "modal color differs";
      continue;
    }
    const std::string& text = k == 2 ? r.text_s : r.text_t;
    if (std::count_if(text.begin(), text.end(), [](char c) { return c != ' '; }) == 1) {
      *single_glyph = true;
      if (p.colors.size() != 1 || p.colors.begin()->first != std::array<std::uint8_t, 3>{128, 128, 255})
        return "single glyph not front-facing";
      continue;
    }
    std::vector<std::pair<double, double>> glyphs;
    for (const auto& [c, s] : p.x_sum) glyphs.emplace_back(s.first / double(s.second), decoded_yaw(c));
    std::sort(glyphs.begin(), glyphs.end());
    for (std::size_t i = 1; i < glyphs.size(); ++i)
      if (glyphs[i].second < glyphs[i - 1].second - 0.6) return "yaw not monotonic";
    const double span = glyphs.back().second - glyphs.front().second;
    if (std::abs(span - *r.sweep_angle) > 5.0) return fmt("span %.2f vs sweep %.2f", span, *r.sweep_angle);
  }
  return {};
}

Outcome self_consistency(const std::filesystem::path& dir, const ManifestContents& m) {
  std::uint64_t flat = 0, bent = 0, singles = 0, bad = 0;
  std::string first;
  for (const SampleRecord& r : m.records) {
    bool single = false;
    const std::string why = consistency_problem(dir, r, &single);
    (r.kind == SampleKind::FlatRotated ? flat : bent) += 1;
    singles += single;
    if (!why.empty()) {
      if (!bad++) first = r.id + ": " + why;
    }
  }
  return {bad == 0 && !m.records.empty(),
          fmt("%llu flat + %llu bent records (%llu with a one-glyph word), %llu inconsistent%s%s",
              static_cast<unsigned long long>(flat), static_cast<unsigned long long>(bent),
              static_cast<unsigned long long>(singles), static_cast<unsigned long long>(bad),
              bad ? ", first " : "", first.c_str())};
}

Outcome pair_invariant(const std::filesystem::path& dir, const ManifestContents& m) {
  std::uint64_t pixels = 0, bad = 0;
  const std::size_t n = std::min<std::size_t>(200, m.records.size());
  for (std::size_t i = 0; i < n; ++i) {
    const SampleRecord& r = m.records[i];
    const Image is = read_image(dir / r.files[0]), it = read_image(dir / r.files[1]);
    const Image bs = read_image(dir / r.files[4]), bt = read_image(dir / r.files[5]);
    const Image tb = read_image(dir / r.files[6]);
    for (int y = 0; y < is.height(); ++y)
      for (int x = 0; x < is.width(); ++x) {
        ++pixels;
        const bool in_s = bs.at(x, y) == 255, in_t = bt.at(x, y) == 255;
        bool ok = true;
        for (int c = 0; c < 3; ++c) {
          if (!in_s && !in_t && is.at(x, y, c) != it.at(x, y, c)) ok = false;
          if (!in_s && is.at(x, y, c) != tb.at(x, y, c)) ok = false;
        }
        bad += !ok;
      }
  }
  return {n == 200 && bad == 0, fmt("%zu samples, %llu pixels, %llu violating", n,
                                    static_cast<unsigned long long>(pixels), static_cast<unsigned long long>(bad))};
}

std::map<std::string, std::uint64_t> file_hashes(const std::filesystem::path& root) {
  std::map<std::string, std::uint64_t> h;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root))
    if (e.is_regular_file())
      h[std::filesystem::relative(e.path(), root).generic_string()] = testing::fnv1a(testing::read_file(e.path()));
  return h;
}

Outcome determinism(const std::filesystem::path& a, const std::filesystem::path& b) {
  auto args_a = gen_args(a, 500, 42), args_b = gen_args(b, 500, 42);
  args_a.insert(args_a.end(), {"--workers", "1"});
  args_b.insert(args_b.end(), {"--workers", "8"});
  std::string err;
  if (run_gen(args_a, &err) != 0 || run_gen(args_b, &err) != 0) return {false, "gen failed: " + err};
  const bool manifest = testing::read_file(a / "manifest.jsonl") == testing::read_file(b / "manifest.jsonl");
  const auto ha = file_hashes(a), hb = file_hashes(b);
  return {manifest && ha == hb && ha.size() == 500 * 7 + 1,
          fmt("gen --count 500 --seed 42, 1 vs 8 workers: manifest %s, %zu files, content hashes %s",
              manifest ? "identical" : "DIFFERS", ha.size(), ha == hb ? "identical" : "DIFFER")};
}

Outcome scale_smoke(const std::filesystem::path& dir, double seconds, int gen_code) {
  std::size_t png = 0;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
    png += e.is_regular_file() && e.path().extension() == ".png";
  const bool manifest = std::filesystem::exists(dir / "manifest.jsonl");
  const double per_sample = seconds / 2000.0;
  return {gen_code == 0 && png == 14000 && manifest && seconds < 300.0,
          fmt("2000 samples, %zu PNGs + manifest in %.1f s (<300 s) on %u thread(s); 150k images ~ %.1f min, "
              "150k pairs ~ %.1f h",
              png, seconds, std::max(1u, std::thread::hardware_concurrency()), per_sample * 150000.0 / 7.0 / 60.0,
              per_sample * 150000.0 / 3600.0)};
}

}  // namespace
}  // namespace syn3dtxt

int main() {
  using namespace syn3dtxt;
  int failures = 0;
  const auto report = [&](const char* name, const Outcome& o) {
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failures += !o.pass;
  };
  const auto guarded = [&](const char* name, const std::function<Outcome()>& fn) {
    try {
      report(name, fn());
    } catch (const std::exception& e) {
      report(name, {false, std::string("exception: ") + e.what()});
    }
  };

  guarded("rotation_algebra", rotation_algebra);
  guarded("normal_encoding", normal_encoding);
  guarded("order_non_commutativity", non_commutativity);
  guarded("identity_cases", identity_cases);
  {
    TempDir dir("acc_dist");
    guarded("distribution_conformance", [&] { return distribution(dir.path()); });
  }
  {
    TempDir dir("acc_2000");
    auto args = gen_args(dir.path(), 2000, 7);
    args.insert(args.end(), {"--bend-fraction", "0.3"});
    const auto t0 = Clock::now();
    std::string err;
    const int code = run_gen(args, &err);
    const double t = seconds_since(t0);
    if (code != 0) std::cerr << err;
    ManifestContents m;
    if (code == 0) m = read_manifest(dir.path());
    guarded("self_consistency", [&] { return self_consistency(dir.path(), m); });
    guarded("pair_invariant", [&] { return pair_invariant(dir.path(), m); });
    guarded("scale_smoke", [&] { return scale_smoke(dir.path(), t, code); });
  }
  {
    TempDir a("acc_w1"), b("acc_w8");
    guarded("determinism", [&] { return determinism(a.path(), b.path()); });
  }
  std::cout << (failures ? "FAILED: " : "ALL PASSED") << (failures ? std::to_string(failures) + " criteria" : "")
            << std::endl;
  return failures ? 1 : 0;
}
