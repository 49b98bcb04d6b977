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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "syn3dtxt/error.hpp"
#include "syn3dtxt/warp.hpp"
#include "test_support.hpp"

namespace syn3dtxt {
namespace {

const FontSet& fonts() {
  static const FontSet f = load_fonts(testing::fonts_dir());
  return f;
}

const WordCorpus& corpus() {
  static const WordCorpus c = load_corpus(testing::corpus_file());
  return c;
}

const CameraModel kCam = CameraModel::for_canvas(256, 64);

std::optional<PixelBox> label_bounds(const TextMask& m, int label) {
  std::optional<PixelBox> b;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (m.labels.at(x, y) != label || m.alpha.at(x, y) == 0) continue;
      if (!b) {
        b = PixelBox{x, y, x, y};
      } else {
        b->x0 = std::min(b->x0, x);
        b->x1 = std::max(b->x1, x);
        b->y0 = std::min(b->y0, y);
        b->y1 = std::max(b->y1, y);
      }
    }
  }
  return b;
}

double center_y(const PixelBox& b) { return 0.5 * (b.y0 + b.y1); }

std::map<std::uint32_t, std::size_t> color_histogram(const Image& normals, const Image& binary) {
  std::map<std::uint32_t, std::size_t> h;
  for (int y = 0; y < binary.height(); ++y) {
    for (int x = 0; x < binary.width(); ++x) {
      if (binary.at(x, y) == 0) continue;
      h[(std::uint32_t(normals.at(x, y, 0)) << 16) | (std::uint32_t(normals.at(x, y, 1)) << 8) |
        normals.at(x, y, 2)]++;
    }
  }
  return h;
}

Rgb unpack(std::uint32_t v) { return {std::uint8_t(v >> 16), std::uint8_t(v >> 8), std::uint8_t(v)}; }

void expect_support_matches(const WarpedText& t) {
  std::size_t above = 0, bin = 0, mismatched = 0;
  for (int y = 0; y < t.alpha.height(); ++y) {
    for (int x = 0; x < t.alpha.width(); ++x) {
      above += t.alpha.at(x, y) > kInkThreshold;
      const std::uint8_t b = t.binary.at(x, y);
      ASSERT_TRUE(b == 0 || b == 255);
      bin += b == 255;
      const bool colored = t.normals.at(x, y, 0) || t.normals.at(x, y, 1) || t.normals.at(x, y, 2);
      mismatched += colored != (b == 255);
    }
  }
  EXPECT_EQ(above, bin);
  EXPECT_EQ(mismatched, 0u);
}

TEST(ArcParams, Validation) {
  EXPECT_NO_THROW((ArcParams{60, ArcDirection::ArchDown}.validate()));
  EXPECT_THROW((ArcParams{90, ArcDirection::ArchUp}.validate()), InvalidArgument);
  EXPECT_EQ(arc_direction_from_string("ArchUp"), ArcDirection::ArchUp);
  EXPECT_EQ(arc_direction_from_string("down"), ArcDirection::ArchDown);
  EXPECT_THROW(arc_direction_from_string("left"), InvalidArgument);
}

TEST(ArcWarp, ZeroIsByteIdentity) {
  for (auto dir : {ArcDirection::ArchUp, ArcDirection::ArchDown}) {
    const TextMask m = rasterize("identity", 0, fonts(), 256, 64);
    const TextMask out = arc_warp(m, {0, dir});
    EXPECT_EQ(out.alpha, m.alpha);
    EXPECT_EQ(out.labels, m.labels);
    EXPECT_EQ(out.glyphs, m.glyphs);
    EXPECT_EQ(out.baseline_y, m.baseline_y);
    EXPECT_EQ(out.scale, m.scale);
  }
}

TEST(ArcWarp, HelloLiftsSymmetrically) {
  for (auto dir : {ArcDirection::ArchUp, ArcDirection::ArchDown}) {
    const TextMask out = arc_warp(rasterize("HELLO", 0, fonts(), 256, 64), {120, dir});
    const auto first = label_bounds(out, 1);
    const auto middle = label_bounds(out, 3);
    const auto last = label_bounds(out, 5);
    ASSERT_TRUE(first && middle && last);
    const double left_lift = center_y(*middle) - center_y(*first);
    const double right_lift = center_y(*middle) - center_y(*last);
    EXPECT_LE(std::abs(left_lift - right_lift), 2.0);
    // Hump: the ends sit below the middle; bowl: above.
    if (dir == ArcDirection::ArchUp) {
      EXPECT_LT(left_lift, -2.0);
    } else {
      EXPECT_GT(left_lift, 2.0);
    }
  }
}

void expect_contained(const TextMask& m) {
  const auto b = ink_bounds(m.alpha);
  ASSERT_TRUE(b.has_value());
  EXPECT_GE(b->x0, 0);
  EXPECT_GE(b->y0, 0);
  EXPECT_LE(b->x1, m.width() - 1);
  EXPECT_LE(b->y1, m.height() - 1);
}

TEST(ArcWarp, TwiceSixtyAndOnceOneTwentyStayInCanvas) {
  const TextMask m = rasterize("Containment", 2, fonts(), 256, 64);
  const TextMask twice = arc_warp(arc_warp(m, {60, ArcDirection::ArchUp}), {60, ArcDirection::ArchUp});
  const TextMask once = arc_warp(m, {120, ArcDirection::ArchUp});
  expect_contained(twice);
  expect_contained(once);
  EXPECT_FALSE(twice.alpha == once.alpha);
  // Scale-corrected mass shows nothing was clipped.
  const double base = static_cast<double>(channel_sum(m.alpha));
  EXPECT_NEAR(channel_sum(once.alpha) / (once.scale * once.scale), base, 0.15 * base);
}

TEST(ArcWarp, GlyphBoxesFollowTheText) {
  const TextMask out = arc_warp(rasterize("Glyphs", 1, fonts(), 256, 64), {120, ArcDirection::ArchDown});
  ASSERT_EQ(out.glyphs.size(), 6u);
  for (std::size_t i = 1; i < out.glyphs.size(); ++i) {
    EXPECT_GT(out.glyphs[i].center(), out.glyphs[i - 1].center());
  }
}

TEST(ArcWarpProperty, MassPreservedWithinFifteenPercent) {
  std::mt19937_64 g(41);
  for (int i = 0; i < 150; ++i) {
    const std::string& word = corpus().words[g() % corpus().words.size()];
    const int font = static_cast<int>(g() % 3);
    const TextMask m = rasterize(word, font, fonts(), 256, 64);
    const double base = static_cast<double>(channel_sum(m.alpha));
    for (int level : {60, 120}) {
      for (auto dir : {ArcDirection::ArchUp, ArcDirection::ArchDown}) {
        const TextMask out = arc_warp(m, {level, dir});
        const double mass = channel_sum(out.alpha) / (out.scale * out.scale);
        ASSERT_LE(std::abs(mass - base), 0.15 * base) << word << " " << level;
        ASSERT_LE(out.scale, 1.0);
        ASSERT_EQ(out.width(), 256);
        ASSERT_EQ(out.height(), 64);
      }
    }
  }
}

TEST(BendParams, Validation) {
  EXPECT_NO_THROW(BendParams{30}.validate());
  EXPECT_NO_THROW(BendParams{120}.validate());
  EXPECT_THROW(BendParams{29.9}.validate(), InvalidArgument);
  EXPECT_THROW(BendParams{120.1}.validate(), InvalidArgument);
}

TEST(GlyphStations, EndpointsAndSingleGlyph) {
  EXPECT_EQ(glyph_stations({{'A', 10, 20}}, 90), (std::vector<double>{0.0}));
  EXPECT_THROW(glyph_stations({}, 90), InvalidArgument);
  const auto s = glyph_stations({{'a', 0, 9}, {'b', 10, 19}, {'c', 20, 29}}, 60);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s[0], -30.0);
  EXPECT_DOUBLE_EQ(s[1], 0.0);
  EXPECT_DOUBLE_EQ(s[2], 30.0);
}

TEST(GlyphStationsProperty, IncreasingAndSymmetric) {
  std::mt19937_64 g(42);
  std::uniform_real_distribution<double> sweep(kMinSweepDeg, kMaxSweepDeg);
  for (int i = 0; i < 300; ++i) {
    const std::string& word = corpus().words[g() % corpus().words.size()];
    const TextMask m = rasterize(word, static_cast<int>(g() % 3), fonts(), 256, 64);
    if (m.glyphs.size() < 2) continue;
    const double sw = sweep(g);
    const auto s = glyph_stations(m.glyphs, sw);
    ASSERT_EQ(s.size(), m.glyphs.size());
    ASSERT_NEAR(s.front(), -sw / 2, 1e-9);
    ASSERT_NEAR(s.back(), sw / 2, 1e-9);
    int widest = 0;
    for (const auto& b : m.glyphs) widest = std::max(widest, b.width());
    const double span = m.glyphs.back().center() - m.glyphs.front().center();
    const double quantum = sw * widest / span;
    double mean = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0) ASSERT_GT(s[k], s[k - 1]) << word;
      mean += s[k] / static_cast<double>(s.size());
    }
    ASSERT_LE(std::abs(mean), quantum) << word;
  }
}

TEST(CylinderBend, SingleGlyphIsUnrotatedNormal) {
  const BendResult r = cylinder_bend(rasterize("A", 0, fonts(), 256, 64), {60}, kCam);
  EXPECT_EQ(r.station_deg, (std::vector<double>{0.0}));
  const auto h = color_histogram(r.text.normals, r.text.binary);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(unpack(h.begin()->first), (Rgb{128, 128, 255}));
  expect_support_matches(r.text);
}

TEST(CylinderBend, HelloOneTwentyHasMonotonicYaws) {
  const BendResult r = cylinder_bend(rasterize("HELLO", 0, fonts(), 256, 64), {120}, kCam);
  const auto h = color_histogram(r.text.normals, r.text.binary);
  ASSERT_EQ(h.size(), 5u);
  // Modal color per glyph, glyphs ordered by their ink centroid.
  std::map<std::uint32_t, std::pair<double, std::size_t>> centroid;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) {
      if (r.text.binary.at(x, y) == 0) continue;
      const std::uint32_t c = (std::uint32_t(r.text.normals.at(x, y, 0)) << 16) |
                              (std::uint32_t(r.text.normals.at(x, y, 1)) << 8) | r.text.normals.at(x, y, 2);
      centroid[c].first += x;
      centroid[c].second++;
    }
  }
  std::vector<std::pair<double, double>> glyphs;
  for (const auto& [c, acc] : centroid) {
    glyphs.emplace_back(acc.first / acc.second, yaw_from_normal(decode_normal(EncodedNormal::from(unpack(c)))));
  }
  std::sort(glyphs.begin(), glyphs.end());
  for (std::size_t i = 1; i < glyphs.size(); ++i) EXPECT_GT(glyphs[i].second, glyphs[i - 1].second);
  EXPECT_NEAR(glyphs.back().second - glyphs.front().second, 120.0, 5.0);
  expect_support_matches(r.text);
}

TEST(CylinderBend, RejectsOutOfRangeSweep) {
  EXPECT_THROW(cylinder_bend(rasterize("abc", 0, fonts(), 256, 64), {150}, kCam), InvalidArgument);
}

TEST(CylinderBendProperty, ColorsAreStationEncodings) {
  std::mt19937_64 g(43);
  std::uniform_real_distribution<double> sweep(kMinSweepDeg, kMaxSweepDeg);
  for (int i = 0; i < 120; ++i) {
    const std::string& word = corpus().words[g() % corpus().words.size()];
    TextMask m = rasterize(word, static_cast<int>(g() % 3), fonts(), 256, 64);
    m = arc_warp(m, {kArcLevels[g() % 3], g() % 2 ? ArcDirection::ArchUp : ArcDirection::ArchDown});
    const BendResult r = cylinder_bend(m, {sweep(g)}, kCam);
    ASSERT_EQ(r.station_deg.size(), m.glyphs.size());
    std::set<std::uint32_t> allowed;
    for (double s : r.station_deg) {
      const Rgb c = encode_normal(plane_normal(rot_yaw(s))).rgb();
      allowed.insert((std::uint32_t(c.r) << 16) | (std::uint32_t(c.g) << 8) | c.b);
    }
    for (const auto& [c, n] : color_histogram(r.text.normals, r.text.binary)) {
      ASSERT_TRUE(allowed.count(c)) << word;
    }
    expect_support_matches(r.text);
    ASSERT_TRUE(ink_bounds(r.text.binary).has_value()) << word;
  }
}

TEST(PlanarRotate, ZeroSpecHomographyIsIdentityOnCorners) {
  const Homography h = planar_homography(256, 64, compose_rotation({}), kCam);
  for (Point2 p : {Point2{-0.5, -0.5}, Point2{255.5, -0.5}, Point2{255.5, 63.5}, Point2{-0.5, 63.5}}) {
    const Point2 q = h.apply(p);
    EXPECT_NEAR(q.x, p.x, 1e-6);
    EXPECT_NEAR(q.y, p.y, 1e-6);
  }
  const TextMask m = rasterize("flat", 0, fonts(), 256, 64);
  const WarpedText t = planar_rotate(m, {}, kCam);
  EXPECT_EQ(t.alpha, m.alpha);
}

TEST(PlanarRotateProperty, SingleNormalAndProjectedPlaneInsideCanvas) {
  std::mt19937_64 g(44);
  std::uniform_real_distribution<double> a(-70.0, 70.0);
  for (int i = 0; i < 200; ++i) {
    const RotationSpec spec{a(g), a(g), a(g), g() % 2 ? OrderPolicy::NearField : OrderPolicy::FarField};
    const Mat4 rot = compose_rotation(spec);
    const Homography h = planar_homography(256, 64, rot, kCam);
    for (Point2 p : {Point2{-0.5, -0.5}, Point2{255.5, -0.5}, Point2{255.5, 63.5}, Point2{-0.5, 63.5}}) {
      const Point2 q = h.apply(p);
      ASSERT_GE(q.x, -0.5 - 1e-6);
      ASSERT_LE(q.x, 255.5 + 1e-6);
      ASSERT_GE(q.y, -0.5 - 1e-6);
      ASSERT_LE(q.y, 63.5 + 1e-6);
    }
    const std::string& word = corpus().words[g() % corpus().words.size()];
    const WarpedText t = planar_rotate(rasterize(word, 0, fonts(), 256, 64), spec, kCam);
    const auto hist = color_histogram(t.normals, t.binary);
    ASSERT_LE(hist.size(), 1u);
    if (!hist.empty()) {
      ASSERT_EQ(unpack(hist.begin()->first), encode_normal(plane_normal(rot)).rgb());
    }
    expect_support_matches(t);
  }
}

}  // namespace
}  // namespace syn3dtxt
