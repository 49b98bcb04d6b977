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

#include <random>

#include <gtest/gtest.h>

#include "syn3dtxt/compositor.hpp"
#include "syn3dtxt/error.hpp"
#include "syn3dtxt/image_io.hpp"
#include "test_support.hpp"

namespace syn3dtxt {
namespace {

using testing::TempDir;

const FontSet& fonts() {
  static const FontSet f = load_fonts(testing::fonts_dir());
  return f;
}

const BackgroundPool& pool() {
  static const BackgroundPool p = load_backgrounds(testing::backgrounds_dir());
  return p;
}

const CameraModel kCam = CameraModel::for_canvas(256, 64);

WarpedText blank_text(int w, int h) { return {Image(w, h, 1), Image(w, h, 3), Image(w, h, 1)}; }

RenderParams flat_params(const RotationSpec& spec, Rgb fill) {
  RenderParams p;
  p.rotation = spec;
  p.camera = kCam;
  p.fill = fill;
  return p;
}

TEST(Contrast, Examples) {
  const PixelBox all{0, 0, 15, 15};
  EXPECT_TRUE(contrast_ok({255, 255, 255}, Image(16, 16, 3, 0), all));
  EXPECT_FALSE(contrast_ok({128, 128, 128}, Image(16, 16, 3, 128), all));
  // luma(200, 0, 0) = 0.299 * 200 = 59.8; background luma 60 -> |diff| = 0.2.
  EXPECT_NEAR(contrast({200, 0, 0}, Image(16, 16, 3, 60), all), 0.2, 1e-9);
  EXPECT_FALSE(contrast_ok({200, 0, 0}, Image(16, 16, 3, 60), all));
  // Exactly at the floor passes.
  EXPECT_TRUE(contrast_ok({90, 90, 90}, Image(16, 16, 3, 60), all));
}

TEST(Contrast, UsesOnlyTheRegion) {
  Image bg(32, 8, 3, 0);
  for (int y = 0; y < 8; ++y)
    for (int x = 16; x < 32; ++x)
      for (int c = 0; c < 3; ++c) bg.at(x, y, c) = 255;
  EXPECT_NEAR(contrast({255, 255, 255}, bg, {16, 0, 31, 7}), 0.0, 1e-9);
  EXPECT_NEAR(contrast({255, 255, 255}, bg, {0, 0, 15, 7}), 255.0, 1e-9);
}

TEST(LoadBackgrounds, SortedAndRejectsEmpty) {
  ASSERT_EQ(pool().files.size(), 8u);
  EXPECT_TRUE(std::is_sorted(pool().files.begin(), pool().files.end()));
  TempDir dir("bg_empty");
  EXPECT_THROW(load_backgrounds(dir.path()), ConfigError);
  EXPECT_THROW(load_backgrounds(dir / "missing"), ConfigError);
}

TEST(CropBackground, DeterministicUnderFixedStream) {
  for (int i = 0; i < 20; ++i) {
    SampleRng a(3, i), b(3, i);
    const BackgroundCrop x = crop_background(pool(), a, 256, 64);
    const BackgroundCrop y = crop_background(pool(), b, 256, 64);
    ASSERT_EQ(x.image, y.image);
    ASSERT_EQ(x.source_index, y.source_index);
    ASSERT_EQ(x.rect, y.rect);
    ASSERT_EQ(x.image.width(), 256);
    ASSERT_EQ(x.image.height(), 64);
    ASSERT_EQ(x.image.channels(), 3);
  }
}

TEST(CropBackground, CropRectInsideSourceWithCanvasAspect) {
  for (int i = 0; i < 200; ++i) {
    SampleRng r(4, i);
    const BackgroundCrop c = crop_background(pool(), r, 256, 64);
    const Image src = read_image(pool().files[c.source_index]);
    ASSERT_GE(c.rect[0], 0.0);
    ASSERT_GE(c.rect[1], 0.0);
    ASSERT_LE(c.rect[0] + c.rect[2], src.width() + 1e-9);
    ASSERT_LE(c.rect[1] + c.rect[3], src.height() + 1e-9);
    ASSERT_NEAR(c.rect[2] / c.rect[3], 4.0, 1e-9);
  }
}

TEST(CropBackground, SmallSourceIsUpscaled) {
  TempDir dir("bg_small");
  std::filesystem::copy_file(testing::backgrounds_dir() / "bg_05.png", dir / "small.png");
  const BackgroundPool p = load_backgrounds(dir.path());
  SampleRng r(5, 0);
  const BackgroundCrop c = crop_background(p, r, 256, 64);
  EXPECT_EQ(c.image.width(), 256);
  EXPECT_EQ(c.image.height(), 64);
  // 200x50 source: the whole image is the only crop with the canvas aspect.
  EXPECT_NEAR(c.rect[2], 200.0, 1e-9);
  EXPECT_NEAR(c.rect[3], 50.0, 1e-9);
}

TEST(CropBackground, FiveUndecodableDrawsAreFatal) {
  TempDir dir("bg_bad");
  for (const char* name : {"a.png", "b.jpg", "c.png"}) testing::write_file(dir / name, "garbage bytes");
  const BackgroundPool p = load_backgrounds(dir.path());
  SampleRng r(6, 0);
  EXPECT_THROW(crop_background(p, r, 256, 64), ConfigError);
}

TEST(CropBackground, BadFilesAreRedrawn) {
  TempDir dir("bg_mixed");
  testing::write_file(dir / "a_bad.png", "garbage");
  std::filesystem::copy_file(testing::backgrounds_dir() / "bg_00.png", dir / "b_good.png");
  const BackgroundPool p = load_backgrounds(dir.path());
  int ok = 0;
  for (int i = 0; i < 40; ++i) {
    SampleRng r(7, i);
    try {
      ok += crop_background(p, r, 256, 64).source_index == 1;
    } catch (const ConfigError&) {
      // 1 in 32 streams draws the bad file five times in a row.
    }
  }
  EXPECT_GE(ok, 30);
}

TEST(CompositePair, BlankMaskLeavesBackground) {
  SampleRng r(8, 0);
  const Image bg = crop_background(pool(), r, 256, 64).image;
  const RenderParams p = flat_params({}, {255, 0, 0});
  const RenderedSample s = composite_pair(blank_text(256, 64), p, blank_text(256, 64), p, bg);
  EXPECT_EQ(s.i_s, bg);
  EXPECT_EQ(s.i_t, bg);
  EXPECT_EQ(s.t_b, bg);
}

TEST(CompositePair, FlatSampleMaskIsOneColor) {
  const RotationSpec spec{20, -30, 40, OrderPolicy::FarField};
  const WarpedText ts = planar_rotate(rasterize("source", 0, fonts(), 256, 64), spec, kCam);
  const WarpedText tt = planar_rotate(rasterize("target", 0, fonts(), 256, 64), spec, kCam);
  const RenderParams p = flat_params(spec, {10, 200, 30});
  const RenderedSample s = composite_pair(ts, p, tt, p, Image(256, 64, 3, 90));
  const Rgb expected = encode_normal(plane_normal(compose_rotation(spec))).rgb();
  std::size_t ink = 0;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) {
      const Rgb m{s.mask_s.at(x, y, 0), s.mask_s.at(x, y, 1), s.mask_s.at(x, y, 2)};
      if (s.bin_s.at(x, y) == 255) {
        ASSERT_EQ(m, expected);
        ++ink;
      } else {
        ASSERT_EQ(m, (Rgb{0, 0, 0}));
      }
    }
  }
  EXPECT_GT(ink, 100u);
}

TEST(CompositePair, Deterministic) {
  const WarpedText t = planar_rotate(rasterize("same", 1, fonts(), 256, 64), {}, kCam);
  const WarpedText u = planar_rotate(rasterize("other", 1, fonts(), 256, 64), {}, kCam);
  const RenderParams p = flat_params({}, {0, 0, 0});
  SampleRng r(9, 0);
  const Image bg = crop_background(pool(), r, 256, 64).image;
  const RenderedSample a = composite_pair(t, p, u, p, bg);
  const RenderedSample b = composite_pair(t, p, u, p, bg);
  EXPECT_EQ(a.i_s, b.i_s);
  EXPECT_EQ(a.i_t, b.i_t);
  EXPECT_EQ(a.mask_s, b.mask_s);
  EXPECT_EQ(a.bin_t, b.bin_t);
}

TEST(CompositePair, MismatchedParamsRejected) {
  const WarpedText t = blank_text(256, 64);
  const RenderParams p = flat_params({}, {0, 0, 0});
  RenderParams q = p;
  q.fill = {1, 0, 0};
  EXPECT_THROW(composite_pair(t, p, t, q, Image(256, 64, 3)), PairingError);
  q = p;
  q.rotation.yaw_phi = 30;
  EXPECT_THROW(composite_pair(t, p, t, q, Image(256, 64, 3)), PairingError);
  q = p;
  q.arc.total_angle = 60;
  EXPECT_THROW(composite_pair(t, p, t, q, Image(256, 64, 3)), PairingError);
  q = p;
  q.font_id = 2;
  EXPECT_THROW(composite_pair(t, p, t, q, Image(256, 64, 3)), PairingError);
}

TEST(CompositePair, MismatchedShapesRejected) {
  const RenderParams p = flat_params({}, {0, 0, 0});
  EXPECT_THROW(composite_pair(blank_text(128, 32), p, blank_text(128, 32), p, Image(256, 64, 3)),
               InvalidArgument);
}

TEST(CompositePairProperty, PairInvariantAndOpaqueInk) {
  std::mt19937_64 g(51);
  std::uniform_real_distribution<double> a(-70.0, 70.0);
  const WordCorpus corpus = load_corpus(testing::corpus_file());
  for (int i = 0; i < 60; ++i) {
    const RotationSpec spec{a(g), a(g), a(g), g() % 2 ? OrderPolicy::NearField : OrderPolicy::FarField};
    const int font = static_cast<int>(g() % 3);
    const WarpedText ts = planar_rotate(rasterize(corpus.words[g() % corpus.words.size()], font, fonts(), 256, 64), spec, kCam);
    const WarpedText tt = planar_rotate(rasterize(corpus.words[g() % corpus.words.size()], font, fonts(), 256, 64), spec, kCam);
    const Rgb fill{std::uint8_t(g()), std::uint8_t(g()), std::uint8_t(g())};
    RenderParams p = flat_params(spec, fill);
    p.font_id = font;
    SampleRng r(10, i);
    const Image bg = crop_background(pool(), r, 256, 64).image;
    const RenderedSample s = composite_pair(ts, p, tt, p, bg);
    for (int y = 0; y < 64; ++y) {
      for (int x = 0; x < 256; ++x) {
        const bool in_s = s.bin_s.at(x, y) == 255;
        const bool in_t = s.bin_t.at(x, y) == 255;
        for (int c = 0; c < 3; ++c) {
          if (!in_s) ASSERT_EQ(s.i_s.at(x, y, c), s.t_b.at(x, y, c));
          if (!in_t) ASSERT_EQ(s.i_t.at(x, y, c), s.t_b.at(x, y, c));
          if (!in_s && !in_t) ASSERT_EQ(s.i_s.at(x, y, c), s.i_t.at(x, y, c));
        }
        if (ts.alpha.at(x, y) == 255) {
          ASSERT_EQ(s.i_s.at(x, y, 0), fill.r);
          ASSERT_EQ(s.i_s.at(x, y, 1), fill.g);
          ASSERT_EQ(s.i_s.at(x, y, 2), fill.b);
        }
      }
    }
    ASSERT_EQ(s.t_b, bg);
  }
}

}  // namespace
}  // namespace syn3dtxt
