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

#include <gtest/gtest.h>

#include "syn3dtxt/error.hpp"
#include "syn3dtxt/textraster.hpp"
#include "test_support.hpp"

namespace syn3dtxt {
namespace {

using testing::TempDir;

const FontSet& fonts() {
  static const FontSet f = load_fonts(testing::fonts_dir());
  return f;
}

std::size_t non_space(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return c != ' '; }));
}

TEST(LoadFonts, SortedByFileName) {
  const FontSet& f = fonts();
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.at(0).file_path.filename(), "DejaVuSans.ttf");
  EXPECT_EQ(f.at(1).file_path.filename(), "DejaVuSansMono.ttf");
  EXPECT_EQ(f.at(2).file_path.filename(), "DejaVuSerif-Bold.ttf");
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(f.at(i).font_id, i);
    EXPECT_FALSE(f.at(i).display_name.empty());
  }
  EXPECT_THROW(f.at(3), InvalidArgument);
}

TEST(LoadFonts, SeventyFontDirectory) {
  TempDir dir("fonts70");
  for (int i = 0; i < 70; ++i) {
    std::filesystem::copy_file(testing::fonts_dir() / "DejaVuSans.ttf",
                               dir / ("font_" + std::to_string(100 + i) + ".ttf"));
  }
  EXPECT_EQ(load_fonts(dir.path()).size(), 70u);
}

TEST(LoadFonts, EmptyOrMissingDirectoryIsConfigError) {
  TempDir dir("fonts_empty");
  EXPECT_THROW(load_fonts(dir.path()), ConfigError);
  EXPECT_THROW(load_fonts(dir / "missing"), ConfigError);
  testing::write_file(dir / "readme.txt", "not a font");
  EXPECT_THROW(load_fonts(dir.path()), ConfigError);
}

TEST(LoadFonts, CorruptFileSkippedWithWarning) {
  TempDir dir("fonts_corrupt");
  for (const char* name : {"a.ttf", "b.ttf", "c.ttf"}) {
    std::filesystem::copy_file(testing::fonts_dir() / "DejaVuSansMono.ttf", dir / name);
  }
  testing::write_file(dir / "broken.ttf", std::string(4096, '\x5a'));
  std::vector<std::string> warnings;
  const FontSet f = load_fonts(dir.path(), &warnings);
  EXPECT_EQ(f.size(), 3u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("broken.ttf"), std::string::npos);
}

TEST(FontSet, Covers) {
  EXPECT_TRUE(fonts().covers(0, "Hello World 42"));
  EXPECT_FALSE(fonts().covers(0, "\x01"));
}

TEST(LoadCorpus, DropsEmptyLines) {
  TempDir dir("corpus");
  testing::write_file(dir / "c.txt", "hello\nWORLD\n\n");
  const WordCorpus c = load_corpus(dir / "c.txt");
  EXPECT_EQ(c.words, (std::vector<std::string>{"hello", "WORLD"}));
  EXPECT_EQ(c.dropped, 1u);
}

TEST(LoadCorpus, DropsOverlongAndOffCharsetLines) {
  TempDir dir("corpus");
  testing::write_file(dir / "c.txt", "alpha\n" + std::string(40, 'x') + "\n  beta \r\ncaf\xc3\xa9\n" +
                                         std::string(24, 'y') + "\n");
  const WordCorpus c = load_corpus(dir / "c.txt");
  EXPECT_EQ(c.words, (std::vector<std::string>{"alpha", "beta", std::string(24, 'y')}));
  EXPECT_EQ(c.dropped, 2u);
  const WordCorpus lower = load_corpus(dir / "c.txt", "abcdefghijklmnopqrstuvwxyz");
  EXPECT_EQ(lower.words, (std::vector<std::string>{"alpha", "beta", std::string(24, 'y')}));
  const WordCorpus digits = load_corpus(dir / "c.txt", "abehlpt");
  EXPECT_EQ(digits.words, (std::vector<std::string>{"alpha", "beta"}));
}

TEST(LoadCorpus, MissingFileIsIoError) {
  EXPECT_THROW(load_corpus(testing::data_dir() / "no_such_corpus.txt"), IoError);
}

TEST(LoadCorpus, NoValidWordsIsConfigError) {
  TempDir dir("corpus");
  testing::write_file(dir / "c.txt", "\n\n" + std::string(30, 'z') + "\n");
  EXPECT_THROW(load_corpus(dir / "c.txt"), ConfigError);
}

TEST(LoadCorpus, BundledCorpusIsClean) {
  const WordCorpus c = load_corpus(testing::corpus_file());
  EXPECT_GT(c.words.size(), 1000u);
  EXPECT_EQ(c.dropped, 0u);
}

TEST(Rasterize, HelloHasFiveCenteredGlyphs) {
  for (int font = 0; font < 3; ++font) {
    const TextMask m = rasterize("hello", font, fonts(), 256, 64);
    ASSERT_EQ(m.glyphs.size(), 5u);
    EXPECT_EQ(m.width(), 256);
    EXPECT_EQ(m.height(), 64);
    const auto bb = ink_bounds(m.alpha);
    ASSERT_TRUE(bb.has_value());
    EXPECT_NEAR(0.5 * (bb->x0 + bb->x1 + 1), 128.0, 2.0);
    EXPECT_NEAR(0.5 * (bb->y0 + bb->y1 + 1), 32.0, 2.0);
    const std::string text = "hello";
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(m.glyphs[i].ch, text[i]);
  }
}

TEST(Rasterize, SingleCapitalIsHeightBound) {
  for (int font = 0; font < 3; ++font) {
    const TextMask m = rasterize("I", font, fonts(), 256, 64);
    const auto bb = ink_bounds(m.alpha);
    ASSERT_TRUE(bb.has_value());
    EXPECT_GE(bb->y1 - bb->y0 + 1, 38);
  }
}

TEST(Rasterize, Deterministic) {
  const TextMask a = rasterize("Determinism", 2, fonts(), 256, 64);
  const TextMask b = rasterize("Determinism", 2, fonts(), 256, 64);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.glyphs, b.glyphs);
  EXPECT_EQ(a.baseline_y, b.baseline_y);
}

TEST(Rasterize, SpacesHaveNoGlyphBox) {
  const TextMask m = rasterize("a b  c", 0, fonts(), 256, 64);
  ASSERT_EQ(m.glyphs.size(), 3u);
  EXPECT_EQ(m.glyphs[0].ch, 'a');
  EXPECT_EQ(m.glyphs[2].ch, 'c');
}

TEST(Rasterize, MissingGlyphIsCoverageError) {
  EXPECT_THROW(rasterize("ab\x01", 0, fonts(), 256, 64), GlyphCoverageError);
}

TEST(Rasterize, RejectsTinyCanvasAndEmptyText) {
  EXPECT_THROW(rasterize("abc", 0, fonts(), 15, 64), InvalidArgument);
  EXPECT_THROW(rasterize("", 0, fonts(), 256, 64), InvalidArgument);
}

TEST(RasterizeProperty, CorpusWordsMeetLayoutContract) {
  const WordCorpus corpus = load_corpus(testing::corpus_file());
  for (std::size_t i = 0; i < corpus.words.size() * 3; ++i) {
    const std::string& word = corpus.words[i / 3];
    const int font = static_cast<int>(i % 3);
    const int w = 256, h = 64;
    const TextMask m = rasterize(word, font, fonts(), w, h);
    SCOPED_TRACE(word);
    ASSERT_EQ(m.glyphs.size(), non_space(word));
    const auto bb = ink_bounds(m.alpha);
    ASSERT_TRUE(bb.has_value());
    const int ink_w = bb->x1 - bb->x0 + 1;
    const int ink_h = bb->y1 - bb->y0 + 1;
    ASSERT_TRUE(ink_w >= 0.6 * w || ink_h >= 0.6 * h) << ink_w << "x" << ink_h;
    ASSERT_NEAR(0.5 * (bb->x0 + bb->x1 + 1), w / 2.0, 2.0);
    ASSERT_NEAR(0.5 * (bb->y0 + bb->y1 + 1), h / 2.0, 2.0);
    for (std::size_t k = 0; k < m.glyphs.size(); ++k) {
      const GlyphBox& b = m.glyphs[k];
      ASSERT_GE(b.x_min, 0);
      ASSERT_LT(b.x_max, w);
      if (k == 0) continue;
      const GlyphBox& prev = m.glyphs[k - 1];
      ASSERT_GE(b.center(), prev.center());
      const int overlap = prev.x_max - b.x_min + 1;
      if (overlap > 0) {
        ASSERT_LE(overlap, 0.3 * std::min(prev.width(), b.width())) << k;
      }
    }
  }
}

TEST(RasterizeProperty, LabelsLieInsideTheirGlyphColumns) {
  const TextMask m = rasterize("Kerning AVAWAY", 0, fonts(), 256, 64);
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      const int label = m.labels.at(x, y);
      if (label == 0) {
        ASSERT_EQ(m.alpha.at(x, y), 0);
        continue;
      }
      ASSERT_LE(static_cast<std::size_t>(label), m.glyphs.size());
      const GlyphBox& b = m.glyphs[label - 1];
      ASSERT_GE(x, b.x_min);
      ASSERT_LE(x, b.x_max);
    }
  }
}

TEST(RasterizeProperty, OtherCanvasSizes) {
  for (auto [w, h] : {std::pair{128, 32}, std::pair{64, 16}, std::pair{512, 128}}) {
    const TextMask m = rasterize("Canvas", 1, fonts(), w, h);
    EXPECT_EQ(m.width(), w);
    EXPECT_EQ(m.height(), h);
    const auto bb = ink_bounds(m.alpha);
    ASSERT_TRUE(bb.has_value());
    EXPECT_TRUE(bb->x1 - bb->x0 + 1 >= 0.6 * w || bb->y1 - bb->y0 + 1 >= 0.6 * h);
  }
}

}  // namespace
}  // namespace syn3dtxt
