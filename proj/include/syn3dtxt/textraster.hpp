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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "syn3dtxt/image.hpp"

namespace syn3dtxt {

/// Horizontal ink extent of one rendered character (inclusive columns).
struct GlyphBox {
  char ch = 0;
  int x_min = 0;
  int x_max = -1;

  int width() const { return x_max - x_min + 1; }
  double center() const { return 0.5 * (x_min + x_max + 1); }
  friend bool operator==(const GlyphBox&, const GlyphBox&) = default;
};

/// The flat text plane: 8-bit coverage plus, per pixel, which glyph owns it
/// (0 = none, i + 1 = glyphs[i]).
struct TextMask {
  Image alpha;
  Image labels;
  int baseline_y = 0;
  std::vector<GlyphBox> glyphs;
  /// Uniform scale applied since rasterization (arc fitting shrinks).
  double scale = 1.0;

  int width() const { return alpha.width(); }
  int height() const { return alpha.height(); }
};

struct FontEntry {
  int font_id = 0;
  std::string display_name;
  std::filesystem::path file_path;
  std::shared_ptr<const std::vector<std::uint8_t>> data;
};

/// Immutable after load; safe to share across threads.
class FontSet {
 public:
  FontSet() = default;
  explicit FontSet(std::vector<FontEntry> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const FontEntry& at(int font_id) const;
  const std::vector<FontEntry>& entries() const { return entries_; }

  /// Whether every non-space character of `text` has a glyph in the font.
  bool covers(int font_id, std::string_view text) const;

 private:
  std::vector<FontEntry> entries_;
};

/// Characters every loaded font must render.
inline constexpr std::string_view kProbeCharset =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// Loads *.ttf / *.otf / *.ttc files in lexicographic file-name order. Fonts
/// that fail to load or lack a probe character are skipped with a warning
/// (appended to `warnings` and logged to stderr). Throws ConfigError when no
/// usable font remains.
FontSet load_fonts(const std::filesystem::path& dir, std::vector<std::string>* warnings = nullptr);

/// Printable ASCII, space through tilde.
inline constexpr std::string_view kDefaultCharset =
    " !\"#$%&'()*+,-./0123456789:;<=>?@ABCDEFGHIJKLMNOPQRSTUVWXYZ[\\]^_`abcdefghijklmnopqrstuvwxyz{|}~";

inline constexpr std::size_t kMaxWordLength = 24;

struct WordCorpus {
  std::vector<std::string> words;
  std::size_t dropped = 0;
};

/// One word per line; surrounding whitespace is trimmed. Lines that end up
/// empty, longer than kMaxWordLength, or containing characters outside
/// `charset` are dropped and counted.
WordCorpus load_corpus(const std::filesystem::path& file,
                       std::string_view charset = kDefaultCharset);

/// Fraction of the binding canvas dimension the ink is scaled to.
inline constexpr double kTextFill = 0.8;

/// Renders `text` centered on a canvas_w x canvas_h plane with anti-aliased
/// coverage. The ink fills kTextFill of whichever canvas dimension binds
/// first. Throws GlyphCoverageError when a character is missing from the font.
TextMask rasterize(std::string_view text, int font_id, const FontSet& fonts, int canvas_w,
                   int canvas_h);

}  // namespace syn3dtxt
