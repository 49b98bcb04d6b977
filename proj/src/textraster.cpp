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

#include "syn3dtxt/textraster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <unordered_map>

#include <ft2build.h>
#include FT_FREETYPE_H

#include "syn3dtxt/error.hpp"

namespace syn3dtxt {
namespace {

// Per-thread FreeType state. FT_Face objects must not be shared between
// threads, so each worker keeps its own faces, keyed by the font bytes they
// were opened from. Entries hold a reference to the bytes so the key cannot be
// recycled while cached.
class FaceCache {
 public:
  FaceCache() {
    if (FT_Init_FreeType(&library_) != 0) throw Error("FreeType initialization failed");
  }
  ~FaceCache() {
    for (auto& [key, entry] : faces_) FT_Done_Face(entry.face);
    FT_Done_FreeType(library_);
  }
  FaceCache(const FaceCache&) = delete;
  FaceCache& operator=(const FaceCache&) = delete;

  FT_Face face(const std::shared_ptr<const std::vector<std::uint8_t>>& data) {
    auto it = faces_.find(data.get());
    if (it != faces_.end()) return it->second.face;
    FT_Face f = open(*data);
    faces_.emplace(data.get(), Entry{data, f});
    return f;
  }

  /// Opens a face that the caller owns (used while probing candidate fonts).
  FT_Face open(const std::vector<std::uint8_t>& data) {
    FT_Face f = nullptr;
    const FT_Error err = FT_New_Memory_Face(library_, data.data(),
                                            static_cast<FT_Long>(data.size()), 0, &f);
    if (err != 0 || f == nullptr) throw IoError("FreeType cannot open font (error " +
                                                std::to_string(err) + ")");
    return f;
  }

  static FaceCache& local() {
    thread_local FaceCache cache;
    return cache;
  }

 private:
  struct Entry {
    std::shared_ptr<const std::vector<std::uint8_t>> data;
    FT_Face face;
  };
  FT_Library library_ = nullptr;
  std::unordered_map<const void*, Entry> faces_;
};

struct FaceCloser {
  void operator()(FT_Face f) const { FT_Done_Face(f); }
};

bool is_font_file(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".ttf" || ext == ".otf" || ext == ".ttc";
}

struct PlacedGlyph {
  char ch = 0;
  int left = 0;  // bitmap origin, layout coordinates (baseline at y = 0, y down)
  int top = 0;
  int width = 0;
  int rows = 0;
  int pen_x = 0;
  std::vector<std::uint8_t> coverage;
};

struct Layout {
  std::vector<PlacedGlyph> glyphs;
  PixelBox ink{0, 0, -1, -1};
  bool has_ink = false;
};

constexpr double kMaxGlyphOverlap = 0.3;

Layout layout_text(FT_Face face, std::string_view text, int pixel_size) {
  if (FT_Set_Pixel_Sizes(face, 0, static_cast<FT_UInt>(pixel_size)) != 0) {
    throw Error("cannot set font size " + std::to_string(pixel_size));
  }
  Layout out;
  FT_Pos pen = 0;
  FT_UInt prev = 0;
  int prev_ink_x0 = 0, prev_ink_x1 = -1;
  const bool kerning = FT_HAS_KERNING(face);
  for (char ch : text) {
    const FT_UInt gi = FT_Get_Char_Index(face, static_cast<unsigned char>(ch));
    if (kerning && prev != 0 && gi != 0) {
      FT_Vector delta{};
      FT_Get_Kerning(face, prev, gi, FT_KERNING_DEFAULT, &delta);
      pen += delta.x;
    }
    if (FT_Load_Glyph(face, gi, FT_LOAD_DEFAULT) != 0 ||
        FT_Render_Glyph(face->glyph, FT_RENDER_MODE_NORMAL) != 0) {
      throw GlyphCoverageError(std::string("cannot render character '") + ch + "'");
    }
    const FT_GlyphSlot slot = face->glyph;
    if (ch != ' ') {
      PlacedGlyph g;
      g.ch = ch;
      g.pen_x = static_cast<int>((pen + 32) >> 6);
      g.left = g.pen_x + slot->bitmap_left;
      g.top = -slot->bitmap_top;
      g.width = static_cast<int>(slot->bitmap.width);
      g.rows = static_cast<int>(slot->bitmap.rows);
      g.coverage.resize(static_cast<std::size_t>(g.width) * g.rows);
      for (int r = 0; r < g.rows; ++r) {
        const unsigned char* src = slot->bitmap.buffer + r * slot->bitmap.pitch;
        std::copy(src, src + g.width, g.coverage.begin() + static_cast<std::ptrdiff_t>(r) * g.width);
      }
      // Inked column span; kerning may tuck a glyph under its neighbour, but
      // never by more than kMaxGlyphOverlap of the narrower glyph.
      int c0 = g.width, c1 = -1;
      for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.width; ++c) {
          if (g.coverage[static_cast<std::size_t>(r) * g.width + c] == 0) continue;
          c0 = std::min(c0, c);
          c1 = std::max(c1, c);
        }
      }
      if (c1 >= 0 && prev_ink_x1 >= prev_ink_x0) {
        const int overlap = prev_ink_x1 - (g.left + c0) + 1;
        const int allowed = static_cast<int>(
            kMaxGlyphOverlap * std::min(prev_ink_x1 - prev_ink_x0 + 1, c1 - c0 + 1));
        if (overlap > allowed) {
          const int shift = overlap - allowed;
          pen += static_cast<FT_Pos>(shift) * 64;
          g.pen_x += shift;
          g.left += shift;
        }
      }
      if (c1 >= 0) {
        prev_ink_x0 = g.left + c0;
        prev_ink_x1 = g.left + c1;
      }
      for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.width; ++c) {
          if (g.coverage[static_cast<std::size_t>(r) * g.width + c] == 0) continue;
          const int x = g.left + c;
          const int y = g.top + r;
          if (!out.has_ink) {
            out.ink = {x, y, x, y};
            out.has_ink = true;
          } else {
            out.ink.x0 = std::min(out.ink.x0, x);
            out.ink.x1 = std::max(out.ink.x1, x);
            out.ink.y0 = std::min(out.ink.y0, y);
            out.ink.y1 = std::max(out.ink.y1, y);
          }
        }
      }
      out.glyphs.push_back(std::move(g));
    }
    pen += slot->advance.x;
    prev = gi;
  }
  return out;
}

}  // namespace

FontSet::FontSet(std::vector<FontEntry> entries) : entries_(std::move(entries)) {}

const FontEntry& FontSet::at(int font_id) const {
  if (font_id < 0 || static_cast<std::size_t>(font_id) >= entries_.size()) {
    throw InvalidArgument("unknown font id " + std::to_string(font_id));
  }
  return entries_[static_cast<std::size_t>(font_id)];
}

bool FontSet::covers(int font_id, std::string_view text) const {
  FT_Face face = FaceCache::local().face(at(font_id).data);
  return std::all_of(text.begin(), text.end(), [&](char ch) {
    return ch == ' ' || FT_Get_Char_Index(face, static_cast<unsigned char>(ch)) != 0;
  });
}

FontSet load_fonts(const std::filesystem::path& dir, std::vector<std::string>* warnings) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw ConfigError("font directory does not exist: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_font_file(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

  auto warn = [&](const std::string& msg) {
    std::cerr << "warning: " << msg << '\n';
    if (warnings) warnings->push_back(msg);
  };

  std::vector<FontEntry> entries;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    auto data = std::make_shared<std::vector<std::uint8_t>>(std::istreambuf_iterator<char>(in),
                                                            std::istreambuf_iterator<char>());
    try {
      std::unique_ptr<FT_FaceRec_, FaceCloser> face(FaceCache::local().open(*data));
      if (!FT_IS_SCALABLE(face.get())) throw IoError("not a scalable font");
      for (char ch : kProbeCharset) {
        if (FT_Get_Char_Index(face.get(), static_cast<unsigned char>(ch)) == 0) {
          throw GlyphCoverageError(std::string("missing glyph '") + ch + "'");
        }
      }
      std::string name = face->family_name ? face->family_name : path.stem().string();
      if (face->style_name) name += std::string(" ") + face->style_name;
      entries.push_back({static_cast<int>(entries.size()), std::move(name), path, std::move(data)});
    } catch (const Error& e) {
      warn("skipping font " + path.filename().string() + ": " + e.what());
    }
  }
  if (entries.empty()) throw ConfigError("no usable fonts in " + dir.string());
  return FontSet(std::move(entries));
}

WordCorpus load_corpus(const std::filesystem::path& file, std::string_view charset) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open corpus " + file.string());
  WordCorpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r\n");
    const auto last = line.find_last_not_of(" \t\r\n");
    const std::string word =
        first == std::string::npos ? std::string() : line.substr(first, last - first + 1);
    const bool ok = !word.empty() && word.size() <= kMaxWordLength &&
                    std::all_of(word.begin(), word.end(), [&](char c) {
                      return charset.find(c) != std::string_view::npos;
                    });
    if (ok) {
      corpus.words.push_back(word);
    } else {
      ++corpus.dropped;
    }
  }
  if (corpus.words.empty()) throw ConfigError("corpus has no valid words: " + file.string());
  return corpus;
}

TextMask rasterize(std::string_view text, int font_id, const FontSet& fonts, int canvas_w,
                   int canvas_h) {
  if (canvas_w < 16 || canvas_h < 16) throw InvalidArgument("canvas must be at least 16x16");
  if (text.find_first_not_of(' ') == std::string_view::npos) {
    throw InvalidArgument("text has no visible characters");
  }
  FT_Face face = FaceCache::local().face(fonts.at(font_id).data);
  for (char ch : text) {
    if (ch != ' ' && FT_Get_Char_Index(face, static_cast<unsigned char>(ch)) == 0) {
      throw GlyphCoverageError(std::string("font ") + std::to_string(font_id) +
                               " has no glyph for '" + ch + "'");
    }
  }

  // Pick the pixel size: scale so the binding dimension reaches kTextFill,
  // then correct for hinting/rounding until the ink fits with a 1 px margin.
  const int max_w = canvas_w - 2;
  const int max_h = canvas_h - 2;
  int size = canvas_h;
  Layout layout = layout_text(face, text, size);
  for (int iter = 0; iter < 8; ++iter) {
    if (!layout.has_ink) throw GlyphCoverageError("text renders without ink");
    const double ratio = std::max(layout.ink.width() / (kTextFill * canvas_w),
                                  layout.ink.height() / (kTextFill * canvas_h));
    const bool fits = layout.ink.width() <= max_w && layout.ink.height() <= max_h;
    const double fill = std::max(layout.ink.width() / double(canvas_w),
                                 layout.ink.height() / double(canvas_h));
    if (fits && fill >= 0.6 && std::abs(ratio - 1.0) < 0.04) break;
    int next = static_cast<int>(std::floor(size / ratio));
    if (!fits && next >= size) next = size - 1;
    if (next == size) break;
    size = std::max(next, 2);
    layout = layout_text(face, text, size);
  }
  while (layout.has_ink && (layout.ink.width() > max_w || layout.ink.height() > max_h) && size > 2) {
    layout = layout_text(face, text, --size);
  }
  if (layout.glyphs.size() > 254) throw InvalidArgument("text has too many glyphs");

  const int ox = (canvas_w - layout.ink.width()) / 2 - layout.ink.x0;
  const int oy = (canvas_h - layout.ink.height()) / 2 - layout.ink.y0;

  TextMask mask;
  mask.alpha = Image(canvas_w, canvas_h, 1);
  mask.labels = Image(canvas_w, canvas_h, 1);
  mask.baseline_y = oy;
  for (std::size_t i = 0; i < layout.glyphs.size(); ++i) {
    const PlacedGlyph& g = layout.glyphs[i];
    GlyphBox box{g.ch, canvas_w, -1};
    for (int r = 0; r < g.rows; ++r) {
      for (int c = 0; c < g.width; ++c) {
        const std::uint8_t cov = g.coverage[static_cast<std::size_t>(r) * g.width + c];
        if (cov == 0) continue;
        const int x = g.left + c + ox;
        const int y = g.top + r + oy;
        if (!mask.alpha.contains(x, y)) continue;
        box.x_min = std::min(box.x_min, x);
        box.x_max = std::max(box.x_max, x);
        std::uint8_t& a = mask.alpha.at(x, y);
        if (cov > a) {
          a = cov;
          mask.labels.at(x, y) = static_cast<std::uint8_t>(i + 1);
        }
      }
    }
    if (box.x_max < 0) box = {g.ch, g.pen_x + ox, g.pen_x + ox};
    mask.glyphs.push_back(box);
  }
  return mask;
}

}  // namespace syn3dtxt
