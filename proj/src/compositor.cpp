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

#include "syn3dtxt/compositor.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "syn3dtxt/error.hpp"
#include "syn3dtxt/image_io.hpp"

namespace syn3dtxt {
namespace {

constexpr int kMaxDecodeAttempts = 5;

bool is_image_file(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

Image render_one(const WarpedText& text, Rgb fill, const Image& bg) {
  Image out = bg;
  const double color[3] = {double(fill.r), double(fill.g), double(fill.b)};
  for (int y = 0; y < bg.height(); ++y) {
    for (int x = 0; x < bg.width(); ++x) {
      const std::uint8_t a8 = text.alpha.at(x, y);
      if (a8 <= kInkThreshold) continue;
      const double a = a8 / 255.0;
      std::uint8_t* p = out.pixel(x, y);
      for (int c = 0; c < 3; ++c) {
        p[c] = static_cast<std::uint8_t>(std::floor(p[c] * (1.0 - a) + color[c] * a + 0.5));
      }
    }
  }
  return out;
}

void check_shape(const WarpedText& t, const Image& bg) {
  const auto same = [&](const Image& img, int ch) {
    return img.width() == bg.width() && img.height() == bg.height() && img.channels() == ch;
  };
  if (!same(t.alpha, 1) || !same(t.binary, 1) || !same(t.normals, 3) || bg.channels() != 3) {
    throw InvalidArgument("text layers and background must share one canvas size");
  }
}

}  // namespace

BackgroundPool load_backgrounds(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw ConfigError("background directory does not exist: " + dir.string());
  }
  BackgroundPool pool{dir, {}};
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) pool.files.push_back(entry.path());
  }
  std::sort(pool.files.begin(), pool.files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  if (pool.files.empty()) throw ConfigError("no PNG/JPEG backgrounds in " + dir.string());
  return pool;
}

BackgroundCrop crop_background(const BackgroundPool& pool, SampleRng& rng, int w, int h) {
  if (pool.files.empty()) throw ConfigError("background pool is empty");
  std::string last_error;
  for (int attempt = 0; attempt < kMaxDecodeAttempts; ++attempt) {
    const std::size_t index = rng.below(pool.files.size());
    Image src;
    try {
      src = read_image(pool.files[index], 3);
    } catch (const IoError& e) {
      last_error = e.what();
      std::cerr << "warning: " << last_error << '\n';
      continue;
    }
    const double kmax = std::min(double(src.width()) / w, double(src.height()) / h);
    const double kmin = std::min(1.0, kmax);
    const double k = rng.uniform(kmin, kmax);
    const double cw = w * k;
    const double ch = h * k;
    const double x = rng.uniform(0.0, std::max(0.0, src.width() - cw));
    const double y = rng.uniform(0.0, std::max(0.0, src.height() - ch));
    return {resize_region(src, x, y, cw, ch, w, h), index, {x, y, cw, ch}};
  }
  throw ConfigError("background pool: " + std::to_string(kMaxDecodeAttempts) +
                    " undecodable draws in a row (last: " + last_error + ")");
}

double contrast(Rgb fill, const Image& bg, const PixelBox& region) {
  const int x0 = std::max(0, region.x0), y0 = std::max(0, region.y0);
  const int x1 = std::min(bg.width() - 1, region.x1), y1 = std::min(bg.height() - 1, region.y1);
  double sum = 0.0;
  std::size_t n = 0;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const std::uint8_t* p = bg.pixel(x, y);
      sum += luma({p[0], p[1], p[2]});
      ++n;
    }
  }
  const double mean = n ? sum / static_cast<double>(n) : 0.0;
  return std::abs(luma(fill) - mean);
}

bool contrast_ok(Rgb fill, const Image& bg, const PixelBox& region) {
  return contrast(fill, bg, region) >= kContrastFloor;
}

RenderedSample composite_pair(const WarpedText& text_s, const RenderParams& params_s,
                              const WarpedText& text_t, const RenderParams& params_t,
                              const Image& background) {
  if (!(params_s == params_t)) {
    throw PairingError("source and target texts were rendered with different parameters");
  }
  check_shape(text_s, background);
  check_shape(text_t, background);
  RenderedSample out;
  out.i_s = render_one(text_s, params_s.fill, background);
  out.i_t = render_one(text_t, params_t.fill, background);
  out.mask_s = text_s.normals;
  out.mask_t = text_t.normals;
  out.bin_s = text_s.binary;
  out.bin_t = text_t.binary;
  out.t_b = background;
  return out;
}

}  // namespace syn3dtxt
