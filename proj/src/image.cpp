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

#include "syn3dtxt/image.hpp"

#include <algorithm>
#include <cmath>

#include "syn3dtxt/error.hpp"

namespace syn3dtxt {

Image::Image(int width, int height, int channels, std::uint8_t fill)
    : width_(width), height_(height), channels_(channels) {
  if (width <= 0 || height <= 0 || channels <= 0) {
    throw InvalidArgument("image dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

std::optional<PixelBox> ink_bounds(const Image& img, std::uint8_t threshold) {
  PixelBox box{img.width(), img.height(), -1, -1};
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (img.at(x, y) > threshold) {
        box.x0 = std::min(box.x0, x);
        box.x1 = std::max(box.x1, x);
        box.y0 = std::min(box.y0, y);
        box.y1 = std::max(box.y1, y);
      }
    }
  }
  if (box.x1 < 0) return std::nullopt;
  return box;
}

std::size_t count_above(const Image& img, std::uint8_t threshold) {
  std::size_t n = 0;
  const auto& d = img.data();
  for (std::size_t i = 0; i < d.size(); i += img.channels()) {
    if (d[i] > threshold) ++n;
  }
  return n;
}

std::uint64_t channel_sum(const Image& img) {
  std::uint64_t s = 0;
  const auto& d = img.data();
  for (std::size_t i = 0; i < d.size(); i += img.channels()) s += d[i];
  return s;
}

Image resize_region(const Image& src, double x, double y, double w, double h, int out_w, int out_h) {
  Image out(out_w, out_h, src.channels());
  const double sx = w / out_w;
  const double sy = h / out_h;
  const int ch = src.channels();
  for (int oy = 0; oy < out_h; ++oy) {
    const double fy = std::clamp(y + (oy + 0.5) * sy - 0.5, 0.0, src.height() - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, src.height() - 1);
    const double ty = fy - y0;
    for (int ox = 0; ox < out_w; ++ox) {
      const double fx = std::clamp(x + (ox + 0.5) * sx - 0.5, 0.0, src.width() - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, src.width() - 1);
      const double tx = fx - x0;
      for (int c = 0; c < ch; ++c) {
        const double top = src.at(x0, y0, c) * (1 - tx) + src.at(x1, y0, c) * tx;
        const double bot = src.at(x0, y1, c) * (1 - tx) + src.at(x1, y1, c) * tx;
        out.at(ox, oy, c) = static_cast<std::uint8_t>(std::lround(top * (1 - ty) + bot * ty));
      }
    }
  }
  return out;
}

}  // namespace syn3dtxt
