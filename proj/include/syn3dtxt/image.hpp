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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace syn3dtxt {

/// Interleaved 8-bit image, row-major, no padding.
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels, std::uint8_t fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  bool empty() const { return data_.empty(); }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }

  std::uint8_t* pixel(int x, int y) { return data_.data() + offset(x, y); }
  const std::uint8_t* pixel(int x, int y) const { return data_.data() + offset(x, y); }
  std::uint8_t& at(int x, int y, int c = 0) { return data_[offset(x, y) + c]; }
  std::uint8_t at(int x, int y, int c = 0) const { return data_[offset(x, y) + c]; }

  std::vector<std::uint8_t>& data() { return data_; }
  const std::vector<std::uint8_t>& data() const { return data_; }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<std::uint8_t> data_;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Inclusive pixel rectangle.
struct PixelBox {
  int x0 = 0;
  int y0 = 0;
  int x1 = -1;
  int y1 = -1;

  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
  friend bool operator==(const PixelBox&, const PixelBox&) = default;
};

/// Bounding box of pixels whose first channel exceeds `threshold`.
std::optional<PixelBox> ink_bounds(const Image& img, std::uint8_t threshold = 0);

/// Number of pixels whose first channel exceeds `threshold`.
std::size_t count_above(const Image& img, std::uint8_t threshold);

/// Sum of the first channel.
std::uint64_t channel_sum(const Image& img);

/// Bilinear resize of the rectangle [x, x+w) x [y, y+h) of `src` to out_w x out_h.
Image resize_region(const Image& src, double x, double y, double w, double h, int out_w, int out_h);

/// 0.299 R + 0.587 G + 0.114 B on the 0..255 scale.
inline double luma(Rgb c) { return 0.299 * c.r + 0.587 * c.g + 0.114 * c.b; }

}  // namespace syn3dtxt
