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

#include <filesystem>
#include <vector>

#include "syn3dtxt/geometry3d.hpp"
#include "syn3dtxt/image.hpp"
#include "syn3dtxt/sampler.hpp"
#include "syn3dtxt/warp.hpp"

namespace syn3dtxt {

/// PNG/JPEG files of a directory, lexicographic order. Decoded on demand.
struct BackgroundPool {
  std::filesystem::path root;
  std::vector<std::filesystem::path> files;
};

/// Throws ConfigError when the directory has no PNG/JPEG files.
BackgroundPool load_backgrounds(const std::filesystem::path& dir);

struct BackgroundCrop {
  Image image;
  std::size_t source_index = 0;
  /// Crop rectangle in source pixels (x, y, w, h).
  std::array<double, 4> rect{};
};

/// Uniform source image, uniform crop scale and position, resampled to w x h.
/// Sources smaller than the crop are upscaled first. Undecodable sources are
/// skipped and redrawn; the fifth failure throws ConfigError.
BackgroundCrop crop_background(const BackgroundPool& pool, SampleRng& rng, int w, int h);

/// Minimum luma difference (0..255 scale) between fill and background.
inline constexpr double kContrastFloor = 30.0;

/// |luma(fill) - mean luma of bg over region|.
double contrast(Rgb fill, const Image& bg, const PixelBox& region);
bool contrast_ok(Rgb fill, const Image& bg, const PixelBox& region);

/// Everything that must match between the two texts of a pair.
struct RenderParams {
  SampleKind kind = SampleKind::FlatRotated;
  RotationSpec rotation;
  ArcParams arc;
  double sweep_angle = 0.0;
  CameraModel camera;
  int font_id = 0;
  Rgb fill;
  friend bool operator==(const RenderParams&, const RenderParams&) = default;
};

struct RenderedSample {
  Image i_s;
  Image i_t;
  Image mask_s;
  Image mask_t;
  Image bin_s;
  Image bin_t;
  Image t_b;
};

/// Colors the text over its binary support onto the shared background. Only
/// ink pixels (alpha above kInkThreshold) are blended, so outside the binary
/// mask each image equals the clean background byte for byte. Throws
/// PairingError when the two halves were rendered with different params.
RenderedSample composite_pair(const WarpedText& text_s, const RenderParams& params_s,
                              const WarpedText& text_t, const RenderParams& params_t,
                              const Image& background);

}  // namespace syn3dtxt
