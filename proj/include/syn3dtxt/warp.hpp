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

#include <string_view>
#include <vector>

#include "syn3dtxt/geometry3d.hpp"
#include "syn3dtxt/image.hpp"
#include "syn3dtxt/textraster.hpp"

namespace syn3dtxt {

/// ArchUp bends the baseline into a hump (ends drop below the middle);
/// ArchDown into a bowl (ends rise above the middle).
enum class ArcDirection { ArchUp, ArchDown };

std::string_view to_string(ArcDirection d);
ArcDirection arc_direction_from_string(std::string_view s);

struct ArcParams {
  int total_angle = 0;  // degrees, one of kArcLevels
  ArcDirection direction = ArcDirection::ArchUp;

  void validate() const;
  friend bool operator==(const ArcParams&, const ArcParams&) = default;
};

inline constexpr int kArcLevels[3] = {0, 60, 120};

inline constexpr double kMinSweepDeg = 30.0;
inline constexpr double kMaxSweepDeg = 120.0;

struct BendParams {
  double sweep_angle = 60.0;  // degrees, [kMinSweepDeg, kMaxSweepDeg]

  void validate() const;
  friend bool operator==(const BendParams&, const BendParams&) = default;
};

/// Text after its geometric transform: coverage, RGB-encoded normals over
/// the binary support (black elsewhere) and the 0/255 binary mask.
struct WarpedText {
  Image alpha;
  Image normals;
  Image binary;
};

/// Coverage above this value counts as ink in binary masks.
inline constexpr std::uint8_t kInkThreshold = 127;

/// Bends the baseline onto a circular arc whose length equals the ink width.
/// Glyph pixels move along the local radius by their height above the
/// baseline. The warped result is scaled down (never up) and re-centered to
/// fit the original canvas. A 0 degree arc returns the mask unchanged.
TextMask arc_warp(const TextMask& mask, const ArcParams& params);

/// Homography that maps the flat text canvas to its rotated, projected image
/// on a same-size canvas (scaled down and re-centered when the projected plane
/// would not fit).
Homography planar_homography(int canvas_w, int canvas_h, const Mat4& rotation,
                             const CameraModel& cam);

/// Rotates the whole text plane. Coverage is resampled bilinearly; the
/// normal mask is the single plane normal over the binary support.
WarpedText planar_rotate(const TextMask& mask, const RotationSpec& spec, const CameraModel& cam);

struct BendResult {
  WarpedText text;
  std::vector<double> station_deg;  // per glyph, left to right
};

/// Station angles for glyph centers: the first and last glyph sit at
/// -sweep/2 and +sweep/2, the others in proportion to their horizontal
/// position. A single glyph sits at 0.
std::vector<double> glyph_stations(const std::vector<GlyphBox>& glyphs, double sweep_deg);

/// Places every glyph on a planar facet tangent to a vertical cylinder at its
/// station angle, so each character carries its own normal. Where facets
/// overlap, the one with the smaller |station| is in front.
BendResult cylinder_bend(const TextMask& mask, const BendParams& params, const CameraModel& cam);

}  // namespace syn3dtxt
