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

#include "syn3dtxt/sampler.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "syn3dtxt/error.hpp"

namespace syn3dtxt {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SampleRng::SampleRng(std::uint64_t master_seed, std::uint64_t sample_index)
    : SampleRng(splitmix64(master_seed ^ splitmix64(sample_index + 0x9E3779B97F4A7C15ULL))) {}

SampleRng::SampleRng(std::uint64_t key) : key_(key), engine_(key) {}

SampleRng SampleRng::substream(std::uint64_t tag) const {
  return SampleRng(splitmix64(key_ ^ splitmix64(tag)));
}

double SampleRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t SampleRng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

std::string_view to_string(AxisCombination c) {
  switch (c) {
    case AxisCombination::Phi: return "phi";
    case AxisCombination::Theta: return "theta";
    case AxisCombination::Gamma: return "gamma";
    case AxisCombination::ThetaPhi: return "theta+phi";
    case AxisCombination::ThetaGamma: return "theta+gamma";
    case AxisCombination::PhiGamma: return "phi+gamma";
    case AxisCombination::ThetaPhiGamma: return "theta+phi+gamma";
  }
  return "?";
}

AxisCombination axis_combination_from_string(std::string_view s) {
  for (AxisCombination c : kAxisCombinations) {
    if (to_string(c) == s) return c;
  }
  throw InvalidArgument("unknown axis combination '" + std::string(s) + "'");
}

bool uses_theta(AxisCombination c) {
  return c == AxisCombination::Theta || c == AxisCombination::ThetaPhi ||
         c == AxisCombination::ThetaGamma || c == AxisCombination::ThetaPhiGamma;
}

bool uses_phi(AxisCombination c) {
  return c == AxisCombination::Phi || c == AxisCombination::ThetaPhi ||
         c == AxisCombination::PhiGamma || c == AxisCombination::ThetaPhiGamma;
}

bool uses_gamma(AxisCombination c) {
  return c == AxisCombination::Gamma || c == AxisCombination::ThetaGamma ||
         c == AxisCombination::PhiGamma || c == AxisCombination::ThetaPhiGamma;
}

int axis_count(AxisCombination c) {
  return int(uses_theta(c)) + int(uses_phi(c)) + int(uses_gamma(c));
}

std::optional<AngleCategory> categorize_angle(double deg) {
  if (!std::isfinite(deg)) return std::nullopt;
  const double m = std::abs(deg);
  const Sense sense = deg < 0 ? Sense::CW : Sense::CCW;
  if (m == 30.0) return AngleCategory{Magnitude::Small, sense};
  if (m >= 45.0 && m <= 60.0) return AngleCategory{Magnitude::Medium, sense};
  if (m >= 65.0 && m <= 70.0) return AngleCategory{Magnitude::Large, sense};
  return std::nullopt;
}

AxisCombination sample_axis_combination(SampleRng& rng, const AxisWeights& weights) {
  int total = 0;
  for (int w : weights) {
    if (w < 0) throw InvalidArgument("axis weights must be non-negative");
    total += w;
  }
  if (total <= 0) throw InvalidArgument("axis weights must not all be zero");
  auto pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (pick < weights[i]) return kAxisCombinations[i];
    pick -= weights[i];
  }
  return kAxisCombinations.back();
}

double sample_angle(SampleRng& rng) {
  const auto category = rng.below(3);
  double magnitude = 30.0;
  if (category == 1) magnitude = rng.uniform(45.0, 60.0);
  if (category == 2) magnitude = rng.uniform(65.0, 70.0);
  return rng.below(2) == 0 ? -magnitude : magnitude;
}

SampledRotation build_rotation_spec(SampleRng& rng, const AxisWeights& weights) {
  SampledRotation out;
  out.axes = sample_axis_combination(rng, weights);
  if (uses_gamma(out.axes)) out.spec.roll_gamma = sample_angle(rng);
  if (uses_theta(out.axes)) out.spec.pitch_theta = sample_angle(rng);
  if (uses_phi(out.axes)) out.spec.yaw_phi = sample_angle(rng);
  out.spec.order_policy = rng.below(2) == 0 ? OrderPolicy::NearField : OrderPolicy::FarField;
  return out;
}

ArcParams sample_arc(SampleRng& rng) {
  ArcParams p;
  p.total_angle = kArcLevels[rng.below(3)];
  p.direction = rng.below(2) == 0 ? ArcDirection::ArchUp : ArcDirection::ArchDown;
  return p;
}

BendParams sample_bend(SampleRng& rng) { return {rng.uniform(kMinSweepDeg, kMaxSweepDeg)}; }

std::string_view to_string(SampleKind k) {
  return k == SampleKind::FlatRotated ? "FlatRotated" : "CylinderBent";
}

SampleKind sample_kind_from_string(std::string_view s) {
  if (s == "FlatRotated") return SampleKind::FlatRotated;
  if (s == "CylinderBent") return SampleKind::CylinderBent;
  throw InvalidArgument("unknown sample kind '" + std::string(s) + "'");
}

SampleKind sample_kind(SampleRng& rng, double bend_fraction) {
  if (!(bend_fraction >= 0.0 && bend_fraction <= 1.0)) {
    throw InvalidArgument("bend fraction must lie in [0, 1]");
  }
  return rng.uniform() < bend_fraction ? SampleKind::CylinderBent : SampleKind::FlatRotated;
}

int sample_font(SampleRng& rng, const FontSet& fonts) {
  if (fonts.empty()) throw ConfigError("font set is empty");
  return static_cast<int>(rng.below(fonts.size()));
}

Rgb sample_fill(SampleRng& rng, const ContrastFn& contrast, double floor, int max_attempts) {
  Rgb best;
  double best_score = -1.0;
  for (int i = 0; i < std::max(1, max_attempts); ++i) {
    const Rgb c{static_cast<std::uint8_t>(rng.below(256)), static_cast<std::uint8_t>(rng.below(256)),
                static_cast<std::uint8_t>(rng.below(256))};
    const double score = contrast ? contrast(c) : floor;
    if (score >= floor) return c;
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  }
  return best;
}

Style sample_style(SampleRng& rng, const FontSet& fonts, const ContrastFn& contrast, double floor) {
  Style s;
  s.font_id = sample_font(rng, fonts);
  s.fill = sample_fill(rng, contrast, floor);
  return s;
}

}  // namespace syn3dtxt
