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
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>

#include "syn3dtxt/geometry3d.hpp"
#include "syn3dtxt/image.hpp"
#include "syn3dtxt/textraster.hpp"
#include "syn3dtxt/warp.hpp"

namespace syn3dtxt {

/// Per-sample random stream.
///
/// The stream key is derived from (master_seed, sample_index) with SplitMix64:
///   key = mix(master_seed ^ mix(sample_index + 0x9E3779B97F4A7C15))
/// and seeds a std::mt19937_64. Substreams re-key the same way with a tag, so
/// each stochastic decision of a sample has its own stream and draws never
/// depend on the order in which samples or decisions are evaluated.
class SampleRng {
 public:
  SampleRng(std::uint64_t master_seed, std::uint64_t sample_index);

  SampleRng substream(std::uint64_t tag) const;
  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [0, n), unbiased.
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  explicit SampleRng(std::uint64_t key);
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Substream tags used by the generator.
namespace stream {
inline constexpr std::uint64_t kKind = 1;
inline constexpr std::uint64_t kText = 2;
inline constexpr std::uint64_t kFont = 3;
inline constexpr std::uint64_t kFill = 4;
inline constexpr std::uint64_t kBackground = 5;
inline constexpr std::uint64_t kArc = 6;
inline constexpr std::uint64_t kBend = 7;
/// Rotation attempt k uses tag kRotation + k.
inline constexpr std::uint64_t kRotation = 0x100;
}  // namespace stream

enum class AxisCombination { Phi, Theta, Gamma, ThetaPhi, ThetaGamma, PhiGamma, ThetaPhiGamma };

inline constexpr std::array<AxisCombination, 7> kAxisCombinations{
    AxisCombination::Phi,        AxisCombination::Theta,    AxisCombination::Gamma,
    AxisCombination::ThetaPhi,   AxisCombination::ThetaGamma, AxisCombination::PhiGamma,
    AxisCombination::ThetaPhiGamma};

/// Percent weights per combination, in kAxisCombinations order.
using AxisWeights = std::array<int, 7>;
inline constexpr AxisWeights kDefaultAxisWeights{20, 20, 20, 20, 5, 5, 10};

std::string_view to_string(AxisCombination c);
AxisCombination axis_combination_from_string(std::string_view s);
bool uses_theta(AxisCombination c);
bool uses_phi(AxisCombination c);
bool uses_gamma(AxisCombination c);
/// Number of active axes (1, 2 or 3).
int axis_count(AxisCombination c);

enum class Magnitude { Small, Medium, Large };
enum class Sense { CW, CCW };

struct AngleCategory {
  Magnitude magnitude;
  Sense sense;
};

/// Small: |a| = 30; Medium: [45, 60]; Large: [65, 70]. Negative is clockwise.
std::optional<AngleCategory> categorize_angle(double deg);

AxisCombination sample_axis_combination(SampleRng& rng, const AxisWeights& weights = kDefaultAxisWeights);

/// Magnitude category uniform over Small/Medium/Large, continuous-uniform
/// within the range, sign fair.
double sample_angle(SampleRng& rng);

struct SampledRotation {
  AxisCombination axes;
  RotationSpec spec;
};

SampledRotation build_rotation_spec(SampleRng& rng, const AxisWeights& weights = kDefaultAxisWeights);

ArcParams sample_arc(SampleRng& rng);

BendParams sample_bend(SampleRng& rng);

enum class SampleKind { FlatRotated, CylinderBent };
std::string_view to_string(SampleKind k);
SampleKind sample_kind_from_string(std::string_view s);

SampleKind sample_kind(SampleRng& rng, double bend_fraction);

int sample_font(SampleRng& rng, const FontSet& fonts);

/// Scores a candidate fill color; larger is more legible.
using ContrastFn = std::function<double(Rgb)>;

/// Uniform RGB; redrawn up to `max_attempts` times until contrast(fill) >=
/// floor, otherwise the best-scoring attempt.
Rgb sample_fill(SampleRng& rng, const ContrastFn& contrast, double floor, int max_attempts = 10);

struct Style {
  int font_id = 0;
  Rgb fill;
  friend bool operator==(const Style&, const Style&) = default;
};

Style sample_style(SampleRng& rng, const FontSet& fonts, const ContrastFn& contrast, double floor);

}  // namespace syn3dtxt
