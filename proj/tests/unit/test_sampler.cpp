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
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "syn3dtxt/error.hpp"
#include "syn3dtxt/sampler.hpp"
#include "test_support.hpp"

namespace syn3dtxt {
namespace {

std::size_t slot(AxisCombination c) {
  return static_cast<std::size_t>(std::find(kAxisCombinations.begin(), kAxisCombinations.end(), c) -
                                  kAxisCombinations.begin());
}

double pearson(const std::vector<double>& observed, const std::vector<double>& probs) {
  const double n = std::accumulate(observed.begin(), observed.end(), 0.0);
  double chi = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = n * probs[i];
    chi += (observed[i] - e) * (observed[i] - e) / e;
  }
  return chi;
}

double critical(int df, double alpha) {
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(df), alpha));
}

TEST(SampleRng, Deterministic) {
  SampleRng a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(SampleRng(42, 7).key(), SampleRng(42, 7).key());
  EXPECT_NE(SampleRng(42, 7).key(), SampleRng(42, 8).key());
  EXPECT_NE(SampleRng(42, 7).key(), SampleRng(43, 7).key());
  EXPECT_NE(SampleRng(42, 7).substream(1).key(), SampleRng(42, 7).substream(2).key());
}

TEST(SampleRng, SplitMixReferenceValues) {
  // Reference outputs of SplitMix64 (Steele, Lea, Flood) seeded with 0, first two states.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(splitmix64(0x9E3779B97F4A7C15ULL), 0x6E789E6AA1B965F4ULL);
}

TEST(SampleRng, UniformAndBelowRanges) {
  SampleRng r(1, 2);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(r.below(7), 7u);
  }
  EXPECT_THROW(r.below(0), InvalidArgument);
}

TEST(SampleRng, AdjacentIndicesUncorrelated) {
  // Pearson correlation of first uniforms of neighbouring streams.
  const int n = 20000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = SampleRng(5, i).uniform();
    const double y = SampleRng(5, i + 1).uniform();
    sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
  }
  const double cov = sxy / n - sx / n * sy / n;
  const double corr = cov / std::sqrt((sxx / n - sx * sx / n / n) * (syy / n - sy * sy / n / n));
  EXPECT_LT(std::abs(corr), 0.03);
}

TEST(AxisCombination, NamesRoundTrip) {
  for (AxisCombination c : kAxisCombinations) EXPECT_EQ(axis_combination_from_string(to_string(c)), c);
  EXPECT_THROW(axis_combination_from_string("roll"), InvalidArgument);
  EXPECT_EQ(axis_count(AxisCombination::Gamma), 1);
  EXPECT_EQ(axis_count(AxisCombination::PhiGamma), 2);
  EXPECT_EQ(axis_count(AxisCombination::ThetaPhiGamma), 3);
  EXPECT_TRUE(uses_theta(AxisCombination::ThetaGamma));
  EXPECT_FALSE(uses_phi(AxisCombination::ThetaGamma));
}

TEST(AxisCombination, TableWeightsSumToHundred) {
  EXPECT_EQ(std::accumulate(kDefaultAxisWeights.begin(), kDefaultAxisWeights.end(), 0), 100);
}

TEST(SampleAxisCombination, HundredThousandDrawFrequencies) {
  std::vector<double> counts(7, 0.0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    SampleRng r(2024, i);
    counts[slot(sample_axis_combination(r))] += 1;
  }
  EXPECT_NEAR(100.0 * counts[slot(AxisCombination::ThetaPhi)] / n, 20.0, 0.5);
  EXPECT_NEAR(100.0 * counts[slot(AxisCombination::ThetaGamma)] / n, 5.0, 0.3);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_NEAR(100.0 * counts[k] / n, kDefaultAxisWeights[k], 0.5) << k;
  EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), 0.0), n);
}

TEST(SampleAxisCombination, ChiSquareAtTenThousand) {
  EXPECT_NEAR(critical(6, 0.001), 22.458, 0.001);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    std::vector<double> counts(7, 0.0);
    for (int i = 0; i < 10000; ++i) {
      SampleRng r(seed, i);
      counts[slot(sample_axis_combination(r))] += 1;
    }
    std::vector<double> probs;
    for (int w : kDefaultAxisWeights) probs.push_back(w / 100.0);
    EXPECT_LT(pearson(counts, probs), critical(6, 0.001)) << seed;
  }
}

TEST(SampleAxisCombination, CustomWeights) {
  const AxisWeights only_gamma{0, 0, 100, 0, 0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    SampleRng r(9, i);
    ASSERT_EQ(sample_axis_combination(r, only_gamma), AxisCombination::Gamma);
  }
}

TEST(CategorizeAngle, Ranges) {
  EXPECT_EQ(categorize_angle(30)->magnitude, Magnitude::Small);
  EXPECT_EQ(categorize_angle(-30)->sense, Sense::CW);
  EXPECT_EQ(categorize_angle(30)->sense, Sense::CCW);
  EXPECT_EQ(categorize_angle(45)->magnitude, Magnitude::Medium);
  EXPECT_EQ(categorize_angle(-60)->magnitude, Magnitude::Medium);
  EXPECT_EQ(categorize_angle(65)->magnitude, Magnitude::Large);
  EXPECT_EQ(categorize_angle(-70)->magnitude, Magnitude::Large);
  for (double bad : {0.0, 29.9, 30.1, 44.9, 60.1, 64.9, 70.1, -31.0}) EXPECT_FALSE(categorize_angle(bad)) << bad;
}

TEST(SampleAngle, SixtyThousandDraws) {
  const int n = 60000;
  int negative = 0, small = 0, medium = 0, large = 0;
  for (int i = 0; i < n; ++i) {
    SampleRng r(77, i);
    const double a = sample_angle(r);
    const auto cat = categorize_angle(a);
    ASSERT_TRUE(cat.has_value()) << a;
    const double m = std::abs(a);
    ASSERT_TRUE(m == 30.0 || (m >= 45 && m <= 60) || (m >= 65 && m <= 70)) << a;
    negative += a < 0;
    small += m == 30.0;
    medium += cat->magnitude == Magnitude::Medium;
    large += cat->magnitude == Magnitude::Large;
  }
  EXPECT_NEAR(100.0 * negative / n, 50.0, 1.0);
  EXPECT_NEAR(100.0 * small / n, 100.0 / 3, 1.0);
  EXPECT_NEAR(100.0 * medium / n, 100.0 / 3, 1.0);
  EXPECT_NEAR(100.0 * large / n, 100.0 / 3, 1.0);
}

TEST(SampleAngle, ContinuousWithinMediumAndLarge) {
  // Medium magnitudes spread over [45, 60]: each 5-degree bin near 1/3 of them.
  std::vector<double> bins(3, 0.0);
  for (int i = 0; i < 30000; ++i) {
    SampleRng r(78, i);
    const double m = std::abs(sample_angle(r));
    if (m >= 45 && m <= 60) bins[std::min(2, static_cast<int>((m - 45) / 5))] += 1;
  }
  EXPECT_LT(pearson(bins, {1.0 / 3, 1.0 / 3, 1.0 / 3}), critical(2, 0.001));
}

TEST(BuildRotationSpec, InactiveAxesAreZero) {
  int seen_gamma_only = 0, seen_triple = 0;
  for (int i = 0; i < 5000; ++i) {
    SampleRng r(3, i);
    const SampledRotation s = build_rotation_spec(r);
    ASSERT_EQ(s.spec.roll_gamma != 0.0, uses_gamma(s.axes));
    ASSERT_EQ(s.spec.pitch_theta != 0.0, uses_theta(s.axes));
    ASSERT_EQ(s.spec.yaw_phi != 0.0, uses_phi(s.axes));
    s.spec.validate();
    seen_gamma_only += s.axes == AxisCombination::Gamma;
    seen_triple += s.axes == AxisCombination::ThetaPhiGamma;
  }
  EXPECT_GT(seen_gamma_only, 0);
  EXPECT_GT(seen_triple, 0);
}

TEST(BuildRotationSpec, DeterministicAndPolicyBalanced) {
  int near = 0;
  for (int i = 0; i < 20000; ++i) {
    SampleRng a(11, i), b(11, i);
    const SampledRotation x = build_rotation_spec(a);
    const SampledRotation y = build_rotation_spec(b);
    ASSERT_EQ(x.axes, y.axes);
    ASSERT_EQ(x.spec, y.spec);
    near += x.spec.order_policy == OrderPolicy::NearField;
  }
  EXPECT_NEAR(near / 20000.0, 0.5, 0.015);
}

TEST(BuildRotationSpecProperty, AnglesNeverLeaveCategories) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (int i = 0; i < 10000; ++i) {
      SampleRng r(seed, i);
      const SampledRotation s = build_rotation_spec(r);
      for (double a : {s.spec.roll_gamma, s.spec.pitch_theta, s.spec.yaw_phi}) {
        if (a != 0.0) ASSERT_TRUE(categorize_angle(a).has_value()) << a;
      }
    }
  }
}

TEST(StreamIndependence, PermutedOrderGivesSameDraws) {
  std::vector<RotationSpec> forward(500), backward(500);
  for (int i = 0; i < 500; ++i) {
    SampleRng r = SampleRng(99, i).substream(stream::kRotation);
    forward[i] = build_rotation_spec(r).spec;
  }
  std::vector<int> order(500);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  std::rotate(order.begin(), order.begin() + 137, order.end());
  for (int i : order) {
    SampleRng r = SampleRng(99, i).substream(stream::kRotation);
    backward[i] = build_rotation_spec(r).spec;
  }
  EXPECT_EQ(forward, backward);
}

TEST(SampleArc, ThirtyThousandDraws) {
  std::map<int, int> levels;
  int up = 0;
  const int n = 30000;
  for (int i = 0; i < n; ++i) {
    SampleRng r(5, i);
    const ArcParams p = sample_arc(r);
    p.validate();
    levels[p.total_angle]++;
    up += p.direction == ArcDirection::ArchUp;
  }
  ASSERT_EQ(levels.size(), 3u);
  for (int level : kArcLevels) EXPECT_NEAR(100.0 * levels[level] / n, 100.0 / 3, 1.0) << level;
  EXPECT_NEAR(100.0 * up / n, 50.0, 1.0);
  SampleRng a(5, 1), b(5, 1);
  EXPECT_EQ(sample_arc(a), sample_arc(b));
}

TEST(SampleBend, WithinSweepRange) {
  double lo = 1e9, hi = -1e9;
  for (int i = 0; i < 20000; ++i) {
    SampleRng r(6, i);
    const BendParams b = sample_bend(r);
    b.validate();
    lo = std::min(lo, b.sweep_angle);
    hi = std::max(hi, b.sweep_angle);
  }
  EXPECT_LT(lo, 31.0);
  EXPECT_GT(hi, 119.0);
}

TEST(SampleKind, BendFraction) {
  int bent_half = 0;
  for (int i = 0; i < 40000; ++i) {
    SampleRng r0(8, i), r1(8, i), rh(8, i);
    ASSERT_EQ(sample_kind(r0, 0.0), SampleKind::FlatRotated);
    ASSERT_EQ(sample_kind(r1, 1.0), SampleKind::CylinderBent);
    bent_half += sample_kind(rh, 0.5) == SampleKind::CylinderBent;
  }
  EXPECT_NEAR(100.0 * bent_half / 40000, 50.0, 1.0);
  EXPECT_EQ(sample_kind_from_string("CylinderBent"), SampleKind::CylinderBent);
  EXPECT_THROW(sample_kind_from_string("Bent"), InvalidArgument);
}

TEST(SampleFont, UniformOverFontSet) {
  const FontSet fonts = load_fonts(testing::fonts_dir());
  std::vector<double> counts(fonts.size(), 0.0);
  const int n = 30000;
  for (int i = 0; i < n; ++i) {
    SampleRng r(12, i);
    counts[sample_font(r, fonts)] += 1;
  }
  for (double c : counts) EXPECT_NEAR(100.0 * c / n, 100.0 / fonts.size(), 1.0);
  EXPECT_LT(pearson(counts, std::vector<double>(fonts.size(), 1.0 / fonts.size())), critical(2, 0.001));
  SampleRng r(1, 1);
  EXPECT_THROW(sample_font(r, FontSet{}), ConfigError);
}

TEST(SampleFill, ReturnsFirstPassingColor) {
  SampleRng r(13, 0);
  int calls = 0;
  const Rgb c = sample_fill(r, [&](Rgb) { return ++calls >= 3 ? 100.0 : 0.0; }, 30.0);
  EXPECT_EQ(calls, 3);
  SampleRng replay(13, 0);
  Rgb third;
  for (int i = 0; i < 3; ++i) {
    third = {static_cast<std::uint8_t>(replay.below(256)), static_cast<std::uint8_t>(replay.below(256)),
             static_cast<std::uint8_t>(replay.below(256))};
  }
  EXPECT_EQ(c, third);
}

TEST(SampleFill, FallbackPicksHighestContrastAttempt) {
  for (int seed = 0; seed < 50; ++seed) {
    SampleRng r(14, seed);
    std::vector<std::pair<double, Rgb>> seen;
    const Rgb c = sample_fill(r, [&](Rgb x) {
      const double score = luma(x) / 255.0 * 29.0;  // always below the floor
      seen.emplace_back(score, x);
      return score;
    }, 30.0);
    ASSERT_EQ(seen.size(), 10u);
    const auto best = std::max_element(seen.begin(), seen.end(),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
    ASSERT_EQ(c, best->second);
  }
}

TEST(SampleStyle, Deterministic) {
  const FontSet fonts = load_fonts(testing::fonts_dir());
  const ContrastFn any = [](Rgb x) { return luma(x); };
  for (int i = 0; i < 100; ++i) {
    SampleRng a(15, i), b(15, i);
    ASSERT_EQ(sample_style(a, fonts, any, 30.0), sample_style(b, fonts, any, 30.0));
  }
}

}  // namespace
}  // namespace syn3dtxt
