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

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "syn3dtxt/error.hpp"
#include "syn3dtxt/geometry3d.hpp"

namespace syn3dtxt {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCos30 = 0.8660254037844386;
constexpr double kHalfSqrt2 = 0.7071067811865476;

// Oracle: the same matrices assembled from Eigen axis-angle rotations.
Eigen::Matrix3d oracle_roll(double deg) { return Eigen::AngleAxisd(deg * kPi / 180, Eigen::Vector3d::UnitZ()).matrix(); }
Eigen::Matrix3d oracle_pitch(double deg) { return Eigen::AngleAxisd(deg * kPi / 180, Eigen::Vector3d::UnitX()).matrix(); }
Eigen::Matrix3d oracle_yaw(double deg) { return Eigen::AngleAxisd(-deg * kPi / 180, Eigen::Vector3d::UnitY()).matrix(); }

Eigen::Matrix3d block(const Mat4& m) {
  Eigen::Matrix3d b;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) b(r, c) = m(r, c);
  return b;
}

void expect_homogeneous_frame(const Mat4& m) {
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(m(3, i), 0.0);
    EXPECT_EQ(m(i, 3), 0.0);
  }
  EXPECT_EQ(m(3, 3), 1.0);
}

RotationSpec random_spec(std::mt19937_64& g) {
  std::uniform_real_distribution<double> a(-90.0, 90.0);
  return {a(g), a(g), a(g), g() % 2 ? OrderPolicy::NearField : OrderPolicy::FarField};
}

TEST(RotRoll, ZeroIsIdentity) { EXPECT_EQ(max_abs_diff(rot_roll(0), Mat4::identity()), 0.0); }

TEST(RotRoll, QuarterTurn) {
  const Mat4 m = rot_roll(90);
  EXPECT_EQ(m(0, 0), 0.0);
  EXPECT_EQ(m(0, 1), -1.0);
  EXPECT_EQ(m(1, 0), 1.0);
  EXPECT_EQ(m(1, 1), 0.0);
  EXPECT_EQ(m(2, 2), 1.0);
  expect_homogeneous_frame(m);
}

TEST(RotRoll, ThirtyDegrees) {
  const Mat4 m = rot_roll(30);
  EXPECT_NEAR(m(0, 0), kCos30, 1e-15);
  EXPECT_NEAR(m(0, 1), -0.5, 1e-15);
  EXPECT_NEAR(m(1, 0), 0.5, 1e-15);
  EXPECT_NEAR(m(1, 1), kCos30, 1e-15);
  EXPECT_EQ(m(2, 2), 1.0);
  EXPECT_EQ(m(0, 2), 0.0);
}

TEST(RotYaw, ZeroIsIdentity) { EXPECT_EQ(max_abs_diff(rot_yaw(0), Mat4::identity()), 0.0); }

TEST(RotYaw, QuarterTurnMixesXZ) {
  const Mat4 m = rot_yaw(90);
  EXPECT_EQ(m(0, 0), 0.0);
  EXPECT_EQ(m(0, 2), -1.0);
  EXPECT_EQ(m(2, 0), 1.0);
  EXPECT_EQ(m(2, 2), 0.0);
  EXPECT_EQ(m(1, 1), 1.0);
  expect_homogeneous_frame(m);
}

TEST(RotYaw, FortyFive) {
  const Mat4 m = rot_yaw(45);
  EXPECT_NEAR(m(0, 0), kHalfSqrt2, 1e-15);
  EXPECT_NEAR(m(0, 2), -kHalfSqrt2, 1e-15);
  EXPECT_NEAR(m(2, 0), kHalfSqrt2, 1e-15);
  EXPECT_NEAR(m(2, 2), kHalfSqrt2, 1e-15);
}

TEST(RotPitch, ZeroIsIdentity) { EXPECT_EQ(max_abs_diff(rot_pitch(0), Mat4::identity()), 0.0); }

TEST(RotPitch, QuarterTurnMixesYZ) {
  const Mat4 m = rot_pitch(90);
  EXPECT_EQ(m(1, 1), 0.0);
  EXPECT_EQ(m(1, 2), -1.0);
  EXPECT_EQ(m(2, 1), 1.0);
  EXPECT_EQ(m(2, 2), 0.0);
  EXPECT_EQ(m(0, 0), 1.0);
}

TEST(RotPitch, FortyFive) {
  const Mat4 m = rot_pitch(45);
  EXPECT_NEAR(m(1, 1), kHalfSqrt2, 1e-15);
  EXPECT_NEAR(m(1, 2), -kHalfSqrt2, 1e-15);
  EXPECT_NEAR(m(2, 1), kHalfSqrt2, 1e-15);
  EXPECT_NEAR(m(2, 2), kHalfSqrt2, 1e-15);
}

TEST(Rotations, NonFiniteInputRejected) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(rot_roll(nan), InvalidArgument);
  EXPECT_THROW(rot_yaw(inf), InvalidArgument);
  EXPECT_THROW(rot_pitch(-inf), InvalidArgument);
}

TEST(Rotations, MatchAxisAngleOracle) {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> a(-90.0, 90.0);
  for (int i = 0; i < 1000; ++i) {
    const double d = a(g);
    EXPECT_LT((block(rot_roll(d)) - oracle_roll(d)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((block(rot_pitch(d)) - oracle_pitch(d)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((block(rot_yaw(d)) - oracle_yaw(d)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(RotationSpec, ValidateRange) {
  EXPECT_NO_THROW((RotationSpec{90, -90, 0, OrderPolicy::NearField}.validate()));
  EXPECT_THROW((RotationSpec{90.5, 0, 0, OrderPolicy::NearField}.validate()), InvalidArgument);
  EXPECT_THROW((RotationSpec{0, std::nan(""), 0, OrderPolicy::FarField}.validate()), InvalidArgument);
}

TEST(ComposeRotation, ZeroSpecIsIdentity) {
  for (auto p : {OrderPolicy::NearField, OrderPolicy::FarField}) {
    EXPECT_EQ(max_abs_diff(compose_rotation({0, 0, 0, p}), Mat4::identity()), 0.0);
  }
}

TEST(ComposeRotation, PoliciesDifferForPitchAndYaw) {
  const Mat4 near = compose_rotation({0, 30, 45, OrderPolicy::NearField});
  const Mat4 far = compose_rotation({0, 30, 45, OrderPolicy::FarField});
  EXPECT_GT(max_abs_diff(near, far), 0.01);
  const Eigen::Matrix3d near_oracle = oracle_yaw(45) * oracle_pitch(30);
  const Eigen::Matrix3d far_oracle = oracle_pitch(30) * oracle_yaw(45);
  EXPECT_LT((block(near) - near_oracle).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((block(far) - far_oracle).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT((near_oracle - far_oracle).cwiseAbs().maxCoeff(), 0.01);
}

TEST(ComposeRotation, SingleRollEqualsRotRoll) {
  for (auto p : {OrderPolicy::NearField, OrderPolicy::FarField}) {
    EXPECT_LT(max_abs_diff(compose_rotation({30, 0, 0, p}), rot_roll(30)), 1e-12);
  }
}

TEST(ComposeRotationProperty, MatchesOracleProducts) {
  std::mt19937_64 g(12);
  for (int i = 0; i < 2000; ++i) {
    const RotationSpec s = random_spec(g);
    const Eigen::Matrix3d r = oracle_roll(s.roll_gamma);
    const Eigen::Matrix3d expected = s.order_policy == OrderPolicy::NearField
                                         ? Eigen::Matrix3d(oracle_yaw(s.yaw_phi) * oracle_pitch(s.pitch_theta) * r)
                                         : Eigen::Matrix3d(oracle_pitch(s.pitch_theta) * oracle_yaw(s.yaw_phi) * r);
    ASSERT_LT((block(compose_rotation(s)) - expected).cwiseAbs().maxCoeff(), 1e-12) << i;
  }
}

TEST(ComposeRotationProperty, OrthonormalWithUnitDeterminant) {
  std::mt19937_64 g(13);
  for (int i = 0; i < 10000; ++i) {
    const Mat4 m = compose_rotation(random_spec(g));
    const Eigen::Matrix3d b = block(m);
    ASSERT_LT((b.transpose() * b - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-9);
    ASSERT_NEAR(m.determinant3(), 1.0, 1e-9);
  }
}

TEST(ComposeRotationProperty, SingleAxisEqualsElementaryMatrix) {
  std::mt19937_64 g(14);
  std::uniform_real_distribution<double> a(-90.0, 90.0);
  for (int i = 0; i < 1000; ++i) {
    const double d = a(g);
    for (auto p : {OrderPolicy::NearField, OrderPolicy::FarField}) {
      ASSERT_LT(max_abs_diff(compose_rotation({d, 0, 0, p}), rot_roll(d)), 1e-12);
      ASSERT_LT(max_abs_diff(compose_rotation({0, d, 0, p}), rot_pitch(d)), 1e-12);
      ASSERT_LT(max_abs_diff(compose_rotation({0, 0, d, p}), rot_yaw(d)), 1e-12);
    }
  }
}

TEST(ComposeRotationProperty, PolicyMattersOnlyWithPitchAndYaw) {
  std::mt19937_64 g(15);
  std::uniform_real_distribution<double> a(1.0, 70.0);
  for (int i = 0; i < 1000; ++i) {
    const double gamma = a(g) * (g() % 2 ? 1 : -1);
    const double theta = a(g) * (g() % 2 ? 1 : -1);
    const double phi = a(g) * (g() % 2 ? 1 : -1);
    ASSERT_GT(max_abs_diff(compose_rotation({gamma, theta, phi, OrderPolicy::NearField}),
                           compose_rotation({gamma, theta, phi, OrderPolicy::FarField})),
              1e-6);
    ASSERT_LT(max_abs_diff(compose_rotation({gamma, 0, phi, OrderPolicy::NearField}),
                           compose_rotation({gamma, 0, phi, OrderPolicy::FarField})),
              1e-12);
    ASSERT_LT(max_abs_diff(compose_rotation({gamma, theta, 0, OrderPolicy::NearField}),
                           compose_rotation({gamma, theta, 0, OrderPolicy::FarField})),
              1e-12);
  }
}

TEST(SelectOrderPolicy, Examples) {
  EXPECT_EQ(select_order_policy(1, 1000), OrderPolicy::FarField);
  EXPECT_EQ(select_order_policy(1, 1), OrderPolicy::NearField);
  EXPECT_EQ(select_order_policy(0, 5), OrderPolicy::FarField);
  EXPECT_THROW(select_order_policy(1, 0), InvalidArgument);
  EXPECT_THROW(select_order_policy(1, -2), InvalidArgument);
}

TEST(OrderPolicyNames, RoundTrip) {
  for (auto p : {OrderPolicy::NearField, OrderPolicy::FarField}) {
    EXPECT_EQ(order_policy_from_string(to_string(p)), p);
  }
  EXPECT_EQ(order_policy_from_string("near"), OrderPolicy::NearField);
  EXPECT_EQ(order_policy_from_string("far"), OrderPolicy::FarField);
  EXPECT_THROW(order_policy_from_string("sideways"), InvalidArgument);
}

TEST(PlaneNormal, Identity) {
  const UnitNormal n = plane_normal(Mat4::identity());
  EXPECT_EQ(n.nx, 0.0);
  EXPECT_EQ(n.ny, 0.0);
  EXPECT_EQ(n.nz, 1.0);
}

TEST(PlaneNormal, YawNinetyFarField) {
  // Oracle: the third column of the yaw block, (-sin 90, 0, cos 90).
  const UnitNormal n = plane_normal(compose_rotation({0, 0, 90, OrderPolicy::FarField}));
  EXPECT_NEAR(n.nx, -1.0, 1e-15);
  EXPECT_NEAR(n.ny, 0.0, 1e-15);
  EXPECT_NEAR(n.nz, 0.0, 1e-15);
}

TEST(PlaneNormal, PureRollKeepsPlusZ) {
  std::mt19937_64 g(16);
  std::uniform_real_distribution<double> a(-90.0, 90.0);
  for (int i = 0; i < 1000; ++i) {
    const UnitNormal n = plane_normal(compose_rotation({a(g), 0, 0, OrderPolicy::NearField}));
    ASSERT_LT(std::abs(n.nx) + std::abs(n.ny) + std::abs(n.nz - 1.0), 1e-12);
  }
  const UnitNormal n = plane_normal(rot_roll(45));
  EXPECT_EQ(encode_normal(n).rgb(), (Rgb{128, 128, 255}));
}

TEST(PlaneNormal, UnitNorm) {
  std::mt19937_64 g(17);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_NEAR(plane_normal(compose_rotation(random_spec(g))).norm(), 1.0, 1e-9);
  }
}

TEST(EncodeNormal, AxisFixtures) {
  EXPECT_EQ(encode_normal({0, 0, 1}).rgb(), (Rgb{128, 128, 255}));
  EXPECT_EQ(encode_normal({1, 0, 0}).rgb(), (Rgb{255, 128, 128}));
  EXPECT_EQ(encode_normal({0, -1, 0}).rgb(), (Rgb{128, 0, 128}));
  EXPECT_EQ(encode_normal({-1, 0, 0}).rgb(), (Rgb{0, 128, 128}));
}

TEST(EncodeNormal, RejectsNonUnit) {
  EXPECT_THROW(encode_normal({0, 0, 1.001}), InvalidArgument);
  EXPECT_THROW(encode_normal({0, 0, 0}), InvalidArgument);
  EXPECT_NO_THROW(encode_normal({0, 0, 1.0 + 5e-7}));
}

TEST(EncodeNormal, SphericalForm) {
  // Pitch-then-yaw spherical angles: (sin t cos p, sin t sin p, cos t).
  const double t = 40 * kPi / 180, p = 25 * kPi / 180;
  const UnitNormal n{std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
  const EncodedNormal e = encode_normal(n);
  EXPECT_EQ(e.r, static_cast<int>(std::lround(255 * (n.nx + 1) / 2)));
  EXPECT_EQ(e.g, static_cast<int>(std::lround(255 * (n.ny + 1) / 2)));
  EXPECT_EQ(e.b, static_cast<int>(std::lround(255 * (n.nz + 1) / 2)));
}

TEST(DecodeNormal, Fixtures) {
  EXPECT_LT(angular_error_deg(decode_normal({128, 128, 255}), {0, 0, 1}), 0.6);
  EXPECT_LT(angular_error_deg(decode_normal({255, 128, 128}), {1, 0, 0}), 0.6);
  const UnitNormal n = decode_normal({0, 0, 0});
  const double k = -1.0 / std::sqrt(3.0);
  EXPECT_NEAR(n.nx, k, 1e-12);
  EXPECT_NEAR(n.ny, k, 1e-12);
  EXPECT_NEAR(n.nz, k, 1e-12);
}

TEST(DecodeNormal, RawNormWithinBand) {
  std::mt19937_64 g(18);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 10000; ++i) {
    double x = nd(g), y = nd(g), z = nd(g);
    const double len = std::sqrt(x * x + y * y + z * z);
    const EncodedNormal e = encode_normal({x / len, y / len, z / len});
    ASSERT_GE(e.raw_norm(), 0.95);
    ASSERT_LE(e.raw_norm(), 1.05);
  }
}

TEST(NormalRoundTrip, TenThousandRandomNormals) {
  std::mt19937_64 g(19);
  std::normal_distribution<double> nd;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double x = nd(g), y = nd(g), z = nd(g);
    const double len = std::sqrt(x * x + y * y + z * z);
    const UnitNormal n{x / len, y / len, z / len};
    worst = std::max(worst, angular_error_deg(decode_normal(encode_normal(n)), n));
  }
  EXPECT_LE(worst, 0.6);
}

TEST(YawFromNormal, InvertsYaw) {
  for (double phi = -80; phi <= 80; phi += 5) {
    EXPECT_NEAR(yaw_from_normal(plane_normal(rot_yaw(phi))), phi, 1e-9);
  }
}

TEST(CameraModel, DefaultsAndValidation) {
  const CameraModel c = CameraModel::for_canvas(256, 64);
  EXPECT_EQ(c.focal_length, 512.0);
  EXPECT_EQ(c.plane_distance, 512.0);
  EXPECT_THROW((CameraModel{0, 10}.validate()), InvalidArgument);
  EXPECT_THROW((CameraModel{100, 50}.validate()), InvalidArgument);
}

TEST(ProjectQuad, IdentityIsUnitMagnification) {
  const CameraModel cam{512, 512};
  const Quad q = project_quad(128, 32, Mat4::identity(), cam);
  const Quad expected{{{-128, -32}, {128, -32}, {128, 32}, {-128, 32}}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(q[i].x, expected[i].x, 1e-12);
    EXPECT_NEAR(q[i].y, expected[i].y, 1e-12);
  }
}

TEST(ProjectQuad, YawSixtyForeshortening) {
  const Quad q = project_quad(128, 32, rot_yaw(60), CameraModel{512, 512});
  // Frozen from an independent evaluation of u = f x / z, v = f y / z.
  const Quad golden{{{-81.68541005697158, -40.842705028485774},
                     {52.609671910241566, -26.30483595512078},
                     {52.609671910241566, 26.30483595512078},
                     {-81.68541005697158, 40.842705028485774}}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(q[i].x, golden[i].x, 1e-9);
    EXPECT_NEAR(q[i].y, golden[i].y, 1e-9);
  }
  const double left = q[3].y - q[0].y;
  const double right = q[2].y - q[1].y;
  EXPECT_GT(left, right);
}

TEST(ProjectQuad, NearPlaneCrossingIsDegenerate) {
  EXPECT_THROW(project_quad(128, 32, rot_pitch(89.9), CameraModel{32, 32}), DegenerateProjection);
  EXPECT_NO_THROW(project_quad(128, 32, rot_pitch(89.9), CameraModel{512, 512}));
}

TEST(Homography, SameQuadGivesIdentity) {
  const Quad q{{{3, 4}, {50, 6}, {47, 30}, {1, 25}}};
  const Homography h = homography_from_quads(q, q);
  const Homography id = Homography::identity();
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(h.entries()[i], id.entries()[i], 1e-9);
}

TEST(Homography, TranslationLastColumn) {
  const Quad src{{{0, 0}, {10, 0}, {10, 10}, {0, 10}}};
  Quad dst = src;
  for (auto& p : dst) {
    p.x += 10;
    p.y += 5;
  }
  const Homography h = homography_from_quads(src, dst);
  EXPECT_NEAR(h.entries()[2], 10.0, 1e-9);
  EXPECT_NEAR(h.entries()[5], 5.0, 1e-9);
  EXPECT_NEAR(h.entries()[8], 1.0, 1e-12);
  EXPECT_NEAR(h.entries()[0], 1.0, 1e-9);
  EXPECT_NEAR(h.entries()[4], 1.0, 1e-9);
}

TEST(Homography, UnitSquareToYawSixtyTrapezoid) {
  const Quad src{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  const Quad dst = project_quad(128, 32, rot_yaw(60), CameraModel{512, 512});
  const Homography h = homography_from_quads(src, dst);
  for (int i = 0; i < 4; ++i) {
    const Point2 p = h.apply(src[i]);
    EXPECT_NEAR(p.x, dst[i].x, 1e-6);
    EXPECT_NEAR(p.y, dst[i].y, 1e-6);
  }
}

TEST(Homography, CollinearQuadRejected) {
  const Quad good{{{0, 0}, {10, 0}, {10, 10}, {0, 10}}};
  const Quad bad{{{0, 0}, {5, 5}, {10, 10}, {0, 10}}};
  EXPECT_THROW(homography_from_quads(bad, good), DegenerateHomography);
  EXPECT_THROW(homography_from_quads(good, bad), DegenerateHomography);
}

TEST(HomographyProperty, RandomQuadsReprojectBelowMicroPixel) {
  std::mt19937_64 g(20);
  std::uniform_real_distribution<double> jitter(-40.0, 40.0);
  int tested = 0;
  while (tested < 1000) {
    Quad src{{{0, 0}, {256, 0}, {256, 64}, {0, 64}}};
    Quad dst = src;
    for (auto& p : src) {
      p.x += jitter(g);
      p.y += jitter(g) * 0.25;
    }
    for (auto& p : dst) {
      p.x += jitter(g);
      p.y += jitter(g) * 0.25;
    }
    Homography h;
    try {
      h = homography_from_quads(src, dst);
    } catch (const DegenerateHomography&) {
      continue;
    }
    ++tested;
    ASSERT_LT(reprojection_error(h, src, dst), 1e-6);
  }
}

TEST(HomographyProperty, ProjectQuadIdentityWhenFocalEqualsDistance) {
  std::mt19937_64 g(21);
  std::uniform_real_distribution<double> size(1.0, 500.0);
  for (int i = 0; i < 200; ++i) {
    const double hw = size(g), hh = size(g), f = 600 + size(g);
    const Quad q = project_quad(hw, hh, Mat4::identity(), CameraModel{f, f});
    ASSERT_NEAR(q[0].x, -hw, 1e-9);
    ASSERT_NEAR(q[2].y, hh, 1e-9);
  }
}

TEST(HomographyAlgebra, InverseAndCompose) {
  const Homography h = homography_from_quads({{{0, 0}, {10, 0}, {10, 10}, {0, 10}}},
                                             {{{1, 2}, {12, 1}, {11, 13}, {0, 9}}});
  const Homography id = h * h.inverse();
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(id.entries()[i], Homography::identity().entries()[i], 1e-9);
  const Homography singular({1, 2, 3, 2, 4, 6, 1, 1, 1});
  EXPECT_THROW(singular.inverse(), DegenerateHomography);
}

Image pattern(int w, int h, int channels) {
  Image img(w, h, channels);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < channels; ++c) {
        img.at(x, y, c) = static_cast<std::uint8_t>((x * 7 + y * 13 + c * 50) % 256);
      }
    }
  }
  return img;
}

Image smooth_pattern(int w, int h) {
  Image img(w, h, 4);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.at(x, y, 0) = static_cast<std::uint8_t>(127.5 + 127.5 * std::sin(x * 0.05));
      img.at(x, y, 1) = static_cast<std::uint8_t>(127.5 + 127.5 * std::cos(y * 0.09));
      img.at(x, y, 2) = static_cast<std::uint8_t>(255.0 * x / (w - 1));
      img.at(x, y, 3) = 255;
    }
  }
  return img;
}

TEST(WarpImage, IdentityNearestIsByteCopy) {
  const Image img = pattern(64, 32, 3);
  EXPECT_EQ(warp_image(img, Homography::identity(), 64, 32, Sampling::Nearest), img);
  EXPECT_EQ(warp_image(img, Homography::identity(), 64, 32, Sampling::Bilinear), img);
}

TEST(WarpImage, IntegerTranslationShiftsExactly) {
  const Image img = pattern(64, 32, 1);
  const Image out = warp_image(img, Homography::translation(5, 3), 64, 32, Sampling::Nearest);
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 64; ++x) {
      if (x >= 5 && y >= 3) {
        ASSERT_EQ(out.at(x, y, 0), img.at(x - 5, y - 3, 0));
      } else {
        ASSERT_EQ(out.at(x, y, 0), 0);
      }
    }
  }
}

TEST(WarpImage, OutOfBoundsIsTransparent) {
  const Image img(16, 16, 2, 200);
  const Image out = warp_image(img, Homography::translation(100, 0), 16, 16, Sampling::Bilinear);
  EXPECT_EQ(out, Image(16, 16, 2, 0));
}

TEST(WarpImage, DoubleWarpBilinearWithinTolerance) {
  const int w = 256, h = 64;
  const Image img = smooth_pattern(w, h);
  const Quad src{{{0, 0}, {256, 0}, {256, 64}, {0, 64}}};
  const Quad dst{{{6, 3}, {250, 8}, {244, 60}, {10, 57}}};
  const Homography hm = homography_from_quads(src, dst);
  const Image back = warp_image(warp_image(img, hm, w, h, Sampling::Bilinear), hm.inverse(), w, h,
                                Sampling::Bilinear);
  // Interior: the region whose forward image lies at least 3 px inside the canvas.
  int worst = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Point2 p = hm.apply({x + 0.0, y + 0.0});
      if (p.x < 3 || p.y < 3 || p.x > w - 4 || p.y > h - 4) continue;
      if (x < 3 || y < 3 || x > w - 4 || y > h - 4) continue;
      for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(back.at(x, y, c) - img.at(x, y, c)));
    }
  }
  RecordProperty("max_channel_error", worst);
  // Measured bound on this pattern is 1; the frozen tolerance keeps one step of slack.
  EXPECT_LE(worst, 2);
}

TEST(WarpImage, TooManyChannelsRejected) {
  EXPECT_THROW(warp_image(Image(4, 4, 5), Homography::identity(), 4, 4, Sampling::Nearest), InvalidArgument);
}

}  // namespace
}  // namespace syn3dtxt
