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
#include <string_view>

#include "syn3dtxt/image.hpp"

namespace syn3dtxt {

/// Which of pitch/yaw is applied first after roll.
///   NearField: pitch then yaw  (M = Yaw * Pitch * Roll)
///   FarField:  yaw then pitch  (M = Pitch * Yaw * Roll)
enum class OrderPolicy { NearField, FarField };

std::string_view to_string(OrderPolicy p);
OrderPolicy order_policy_from_string(std::string_view s);

/// Roll/pitch/yaw in degrees. Each angle lies in [-90, 90].
struct RotationSpec {
  double roll_gamma = 0.0;
  double pitch_theta = 0.0;
  double yaw_phi = 0.0;
  OrderPolicy order_policy = OrderPolicy::NearField;

  void validate() const;
  friend bool operator==(const RotationSpec&, const RotationSpec&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Row-major homogeneous 4x4 transform acting on column vectors.
struct Mat4 {
  std::array<double, 16> m{};

  static Mat4 identity();
  double operator()(int row, int col) const { return m[row * 4 + col]; }
  double& operator()(int row, int col) { return m[row * 4 + col]; }

  /// Upper-left 3x3 block applied to v (translation ignored).
  Vec3 rotate(const Vec3& v) const;
  double determinant3() const;

  friend Mat4 operator*(const Mat4& a, const Mat4& b);
  friend bool operator==(const Mat4&, const Mat4&) = default;
};

/// Largest absolute entry-wise difference.
double max_abs_diff(const Mat4& a, const Mat4& b);

struct UnitNormal {
  double nx = 0.0;
  double ny = 0.0;
  double nz = 1.0;

  double norm() const;
  friend bool operator==(const UnitNormal&, const UnitNormal&) = default;
};

/// Angle between two normals, degrees.
double angular_error_deg(const UnitNormal& a, const UnitNormal& b);

struct EncodedNormal {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  Rgb rgb() const { return {r, g, b}; }
  static EncodedNormal from(Rgb c) { return {c.r, c.g, c.b}; }
  /// Length of the decoded vector before renormalization.
  double raw_norm() const;
  friend bool operator==(const EncodedNormal&, const EncodedNormal&) = default;
};

/// Pinhole camera looking down +z at a plane `plane_distance` away.
struct CameraModel {
  double focal_length = 512.0;
  double plane_distance = 512.0;

  /// f = d = 2 * max(W, H).
  static CameraModel for_canvas(int width, int height);
  void validate() const;
  friend bool operator==(const CameraModel&, const CameraModel&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Corner order: top-left, top-right, bottom-right, bottom-left (image axes, y down).
using Quad = std::array<Point2, 4>;

/// 3x3 projective map, row-major, scaled so h[8] == 1 whenever h[8] != 0.
class Homography {
 public:
  Homography();
  explicit Homography(const std::array<double, 9>& h);

  static Homography identity() { return Homography(); }
  static Homography translation(double tx, double ty);
  /// x' = s * (x - cx) + tx, y' = s * (y - cy) + ty.
  static Homography similarity(double scale, Point2 from_center, Point2 to_center);

  double operator()(int row, int col) const { return h_[row * 3 + col]; }
  const std::array<double, 9>& entries() const { return h_; }

  Point2 apply(Point2 p) const;
  double determinant() const;
  Homography inverse() const;

  friend Homography operator*(const Homography& a, const Homography& b);

 private:
  void normalize();
  std::array<double, 9> h_;
};

// Single-axis rotations, angles in degrees. Multiples of 90 are exact.
Mat4 rot_roll(double gamma_deg);
Mat4 rot_yaw(double phi_deg);
Mat4 rot_pitch(double theta_deg);

Mat4 compose_rotation(const RotationSpec& spec);

/// Elevation angle below which the far-field order is chosen.
inline constexpr double kFarFieldThresholdDeg = 10.0;

/// FarField when atan(height / distance) < threshold, else NearField.
OrderPolicy select_order_policy(double height_y, double distance_x,
                                double threshold_deg = kFarFieldThresholdDeg);

/// Rotation applied to the unrotated plane normal (0, 0, 1).
UnitNormal plane_normal(const Mat4& rotation);

/// Component c in [-1, 1] maps to round(255 * (c + 1) / 2), halves away from zero.
EncodedNormal encode_normal(const UnitNormal& n);
UnitNormal decode_normal(const EncodedNormal& e);

/// Yaw (degrees) of a normal produced by rot_yaw alone: atan2(-nx, nz).
double yaw_from_normal(const UnitNormal& n);

/// Project a plane-local point (x, y, 0) after rotation and offset. Output is
/// relative to the principal point.
Point2 project_point(const Vec3& local, const Mat4& rotation, const Vec3& offset,
                     const CameraModel& cam);

/// Project the plane rectangle (+-half_w, +-half_h, 0), rotated, pushed to
/// depth plane_distance (+offset). Throws DegenerateProjection when a corner
/// lies at or nearer than 0.1 * plane_distance.
Quad project_quad(double half_w, double half_h, const Mat4& rotation, const CameraModel& cam,
                  const Vec3& offset = {});

/// Four-point DLT. Throws DegenerateHomography when three points of either
/// quad are collinear.
Homography homography_from_quads(const Quad& src, const Quad& dst);

/// Largest distance between H*src[i] and dst[i].
double reprojection_error(const Homography& h, const Quad& src, const Quad& dst);

enum class Sampling { Nearest, Bilinear };

/// Inverse-mapped warp: output (x, y) samples the source at H^-1 (x, y) using
/// pixel-center coordinates. Samples outside the source read as zero
/// (transparent); bilinear blends every channel including alpha.
Image warp_image(const Image& img, const Homography& h, int out_w, int out_h, Sampling sampling);

}  // namespace syn3dtxt
