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

#include "syn3dtxt/geometry3d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "syn3dtxt/error.hpp"

namespace syn3dtxt {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct SinCos {
  double s;
  double c;
};

// Exact at multiples of 90 degrees so quarter turns produce clean 0/+-1 entries.
SinCos sin_cos_deg(double deg) {
  const double q = deg / 90.0;
  if (q == std::nearbyint(q) && std::abs(q) < 1e15) {
    static constexpr SinCos kQuarter[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};
    long long k = static_cast<long long>(q) % 4;
    if (k < 0) k += 4;
    return kQuarter[k];
  }
  const double r = deg * kDegToRad;
  return {std::sin(r), std::cos(r)};
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

double cross(Point2 a, Point2 b, Point2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

void require_non_degenerate(const Quad& q, const char* which) {
  double extent = 0.0;
  for (const auto& p : q) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegenerateHomography(std::string(which) + " quad has a non-finite corner");
    }
    for (const auto& r : q) {
      extent = std::max({extent, std::abs(p.x - r.x), std::abs(p.y - r.y)});
    }
  }
  const double tol = 1e-9 * std::max(extent * extent, 1e-300);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (extent == 0.0 || std::abs(cross(q[i], q[j], q[k])) <= tol) {
          throw DegenerateHomography(std::string(which) + " quad has three collinear corners");
        }
      }
    }
  }
}

// Similarity taking the points to zero centroid and mean distance sqrt(2).
Eigen::Matrix3d normalizing_transform(const Quad& q) {
  double cx = 0, cy = 0;
  for (const auto& p : q) {
    cx += p.x;
    cy += p.y;
  }
  cx /= 4;
  cy /= 4;
  double mean = 0;
  for (const auto& p : q) mean += std::hypot(p.x - cx, p.y - cy);
  mean /= 4;
  const double s = std::numbers::sqrt2 / mean;
  Eigen::Matrix3d t;
  t << s, 0, -s * cx, 0, s, -s * cy, 0, 0, 1;
  return t;
}

}  // namespace

std::string_view to_string(OrderPolicy p) {
  return p == OrderPolicy::NearField ? "NearField" : "FarField";
}

OrderPolicy order_policy_from_string(std::string_view s) {
  if (s == "NearField" || s == "near") return OrderPolicy::NearField;
  if (s == "FarField" || s == "far") return OrderPolicy::FarField;
  throw InvalidArgument("unknown order policy '" + std::string(s) + "'");
}

void RotationSpec::validate() const {
  for (double a : {roll_gamma, pitch_theta, yaw_phi}) {
    require_finite(a, "rotation angle");
    if (a < -90.0 || a > 90.0) {
      throw InvalidArgument("rotation angle " + std::to_string(a) + " outside [-90, 90]");
    }
  }
}

Mat4 Mat4::identity() {
  Mat4 r;
  r(0, 0) = r(1, 1) = r(2, 2) = r(3, 3) = 1.0;
  return r;
}

Vec3 Mat4::rotate(const Vec3& v) const {
  const Mat4& a = *this;
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

double Mat4::determinant3() const {
  const Mat4& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double d = 0.0;
  for (int i = 0; i < 16; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

double UnitNormal::norm() const { return std::sqrt(nx * nx + ny * ny + nz * nz); }

double angular_error_deg(const UnitNormal& a, const UnitNormal& b) {
  const double cx = a.ny * b.nz - a.nz * b.ny;
  const double cy = a.nz * b.nx - a.nx * b.nz;
  const double cz = a.nx * b.ny - a.ny * b.nx;
  const double dot = a.nx * b.nx + a.ny * b.ny + a.nz * b.nz;
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot) / kDegToRad;
}

double EncodedNormal::raw_norm() const {
  const double x = 2.0 * r / 255.0 - 1.0;
  const double y = 2.0 * g / 255.0 - 1.0;
  const double z = 2.0 * b / 255.0 - 1.0;
  return std::sqrt(x * x + y * y + z * z);
}

CameraModel CameraModel::for_canvas(int width, int height) {
  const double d = 2.0 * std::max(width, height);
  return {d, d};
}

void CameraModel::validate() const {
  require_finite(focal_length, "focal length");
  require_finite(plane_distance, "plane distance");
  if (focal_length <= 0.0) throw InvalidArgument("focal length must be positive");
  if (plane_distance < focal_length) {
    throw InvalidArgument("plane distance must be at least the focal length");
  }
}

Homography::Homography() : h_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

Homography::Homography(const std::array<double, 9>& h) : h_(h) { normalize(); }

Homography Homography::translation(double tx, double ty) {
  return Homography({1, 0, tx, 0, 1, ty, 0, 0, 1});
}

Homography Homography::similarity(double scale, Point2 from_center, Point2 to_center) {
  return Homography({scale, 0, to_center.x - scale * from_center.x, 0, scale,
                     to_center.y - scale * from_center.y, 0, 0, 1});
}

void Homography::normalize() {
  double mx = 0.0;
  for (double v : h_) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) return;
  const double div = std::abs(h_[8]) > 1e-12 * mx ? h_[8] : mx;
  for (double& v : h_) v /= div;
}

Point2 Homography::apply(Point2 p) const {
  const double w = h_[6] * p.x + h_[7] * p.y + h_[8];
  return {(h_[0] * p.x + h_[1] * p.y + h_[2]) / w, (h_[3] * p.x + h_[4] * p.y + h_[5]) / w};
}

double Homography::determinant() const {
  const auto& a = h_;
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Homography Homography::inverse() const {
  const double det = determinant();
  if (!(std::abs(det) > 1e-12)) throw DegenerateHomography("homography is not invertible");
  const auto& a = h_;
  std::array<double, 9> inv{
      (a[4] * a[8] - a[5] * a[7]) / det, (a[2] * a[7] - a[1] * a[8]) / det,
      (a[1] * a[5] - a[2] * a[4]) / det, (a[5] * a[6] - a[3] * a[8]) / det,
      (a[0] * a[8] - a[2] * a[6]) / det, (a[2] * a[3] - a[0] * a[5]) / det,
      (a[3] * a[7] - a[4] * a[6]) / det, (a[1] * a[6] - a[0] * a[7]) / det,
      (a[0] * a[4] - a[1] * a[3]) / det};
  return Homography(inv);
}

Homography operator*(const Homography& a, const Homography& b) {
  std::array<double, 9> r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r[i * 3 + j] = s;
    }
  }
  return Homography(r);
}

Mat4 rot_roll(double gamma_deg) {
  require_finite(gamma_deg, "roll");
  const auto [s, c] = sin_cos_deg(gamma_deg);
  Mat4 r = Mat4::identity();
  r(0, 0) = c;
  r(0, 1) = -s;
  r(1, 0) = s;
  r(1, 1) = c;
  return r;
}

Mat4 rot_yaw(double phi_deg) {
  require_finite(phi_deg, "yaw");
  const auto [s, c] = sin_cos_deg(phi_deg);
  Mat4 r = Mat4::identity();
  r(0, 0) = c;
  r(0, 2) = -s;
  r(2, 0) = s;
  r(2, 2) = c;
  return r;
}

Mat4 rot_pitch(double theta_deg) {
  require_finite(theta_deg, "pitch");
  const auto [s, c] = sin_cos_deg(theta_deg);
  Mat4 r = Mat4::identity();
  r(1, 1) = c;
  r(1, 2) = -s;
  r(2, 1) = s;
  r(2, 2) = c;
  return r;
}

Mat4 compose_rotation(const RotationSpec& spec) {
  spec.validate();
  const Mat4 roll = rot_roll(spec.roll_gamma);
  const Mat4 pitch = rot_pitch(spec.pitch_theta);
  const Mat4 yaw = rot_yaw(spec.yaw_phi);
  if (spec.order_policy == OrderPolicy::NearField) return yaw * (pitch * roll);
  return pitch * (yaw * roll);
}

OrderPolicy select_order_policy(double height_y, double distance_x, double threshold_deg) {
  require_finite(height_y, "height");
  require_finite(distance_x, "distance");
  if (distance_x <= 0.0) throw InvalidArgument("distance must be positive");
  if (height_y < 0.0) throw InvalidArgument("height must be non-negative");
  const double elevation = std::atan(height_y / distance_x) / kDegToRad;
  return elevation < threshold_deg ? OrderPolicy::FarField : OrderPolicy::NearField;
}

UnitNormal plane_normal(const Mat4& rotation) {
  const Vec3 n = rotation.rotate({0.0, 0.0, 1.0});
  return {n.x, n.y, n.z};
}

EncodedNormal encode_normal(const UnitNormal& n) {
  const double len = n.norm();
  if (!std::isfinite(len) || std::abs(len - 1.0) > 1e-6) {
    throw InvalidArgument("encode_normal expects a unit vector");
  }
  auto q = [](double c) {
    const double v = std::lround(255.0 * (c + 1.0) / 2.0);
    return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  };
  return {q(n.nx), q(n.ny), q(n.nz)};
}

UnitNormal decode_normal(const EncodedNormal& e) {
  const double x = 2.0 * e.r / 255.0 - 1.0;
  const double y = 2.0 * e.g / 255.0 - 1.0;
  const double z = 2.0 * e.b / 255.0 - 1.0;
  const double len = std::sqrt(x * x + y * y + z * z);
  if (len == 0.0) return {0.0, 0.0, 1.0};
  return {x / len, y / len, z / len};
}

double yaw_from_normal(const UnitNormal& n) { return std::atan2(-n.nx, n.nz) / kDegToRad; }

Point2 project_point(const Vec3& local, const Mat4& rotation, const Vec3& offset,
                     const CameraModel& cam) {
  const Vec3 r = rotation.rotate(local);
  const double z = r.z + offset.z + cam.plane_distance;
  if (!(z > 0.1 * cam.plane_distance)) {
    throw DegenerateProjection("point reaches the camera near limit");
  }
  return {cam.focal_length * (r.x + offset.x) / z, cam.focal_length * (r.y + offset.y) / z};
}

Quad project_quad(double half_w, double half_h, const Mat4& rotation, const CameraModel& cam,
                  const Vec3& offset) {
  cam.validate();
  if (!(half_w > 0.0) || !(half_h > 0.0)) {
    throw InvalidArgument("quad half extents must be positive");
  }
  const std::array<Vec3, 4> corners{
      Vec3{-half_w, -half_h, 0}, Vec3{half_w, -half_h, 0}, Vec3{half_w, half_h, 0},
      Vec3{-half_w, half_h, 0}};
  Quad out;
  for (int i = 0; i < 4; ++i) out[i] = project_point(corners[i], rotation, offset, cam);
  return out;
}

Homography homography_from_quads(const Quad& src, const Quad& dst) {
  require_non_degenerate(src, "source");
  require_non_degenerate(dst, "destination");
  const Eigen::Matrix3d ts = normalizing_transform(src);
  const Eigen::Matrix3d td = normalizing_transform(dst);

  Eigen::Matrix<double, 9, 9> a = Eigen::Matrix<double, 9, 9>::Zero();
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector3d s = ts * Eigen::Vector3d(src[i].x, src[i].y, 1.0);
    const Eigen::Vector3d d = td * Eigen::Vector3d(dst[i].x, dst[i].y, 1.0);
    const double x = s.x() / s.z(), y = s.y() / s.z();
    const double u = d.x() / d.z(), v = d.y() / d.z();
    a.row(2 * i) << -x, -y, -1, 0, 0, 0, u * x, u * y, u;
    a.row(2 * i + 1) << 0, 0, 0, -x, -y, -1, v * x, v * y, v;
  }
  // Ninth row stays zero; the null vector is the last right singular vector.
  Eigen::JacobiSVD<Eigen::Matrix<double, 9, 9>> svd(a, Eigen::ComputeFullV);
  const Eigen::Matrix<double, 9, 1> hv = svd.matrixV().col(8);
  Eigen::Matrix3d hn;
  hn << hv(0), hv(1), hv(2), hv(3), hv(4), hv(5), hv(6), hv(7), hv(8);
  const Eigen::Matrix3d h = td.inverse() * hn * ts;

  std::array<double, 9> e{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) e[r * 3 + c] = h(r, c);
  }
  Homography out(e);
  if (!(std::abs(out.determinant()) > 1e-12)) {
    throw DegenerateHomography("solved homography is singular");
  }
  return out;
}

double reprojection_error(const Homography& h, const Quad& src, const Quad& dst) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Point2 p = h.apply(src[i]);
    worst = std::max(worst, std::hypot(p.x - dst[i].x, p.y - dst[i].y));
  }
  return worst;
}

Image warp_image(const Image& img, const Homography& h, int out_w, int out_h, Sampling sampling) {
  const int ch = img.channels();
  if (ch > 4) throw InvalidArgument("warp_image supports at most 4 channels");
  const Homography inv = h.inverse();
  const auto& m = inv.entries();
  const int sw = img.width();
  const int sh = img.height();
  Image out(out_w, out_h, ch);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const double w = m[6] * x + m[7] * y + m[8];
      if (w == 0.0) continue;
      const double sx = (m[0] * x + m[1] * y + m[2]) / w;
      const double sy = (m[3] * x + m[4] * y + m[5]) / w;
      if (!(sx > -1.0 && sy > -1.0 && sx < sw && sy < sh)) continue;
      std::uint8_t* dst = out.pixel(x, y);
      if (sampling == Sampling::Nearest) {
        const int ix = static_cast<int>(std::floor(sx + 0.5));
        const int iy = static_cast<int>(std::floor(sy + 0.5));
        if (ix < 0 || iy < 0 || ix >= sw || iy >= sh) continue;
        const std::uint8_t* src = img.pixel(ix, iy);
        std::copy(src, src + ch, dst);
        continue;
      }
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double tx = sx - x0;
      const double ty = sy - y0;
      const double wts[4] = {(1 - tx) * (1 - ty), tx * (1 - ty), (1 - tx) * ty, tx * ty};
      const int xs[4] = {x0, x0 + 1, x0, x0 + 1};
      const int ys[4] = {y0, y0, y0 + 1, y0 + 1};
      double acc[4] = {0, 0, 0, 0};
      for (int k = 0; k < 4; ++k) {
        if (wts[k] == 0.0 || xs[k] < 0 || ys[k] < 0 || xs[k] >= sw || ys[k] >= sh) continue;
        const std::uint8_t* src = img.pixel(xs[k], ys[k]);
        for (int c = 0; c < ch && c < 4; ++c) acc[c] += wts[k] * src[c];
      }
      for (int c = 0; c < ch && c < 4; ++c) {
        dst[c] = static_cast<std::uint8_t>(std::min(255.0, std::floor(acc[c] + 0.5)));
      }
    }
  }
  return out;
}

}  // namespace syn3dtxt
