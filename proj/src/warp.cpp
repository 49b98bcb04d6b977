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

#include "syn3dtxt/warp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "syn3dtxt/error.hpp"

namespace syn3dtxt {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct Bounds2 {
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  void add(Point2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  Point2 center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
};

// Polar mapping of the flat text around a circle tangent to the baseline at
// the ink center; `radius` is the baseline radius. Rows at height h above the baseline land on radius sqrt(R^2 +- 2 R h):
// displacement is h to first order and the area element r dr d(alpha) equals
// the source dx dh, so ink mass is preserved by construction.
struct ArcMap {
  double cx;
  double baseline;
  double radius;
  ArcDirection dir;

  double sign() const { return dir == ArcDirection::ArchUp ? 1.0 : -1.0; }

  Point2 forward(double x, double y) const {
    const double alpha = (x - cx) / radius;
    const double h = baseline - y;
    const double r = std::sqrt(std::max(0.0, radius * radius + sign() * 2.0 * radius * h));
    if (dir == ArcDirection::ArchUp) {
      return {cx + r * std::sin(alpha), baseline + radius - r * std::cos(alpha)};
    }
    return {cx + r * std::sin(alpha), baseline - radius + r * std::cos(alpha)};
  }

  Point2 inverse(double X, double Y) const {
    const double dx = X - cx;
    const double dy = dir == ArcDirection::ArchUp ? baseline + radius - Y : Y - (baseline - radius);
    const double r = std::hypot(dx, dy);
    const double alpha = std::atan2(dx, dy);
    const double h = sign() * (r * r - radius * radius) / (2.0 * radius);
    return {cx + alpha * radius, baseline - h};
  }
};

double sample_bilinear(const Image& img, double sx, double sy) {
  const int x0 = static_cast<int>(std::floor(sx));
  const int y0 = static_cast<int>(std::floor(sy));
  const double tx = sx - x0;
  const double ty = sy - y0;
  auto tap = [&](int x, int y) -> double { return img.contains(x, y) ? img.at(x, y) : 0.0; };
  return (tap(x0, y0) * (1 - tx) + tap(x0 + 1, y0) * tx) * (1 - ty) +
         (tap(x0, y0 + 1) * (1 - tx) + tap(x0 + 1, y0 + 1) * tx) * ty;
}

std::uint8_t sample_nearest(const Image& img, double sx, double sy) {
  const int x = static_cast<int>(std::floor(sx + 0.5));
  const int y = static_cast<int>(std::floor(sy + 0.5));
  return img.contains(x, y) ? img.at(x, y) : 0;
}

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

/// Glyph boxes recovered from the label plane; glyphs that lost every pixel
/// keep `fallback`.
std::vector<GlyphBox> boxes_from_labels(const Image& labels, const std::vector<GlyphBox>& fallback) {
  std::vector<GlyphBox> out = fallback;
  std::vector<bool> seen(out.size(), false);
  for (int y = 0; y < labels.height(); ++y) {
    for (int x = 0; x < labels.width(); ++x) {
      const int l = labels.at(x, y);
      if (l == 0 || static_cast<std::size_t>(l) > out.size()) continue;
      GlyphBox& b = out[static_cast<std::size_t>(l - 1)];
      if (!seen[static_cast<std::size_t>(l - 1)]) {
        b.x_min = b.x_max = x;
        seen[static_cast<std::size_t>(l - 1)] = true;
      } else {
        b.x_min = std::min(b.x_min, x);
        b.x_max = std::max(b.x_max, x);
      }
    }
  }
  return out;
}

Image fill_normals(const Image& binary, EncodedNormal color) {
  Image normals(binary.width(), binary.height(), 3);
  for (int y = 0; y < binary.height(); ++y) {
    for (int x = 0; x < binary.width(); ++x) {
      if (binary.at(x, y) == 0) continue;
      std::uint8_t* p = normals.pixel(x, y);
      p[0] = color.r;
      p[1] = color.g;
      p[2] = color.b;
    }
  }
  return normals;
}

Image threshold(const Image& alpha) {
  Image binary(alpha.width(), alpha.height(), 1);
  for (std::size_t i = 0; i < alpha.data().size(); ++i) {
    binary.data()[i] = alpha.data()[i] > kInkThreshold ? 255 : 0;
  }
  return binary;
}

/// Uniform shrink (never enlarge) plus re-centering onto a w x h canvas.
Homography fit_to_canvas(const Bounds2& b, int w, int h) {
  const double k = std::min({1.0, w / b.width(), h / b.height()});
  return Homography::similarity(k, b.center(), {(w - 1) / 2.0, (h - 1) / 2.0});
}

}  // namespace

std::string_view to_string(ArcDirection d) {
  return d == ArcDirection::ArchUp ? "ArchUp" : "ArchDown";
}

ArcDirection arc_direction_from_string(std::string_view s) {
  if (s == "ArchUp" || s == "up") return ArcDirection::ArchUp;
  if (s == "ArchDown" || s == "down") return ArcDirection::ArchDown;
  throw InvalidArgument("unknown arc direction '" + std::string(s) + "'");
}

void ArcParams::validate() const {
  if (std::find(std::begin(kArcLevels), std::end(kArcLevels), total_angle) == std::end(kArcLevels)) {
    throw InvalidArgument("arc angle must be 0, 60 or 120 (got " + std::to_string(total_angle) + ")");
  }
}

void BendParams::validate() const {
  if (!(sweep_angle >= kMinSweepDeg && sweep_angle <= kMaxSweepDeg)) {
    throw InvalidArgument("bend sweep must lie in [30, 120] degrees");
  }
}

TextMask arc_warp(const TextMask& mask, const ArcParams& params) {
  params.validate();
  if (params.total_angle == 0) return mask;
  const auto ink = ink_bounds(mask.alpha);
  if (!ink) return mask;

  const double angle = params.total_angle * kDegToRad;
  const double ink_w = ink->width();
  const double ascent = mask.baseline_y - ink->y0 + 1.0;
  const double descent = ink->y1 - mask.baseline_y + 1.0;
  // Arc length along the baseline equals the ink width. Short words would
  // give a radius too small for the inner side of the arc to hold the glyph
  // height, so the radius is floored at twice the ink extent.
  const double radius = std::max({ink_w / angle, 2.0 * ascent + 2.0, 2.0 * descent + 2.0});
  const ArcMap map{0.5 * (ink->x0 + ink->x1), static_cast<double>(mask.baseline_y), radius,
                   params.direction};

  Bounds2 warped;
  const double x0 = ink->x0 - 0.5, x1 = ink->x1 + 0.5, y0 = ink->y0 - 0.5, y1 = ink->y1 + 0.5;
  constexpr int kSteps = 64;
  for (int i = 0; i <= kSteps; ++i) {
    const double t = static_cast<double>(i) / kSteps;
    warped.add(map.forward(x0 + t * (x1 - x0), y0));
    warped.add(map.forward(x0 + t * (x1 - x0), y1));
    warped.add(map.forward(x0, y0 + t * (y1 - y0)));
    warped.add(map.forward(x1, y0 + t * (y1 - y0)));
  }

  const int w = mask.width();
  const int h = mask.height();
  const double k = std::min({1.0, (w - 2) / warped.width(), (h - 2) / warped.height()});
  const Point2 wc = warped.center();
  const double ucx = (w - 1) / 2.0;
  const double ucy = (h - 1) / 2.0;

  TextMask out;
  out.alpha = Image(w, h, 1);
  out.labels = Image(w, h, 1);
  out.scale = mask.scale * k;
  for (int v = 0; v < h; ++v) {
    for (int u = 0; u < w; ++u) {
      const Point2 src = map.inverse(wc.x + (u - ucx) / k, wc.y + (v - ucy) / k);
      if (src.x < x0 - 1 || src.x > x1 + 1 || src.y < y0 - 1 || src.y > y1 + 1) continue;
      out.alpha.at(u, v) = to_byte(sample_bilinear(mask.alpha, src.x, src.y));
      out.labels.at(u, v) = sample_nearest(mask.labels, src.x, src.y);
    }
  }
  const Point2 base = map.forward(map.cx, map.baseline);
  out.baseline_y = static_cast<int>(std::lround(ucy + k * (base.y - wc.y)));
  out.glyphs = mask.glyphs;
  for (auto& g : out.glyphs) {
    const Point2 c = map.forward(0.5 * (g.x_min + g.x_max), map.baseline);
    g.x_min = g.x_max = static_cast<int>(std::lround(ucx + k * (c.x - wc.x)));
  }
  out.glyphs = boxes_from_labels(out.labels, out.glyphs);
  return out;
}

Homography planar_homography(int canvas_w, int canvas_h, const Mat4& rotation,
                             const CameraModel& cam) {
  const double hw = canvas_w / 2.0;
  const double hh = canvas_h / 2.0;
  const Point2 c{(canvas_w - 1) / 2.0, (canvas_h - 1) / 2.0};
  const Quad projected = project_quad(hw, hh, rotation, cam);
  Quad src{Point2{-0.5, -0.5}, Point2{canvas_w - 0.5, -0.5}, Point2{canvas_w - 0.5, canvas_h - 0.5},
           Point2{-0.5, canvas_h - 0.5}};
  Bounds2 b;
  Quad dst;
  for (int i = 0; i < 4; ++i) {
    dst[i] = {projected[i].x + c.x, projected[i].y + c.y};
    b.add(dst[i]);
  }
  b.x0 = std::min(b.x0, -0.5);  // keep the fit a pure shrink about the canvas
  b.x1 = std::max(b.x1, canvas_w - 0.5);
  b.y0 = std::min(b.y0, -0.5);
  b.y1 = std::max(b.y1, canvas_h - 0.5);
  const Homography fit = fit_to_canvas(b, canvas_w, canvas_h);
  for (auto& p : dst) p = fit.apply(p);
  return homography_from_quads(src, dst);
}

WarpedText planar_rotate(const TextMask& mask, const RotationSpec& spec, const CameraModel& cam) {
  const Mat4 rotation = compose_rotation(spec);
  const Homography h = planar_homography(mask.width(), mask.height(), rotation, cam);
  WarpedText out;
  out.alpha = warp_image(mask.alpha, h, mask.width(), mask.height(), Sampling::Bilinear);
  out.binary = threshold(out.alpha);
  out.normals = fill_normals(out.binary, encode_normal(plane_normal(rotation)));
  return out;
}

std::vector<double> glyph_stations(const std::vector<GlyphBox>& glyphs, double sweep_deg) {
  const std::size_t n = glyphs.size();
  if (n == 0) throw InvalidArgument("no glyphs to place");
  if (n == 1) return {0.0};
  std::vector<double> pos(n);
  bool increasing = true;
  for (std::size_t i = 0; i < n; ++i) {
    pos[i] = 0.5 * (glyphs[i].x_min + glyphs[i].x_max);
    if (i > 0 && !(pos[i] > pos[i - 1])) increasing = false;
  }
  if (!increasing) {
    // Fall back to cumulative widths when glyph boxes collapse or interleave.
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = std::max(1, glyphs[i].width());
      pos[i] = acc + 0.5 * w;
      acc += w;
    }
  }
  std::vector<double> out(n);
  const double span = pos.back() - pos.front();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = sweep_deg * ((pos[i] - pos.front()) / span - 0.5);
  }
  out.front() = -0.5 * sweep_deg;
  out.back() = 0.5 * sweep_deg;
  return out;
}

BendResult cylinder_bend(const TextMask& mask, const BendParams& params, const CameraModel& cam) {
  params.validate();
  cam.validate();
  const int w = mask.width();
  const int h = mask.height();
  const std::size_t n = mask.glyphs.size();
  BendResult result;
  result.station_deg = glyph_stations(mask.glyphs, params.sweep_angle);

  const double ccx = (w - 1) / 2.0;
  const double ccy = (h - 1) / 2.0;
  const double first = 0.5 * (mask.glyphs.front().x_min + mask.glyphs.front().x_max);
  const double last = 0.5 * (mask.glyphs.back().x_min + mask.glyphs.back().x_max);
  const double xc = 0.5 * (first + last);
  const double sweep = params.sweep_angle * kDegToRad;
  const double radius = n > 1 ? std::max(last - first, 1.0) / sweep : 0.0;

  struct Facet {
    Quad src;
    Quad dst;
    Mat4 rotation;
    EncodedNormal color;
  };
  std::vector<Facet> facets(n);
  Bounds2 all;
  for (std::size_t i = 0; i < n; ++i) {
    const GlyphBox& g = mask.glyphs[i];
    const double s = result.station_deg[i] * kDegToRad;
    Facet& f = facets[i];
    f.rotation = rot_yaw(result.station_deg[i]);
    f.color = encode_normal(plane_normal(f.rotation));
    const double gc = 0.5 * (g.x_min + g.x_max);
    const Vec3 offset{xc - ccx + radius * std::sin(s), 0.0, radius * (1.0 - std::cos(s))};
    f.src = {Point2{g.x_min - 1.5, -0.5}, Point2{g.x_max + 1.5, -0.5},
             Point2{g.x_max + 1.5, h - 0.5}, Point2{g.x_min - 1.5, h - 0.5}};
    for (int k = 0; k < 4; ++k) {
      const Vec3 local{f.src[k].x - gc, f.src[k].y - ccy, 0.0};
      const Point2 p = project_point(local, f.rotation, offset, cam);
      f.dst[k] = {p.x + ccx, p.y + ccy};
      all.add(f.dst[k]);
    }
  }
  const Homography fit = fit_to_canvas(all, w, h);

  // Far facets first so nearer ones land on top.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(result.station_deg[a]) > std::abs(result.station_deg[b]);
  });

  std::vector<float> coverage(static_cast<std::size_t>(w) * h, 0.0f);
  std::vector<int> owner(static_cast<std::size_t>(w) * h, -1);
  for (std::size_t i : order) {
    Facet& f = facets[i];
    Bounds2 b;
    for (auto& p : f.dst) {
      p = fit.apply(p);
      b.add(p);
    }
    const Homography inv = homography_from_quads(f.src, f.dst).inverse();
    const auto label = static_cast<std::uint8_t>(i + 1);
    const int bx0 = std::max(0, static_cast<int>(std::floor(b.x0)));
    const int by0 = std::max(0, static_cast<int>(std::floor(b.y0)));
    const int bx1 = std::min(w - 1, static_cast<int>(std::ceil(b.x1)));
    const int by1 = std::min(h - 1, static_cast<int>(std::ceil(b.y1)));
    for (int y = by0; y <= by1; ++y) {
      for (int x = bx0; x <= bx1; ++x) {
        const Point2 s = inv.apply({static_cast<double>(x), static_cast<double>(y)});
        if (!(s.x >= f.src[0].x && s.x <= f.src[1].x && s.y >= -1.0 && s.y <= h)) continue;
        const int x0 = static_cast<int>(std::floor(s.x));
        const int y0 = static_cast<int>(std::floor(s.y));
        const double tx = s.x - x0;
        const double ty = s.y - y0;
        auto tap = [&](int px, int py) -> double {
          if (!mask.alpha.contains(px, py) || mask.labels.at(px, py) != label) return 0.0;
          return mask.alpha.at(px, py);
        };
        const double a = ((tap(x0, y0) * (1 - tx) + tap(x0 + 1, y0) * tx) * (1 - ty) +
                          (tap(x0, y0 + 1) * (1 - tx) + tap(x0 + 1, y0 + 1) * tx) * ty) /
                         255.0;
        if (a <= 0.0) continue;
        const std::size_t idx = static_cast<std::size_t>(y) * w + x;
        const double below = coverage[idx];
        if (a >= below * (1.0 - a)) owner[idx] = static_cast<int>(i);
        coverage[idx] = static_cast<float>(a + below * (1.0 - a));
      }
    }
  }

  WarpedText& out = result.text;
  out.alpha = Image(w, h, 1);
  for (std::size_t i = 0; i < coverage.size(); ++i) out.alpha.data()[i] = to_byte(coverage[i] * 255.0);
  out.binary = threshold(out.alpha);
  out.normals = Image(w, h, 3);
  for (std::size_t i = 0; i < coverage.size(); ++i) {
    if (out.binary.data()[i] == 0 || owner[i] < 0) continue;
    const EncodedNormal c = facets[static_cast<std::size_t>(owner[i])].color;
    out.normals.data()[3 * i] = c.r;
    out.normals.data()[3 * i + 1] = c.g;
    out.normals.data()[3 * i + 2] = c.b;
  }
  return result;
}

}  // namespace syn3dtxt
