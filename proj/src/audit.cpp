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

#include "syn3dtxt/audit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iterator>
#include <map>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "syn3dtxt/image_io.hpp"

namespace syn3dtxt {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kMaskS = 2, kMaskT = 3, kBinS = 4, kBinT = 5, kIS = 0, kIT = 1, kTB = 6;

// Decoded yaw tolerance for the monotonic check; one quantization step.
constexpr double kYawSlackDeg = 0.6;
constexpr double kSpanToleranceDeg = 5.0;

struct Layers {
  std::array<Image, 7> img;
  std::array<bool, 7> loaded{};
};

const Image& layer(Layers& l, const std::filesystem::path& dir, const SampleRecord& r, std::size_t i) {
  if (!l.loaded[i]) {
    const int channels = (i == kBinS || i == kBinT) ? 1 : 3;
    l.img[i] = read_image(dir / r.files[i], channels);
    l.loaded[i] = true;
  }
  return l.img[i];
}

std::string rgb_text(Rgb c) {
  std::ostringstream os;
  os << '(' << int(c.r) << ", " << int(c.g) << ", " << int(c.b) << ')';
  return os.str();
}

Rgb pixel_rgb(const Image& img, int x, int y) {
  return {img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2)};
}

std::uint32_t pack(Rgb c) { return (std::uint32_t(c.r) << 16) | (std::uint32_t(c.g) << 8) | c.b; }
Rgb unpack(std::uint32_t v) {
  return {std::uint8_t(v >> 16), std::uint8_t(v >> 8), std::uint8_t(v)};
}

struct ColorStat {
  std::uint64_t count = 0;
  double x_sum = 0.0;
};

std::map<std::uint32_t, ColorStat> ink_colors(const Image& mask, const Image& bin) {
  std::map<std::uint32_t, ColorStat> colors;
  for (int y = 0; y < bin.height(); ++y) {
    for (int x = 0; x < bin.width(); ++x) {
      if (bin.at(x, y, 0) == 0) continue;
      auto& s = colors[pack(pixel_rgb(mask, x, y))];
      ++s.count;
      s.x_sum += x;
    }
  }
  return colors;
}

std::size_t glyph_count(const std::string& text) {
  return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) { return c != ' '; }));
}

void check_flat_mask(const Image& mask, const Image& bin, const SampleRecord& r, const char* which,
                     std::vector<std::string>& out) {
  const auto colors = ink_colors(mask, bin);
  if (colors.empty()) {
    out.push_back(std::string(which) + ": mask has no ink");
    return;
  }
  const auto modal = std::max_element(colors.begin(), colors.end(), [](const auto& a, const auto& b) {
    return a.second.count < b.second.count;
  });
  const Rgb expected = encode_normal(plane_normal(compose_rotation(r.rotation))).rgb();
  const Rgb got = unpack(modal->first);
  if (!(got == expected)) {
    out.push_back(std::string(which) + ": modal mask color " + rgb_text(got) + " != expected " +
                  rgb_text(expected));
  }
}

void check_bent_mask(const Image& mask, const Image& bin, const SampleRecord& r, const std::string& text,
                     const char* which, std::vector<std::string>& out) {
  const auto colors = ink_colors(mask, bin);
  if (colors.empty()) {
    out.push_back(std::string(which) + ": mask has no ink");
    return;
  }
  const std::string w = which;
  if (glyph_count(text) < 2) {
    const Rgb flat{128, 128, 255};
    for (const auto& [c, s] : colors) {
      if (!(unpack(c) == flat)) {
        out.push_back(w + ": single-glyph bend color " + rgb_text(unpack(c)) + " != (128, 128, 255)");
        return;
      }
    }
    return;
  }
  std::vector<std::pair<double, double>> glyphs;  // (x centroid, decoded yaw)
  for (const auto& [c, s] : colors) {
    glyphs.emplace_back(s.x_sum / double(s.count), yaw_from_normal(decode_normal(EncodedNormal::from(unpack(c)))));
  }
  std::sort(glyphs.begin(), glyphs.end());
  if (glyphs.size() < 2) {
    out.push_back(w + ": one normal color for a multi-glyph bend");
    return;
  }
  for (std::size_t i = 1; i < glyphs.size(); ++i) {
    if (glyphs[i].second < glyphs[i - 1].second - kYawSlackDeg) {
      std::ostringstream os;
      os << w << ": glyph yaws not monotonic (" << glyphs[i - 1].second << " then " << glyphs[i].second << ")";
      out.push_back(os.str());
      return;
    }
  }
  const double span = glyphs.back().second - glyphs.front().second;
  const double sweep = r.sweep_angle.value_or(0.0);
  if (std::abs(span - sweep) > kSpanToleranceDeg) {
    std::ostringstream os;
    os << w << ": glyph yaw span " << span << " outside sweep " << sweep << " +/- " << kSpanToleranceDeg;
    out.push_back(os.str());
  }
}

std::vector<std::string> self_consistency(Layers& l, const std::filesystem::path& dir, const SampleRecord& r) {
  std::vector<std::string> out;
  const Image& ms = layer(l, dir, r, kMaskS);
  const Image& mt = layer(l, dir, r, kMaskT);
  const Image& bs = layer(l, dir, r, kBinS);
  const Image& bt = layer(l, dir, r, kBinT);
  if (ms.width() != bs.width() || ms.height() != bs.height() || mt.width() != bt.width() ||
      mt.height() != bt.height()) {
    out.push_back("mask and binary sizes differ");
    return out;
  }
  if (r.kind == SampleKind::FlatRotated) {
    check_flat_mask(ms, bs, r, "mask_s", out);
    check_flat_mask(mt, bt, r, "mask_t", out);
  } else {
    check_bent_mask(ms, bs, r, r.text_s, "mask_s", out);
    check_bent_mask(mt, bt, r, r.text_t, "mask_t", out);
  }
  return out;
}

std::vector<std::string> pair_images(Layers& l, const std::filesystem::path& dir, const SampleRecord& r) {
  std::vector<std::string> out;
  std::array<const Image*, 7> im{};
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = &layer(l, dir, r, i);
  for (const Image* p : im) {
    if (p->width() != r.canvas_w || p->height() != r.canvas_h) {
      out.push_back("image size differs from canvas " + std::to_string(r.canvas_w) + "x" +
                    std::to_string(r.canvas_h));
      return out;
    }
  }
  std::uint64_t bad_bin = 0, bad_s = 0, bad_t = 0, bad_st = 0, bad_support = 0;
  for (int y = 0; y < r.canvas_h; ++y) {
    for (int x = 0; x < r.canvas_w; ++x) {
      const std::uint8_t bs = im[kBinS]->at(x, y, 0);
      const std::uint8_t bt = im[kBinT]->at(x, y, 0);
      bad_bin += (bs != 0 && bs != 255) + (bt != 0 && bt != 255);
      const Rgb is = pixel_rgb(*im[kIS], x, y);
      const Rgb it = pixel_rgb(*im[kIT], x, y);
      const Rgb tb = pixel_rgb(*im[kTB], x, y);
      if (bs == 0 && !(is == tb)) ++bad_s;
      if (bt == 0 && !(it == tb)) ++bad_t;
      if (bs == 0 && bt == 0 && !(is == it)) ++bad_st;
      const bool ms = pack(pixel_rgb(*im[kMaskS], x, y)) != 0;
      const bool mt = pack(pixel_rgb(*im[kMaskT], x, y)) != 0;
      bad_support += (ms != (bs != 0)) + (mt != (bt != 0));
    }
  }
  const auto report = [&](std::uint64_t n, const char* what) {
    if (n > 0) out.push_back(std::to_string(n) + " pixel(s): " + what);
  };
  report(bad_bin, "binary mask value other than 0/255");
  report(bad_s, "i_s differs from t_b outside bin_s");
  report(bad_t, "i_t differs from t_b outside bin_t");
  report(bad_st, "i_s differs from i_t outside the union of binaries");
  report(bad_support, "normal mask support differs from binary support");
  return out;
}

struct RecordAudit {
  std::vector<std::string> consistency;
  std::vector<std::string> pair;
  bool pair_checked = false;
};

int axis_slot(char axis) { return axis == 't' ? 0 : axis == 'p' ? 1 : 2; }

}  // namespace

ChiSquare chi_square_test(std::string name, const std::vector<std::uint64_t>& observed,
                          const std::vector<double>& expected_weights, double alpha) {
  ChiSquare out;
  out.name = std::move(name);
  out.alpha = alpha;
  if (observed.size() != expected_weights.size()) throw InvalidArgument("chi-square: size mismatch");
  double total_w = 0.0;
  for (double w : expected_weights) total_w += w;
  for (auto o : observed) out.n += o;
  int cells = 0;
  bool impossible = false;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected_weights[i] <= 0.0) {
      impossible |= observed[i] > 0;
      continue;
    }
    const double e = double(out.n) * expected_weights[i] / total_w;
    const double d = double(observed[i]) - e;
    out.statistic += d * d / e;
    ++cells;
  }
  out.df = std::max(1, cells - 1);
  const boost::math::chi_squared dist(out.df);
  out.critical = boost::math::quantile(boost::math::complement(dist, alpha));
  out.p_value = impossible ? 0.0 : boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

bool AuditReport::passed() const {
  if (total_violations > 0) return false;
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  for (const auto& d : distributions) {
    if (!d.passed()) return false;
  }
  return true;
}

ordered_json AuditReport::to_json() const {
  ordered_json j;
  j["passed"] = passed();
  j["records"] = records;
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"passed", c.passed()}});
  }
  j["distributions"] = ordered_json::array();
  for (const auto& d : distributions) {
    ordered_json e{{"name", d.name}, {"n", d.n}, {"skipped", d.skipped}, {"passed", d.passed()}};
    if (!d.skipped) {
      e["df"] = d.df;
      e["statistic"] = d.statistic;
      e["critical"] = d.critical;
      e["p_value"] = d.p_value;
      e["alpha"] = d.alpha;
    }
    j["distributions"].push_back(e);
  }
  j["total_violations"] = total_violations;
  j["violations"] = ordered_json::array();
  for (const auto& v : violations) j["violations"].push_back({{"id", v.id}, {"message", v.message}});
  return j;
}

std::string AuditReport::to_text() const {
  std::ostringstream os;
  os << "records: " << records << '\n';
  for (const auto& c : checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << std::left << std::setw(18) << c.name << std::right << ' '
       << c.failed << '/' << c.checked << " failing\n";
  }
  for (const auto& d : distributions) {
    if (d.skipped) {
      os << "SKIP " << std::left << std::setw(18) << d.name << std::right << " n=" << d.n << '\n';
      continue;
    }
    os << (d.passed() ? "PASS " : "FAIL ") << std::left << std::setw(18) << d.name << std::right
       << " n=" << d.n << " chi2=" << std::fixed << std::setprecision(3) << d.statistic << " df=" << d.df
       << " critical=" << d.critical << " p=" << std::setprecision(4) << d.p_value << '\n';
    os.unsetf(std::ios::fixed);
  }
  if (total_violations > 0) {
    os << "violations: " << total_violations;
    if (total_violations > violations.size()) os << " (first " << violations.size() << " shown)";
    os << '\n';
    for (const auto& v : violations) os << "  " << v.id << ": " << v.message << '\n';
  }
  os << (passed() ? "result: PASS" : "result: FAIL") << '\n';
  return os.str();
}

bool pair_check_selected(std::uint64_t index, double fraction) {
  if (fraction >= 1.0) return true;
  if (fraction <= 0.0) return false;
  const double limit = std::ldexp(fraction, 64);
  return static_cast<double>(splitmix64(index)) < limit;
}

std::vector<std::string> check_pair_images(const std::filesystem::path& dir, const SampleRecord& r) {
  Layers l;
  return pair_images(l, dir, r);
}

std::vector<std::string> check_self_consistency(const std::filesystem::path& dir, const SampleRecord& r) {
  Layers l;
  return self_consistency(l, dir, r);
}

AuditReport validate_dataset(const std::filesystem::path& dir, const AuditOptions& opts) {
  const ManifestContents manifest = read_manifest(dir);
  const auto& recs = manifest.records;
  AuditReport report;
  report.records = recs.size();

  std::vector<std::size_t> order(recs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return recs[a].id < recs[b].id; });

  std::map<std::string, std::vector<std::string>> record_violations;
  for (const auto& v : manifest.violations) record_violations[v.id].push_back(v.message);
  std::map<std::string, std::uint64_t> id_seen;
  for (const auto& r : recs) {
    if (++id_seen[r.id] == 2) record_violations[r.id].push_back("duplicate id");
  }

  const double fraction = opts.full ? 1.0 : opts.pair_fraction;
  bool any_selected = false;
  for (const auto& r : recs) any_selected |= pair_check_selected(r.index, fraction);

  std::vector<RecordAudit> audits(recs.size());
  const int workers = opts.workers > 0 ? opts.workers : DatasetConfig{}.worker_count();
  parallel_for(recs.size(), workers, [&](std::size_t i) {
    const SampleRecord& r = recs[i];
    RecordAudit& a = audits[i];
    if (record_violations.count(r.id) > 0) {
      for (const auto& msg : record_violations.at(r.id)) {
        if (msg.rfind("missing file", 0) == 0) {
          a.consistency.push_back("skipped: files missing");
          return;
        }
      }
    }
    Layers l;
    try {
      a.consistency = self_consistency(l, dir, r);
      a.pair_checked = pair_check_selected(r.index, fraction) || (!any_selected && i == order.front());
      if (a.pair_checked) a.pair = pair_images(l, dir, r);
    } catch (const Error& e) {
      a.consistency.push_back(std::string("unreadable image: ") + e.what());
    }
  });

  CheckResult manifest_check{"record_invariants", recs.size(), 0};
  CheckResult consistency{"self_consistency", recs.size(), 0};
  CheckResult pair{"pair_invariant", 0, 0};
  std::vector<Violation> all;
  for (std::size_t i : order) {
    const SampleRecord& r = recs[i];
    const RecordAudit& a = audits[i];
    const auto it = record_violations.find(r.id);
    if (it != record_violations.end() && !it->second.empty()) {
      ++manifest_check.failed;
      for (const auto& m : it->second) all.push_back({r.id, m});
      record_violations.erase(it);
    }
    if (!a.consistency.empty()) {
      ++consistency.failed;
      for (const auto& m : a.consistency) all.push_back({r.id, m});
    }
    if (a.pair_checked) {
      ++pair.checked;
      if (!a.pair.empty()) {
        ++pair.failed;
        for (const auto& m : a.pair) all.push_back({r.id, m});
      }
    }
  }
  report.checks = {manifest_check, consistency, pair};
  report.total_violations = all.size();
  all.resize(std::min(all.size(), kMaxReportedViolations));
  report.violations = std::move(all);

  const DatasetStats stats = compute_stats(recs);
  const auto to_vec = [](const auto& arr) { return std::vector<std::uint64_t>(arr.begin(), arr.end()); };
  const auto add = [&](const std::string& name, std::vector<std::uint64_t> obs, std::vector<double> w, std::uint64_t n) {
    if (n < opts.min_chi_square_count) {
      ChiSquare skipped;
      skipped.name = name;
      skipped.n = n;
      skipped.alpha = opts.alpha;
      skipped.skipped = true;
      report.distributions.push_back(skipped);
    } else {
      report.distributions.push_back(chi_square_test(name, obs, w, opts.alpha));
    }
  };
  std::vector<double> expected(kDefaultAxisWeights.begin(), kDefaultAxisWeights.end());
  add("axis_combination", to_vec(stats.axis_counts), expected, stats.flat);
  std::vector<std::uint64_t> magnitude(3, 0), sense(2, 0);
  for (const auto& axis : stats.angle_counts) {
    for (std::size_t m = 0; m < 3; ++m) {
      for (std::size_t s = 0; s < 2; ++s) {
        magnitude[m] += axis[m][s];
        sense[s] += axis[m][s];
      }
    }
  }
  add("angle_magnitude", magnitude, {1, 1, 1}, stats.flat);
  add("angle_sense", sense, {1, 1}, stats.flat);
  add("order_policy", to_vec(stats.policy_counts), {1, 1}, stats.flat);
  add("arc_level", to_vec(stats.arc_counts), {1, 1, 1}, stats.records);
  add("arc_direction", to_vec(stats.arc_direction_counts), {1, 1}, stats.records);
  return report;
}

DatasetStats compute_stats(const std::vector<SampleRecord>& records) {
  DatasetStats s;
  s.records = records.size();
  for (const auto& r : records) {
    s.kind_counts[r.kind == SampleKind::FlatRotated ? 0 : 1]++;
    for (std::size_t i = 0; i < std::size(kArcLevels); ++i) {
      if (kArcLevels[i] == r.arc.total_angle) s.arc_counts[i]++;
    }
    s.arc_direction_counts[r.arc.direction == ArcDirection::ArchUp ? 0 : 1]++;
    if (r.kind != SampleKind::FlatRotated || !r.axes) continue;
    ++s.flat;
    s.policy_counts[r.rotation.order_policy == OrderPolicy::NearField ? 0 : 1]++;
    for (std::size_t i = 0; i < kAxisCombinations.size(); ++i) {
      if (kAxisCombinations[i] == *r.axes) s.axis_counts[i]++;
    }
    const std::pair<char, double> angles[] = {{'t', uses_theta(*r.axes) ? r.rotation.pitch_theta : 0.0},
                                              {'p', uses_phi(*r.axes) ? r.rotation.yaw_phi : 0.0},
                                              {'g', uses_gamma(*r.axes) ? r.rotation.roll_gamma : 0.0}};
    const bool active[] = {uses_theta(*r.axes), uses_phi(*r.axes), uses_gamma(*r.axes)};
    for (int a = 0; a < 3; ++a) {
      if (!active[a]) continue;
      const auto cat = categorize_angle(angles[a].second);
      if (!cat) continue;
      s.angle_counts[axis_slot(angles[a].first)][static_cast<int>(cat->magnitude)]
                    [cat->sense == Sense::CW ? 0 : 1]++;
    }
  }
  return s;
}

namespace {

double pct(std::uint64_t n, std::uint64_t d) { return d == 0 ? 0.0 : 100.0 * double(n) / double(d); }

constexpr const char* kAxisNames[] = {"theta", "phi", "gamma"};
constexpr const char* kMagnitudeNames[] = {"small", "medium", "large"};
constexpr const char* kMagnitudeRanges[] = {"30", "45-60", "65-70"};
constexpr const char* kSenseNames[] = {"cw", "ccw"};

}  // namespace

ordered_json DatasetStats::to_json() const {
  ordered_json j;
  j["records"] = records;
  j["flat_rotated"] = flat;
  ordered_json axes = ordered_json::object();
  std::uint64_t groups[3] = {0, 0, 0};
  for (std::size_t i = 0; i < kAxisCombinations.size(); ++i) {
    axes[std::string(to_string(kAxisCombinations[i]))] = {{"count", axis_counts[i]},
                                                           {"percent", pct(axis_counts[i], flat)}};
    groups[axis_count(kAxisCombinations[i]) - 1] += axis_counts[i];
  }
  j["axis_combination"] = axes;
  j["axis_groups"] = {{"single", pct(groups[0], flat)}, {"dual", pct(groups[1], flat)}, {"triple", pct(groups[2], flat)}};
  ordered_json angles = ordered_json::object();
  for (int a = 0; a < 3; ++a) {
    std::uint64_t total = 0;
    for (const auto& m : angle_counts[a]) total += m[0] + m[1];
    ordered_json axis = ordered_json::object();
    for (int m = 0; m < 3; ++m) {
      for (int sns = 0; sns < 2; ++sns) {
        axis[std::string(kMagnitudeNames[m]) + "_" + kSenseNames[sns]] = {
            {"count", angle_counts[a][m][sns]}, {"percent", pct(angle_counts[a][m][sns], total)}};
      }
    }
    angles[kAxisNames[a]] = axis;
  }
  j["angle_category"] = angles;
  ordered_json arcs = ordered_json::object();
  for (std::size_t i = 0; i < std::size(kArcLevels); ++i) {
    arcs[std::to_string(kArcLevels[i])] = {{"count", arc_counts[i]}, {"percent", pct(arc_counts[i], records)}};
  }
  j["arc_level"] = arcs;
  j["arc_direction"] = {{"ArchUp", arc_direction_counts[0]}, {"ArchDown", arc_direction_counts[1]}};
  j["kind"] = {{"FlatRotated", {{"count", kind_counts[0]}, {"percent", pct(kind_counts[0], records)}}},
               {"CylinderBent", {{"count", kind_counts[1]}, {"percent", pct(kind_counts[1], records)}}}};
  j["order_policy"] = {{"NearField", policy_counts[0]}, {"FarField", policy_counts[1]}};
  return j;
}

std::string DatasetStats::to_text() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "records: " << records << " (FlatRotated " << kind_counts[0] << ", CylinderBent " << kind_counts[1]
     << ")\n\n";
  os << "axis combination      count   percent\n";
  std::uint64_t groups[3] = {0, 0, 0};
  for (std::size_t i = 0; i < kAxisCombinations.size(); ++i) {
    os << "  " << std::left << std::setw(18) << to_string(kAxisCombinations[i]) << std::right << std::setw(8)
       << axis_counts[i] << std::setw(9) << pct(axis_counts[i], flat) << "%\n";
    groups[axis_count(kAxisCombinations[i]) - 1] += axis_counts[i];
  }
  os << "  single " << pct(groups[0], flat) << "%, dual " << pct(groups[1], flat) << "%, triple "
     << pct(groups[2], flat) << "%\n\n";
  os << "angle category (deg)   theta      phi    gamma\n";
  for (int m = 0; m < 3; ++m) {
    for (int sns = 0; sns < 2; ++sns) {
      os << "  " << std::left << std::setw(7) << kMagnitudeNames[m] << std::setw(6) << kMagnitudeRanges[m]
         << std::setw(4) << kSenseNames[sns] << std::right;
      for (int a = 0; a < 3; ++a) os << std::setw(9) << angle_counts[a][m][sns];
      os << '\n';
    }
  }
  os << "\narc level   count   percent\n";
  for (std::size_t i = 0; i < std::size(kArcLevels); ++i) {
    os << "  " << std::setw(5) << kArcLevels[i] << std::setw(9) << arc_counts[i] << std::setw(9)
       << pct(arc_counts[i], records) << "%\n";
  }
  os << "arc direction: up " << arc_direction_counts[0] << ", down " << arc_direction_counts[1] << '\n';
  os << "order policy: NearField " << policy_counts[0] << ", FarField " << policy_counts[1] << '\n';
  return os.str();
}

}  // namespace syn3dtxt
