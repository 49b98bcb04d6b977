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
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "syn3dtxt/dataset_io.hpp"

namespace syn3dtxt {

struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  bool passed() const { return failed == 0; }
};

struct ChiSquare {
  std::string name;
  std::uint64_t n = 0;
  int df = 0;
  double statistic = 0.0;
  double p_value = 1.0;
  double critical = 0.0;
  double alpha = 0.001;
  /// Too few records to test; not counted as a failure.
  bool skipped = false;
  bool passed() const { return skipped || p_value >= alpha; }
};

/// Pearson goodness of fit of `observed` against `expected_weights` (any
/// positive scale). Categories with zero expected weight are dropped from df;
/// an observation in such a category forces rejection.
ChiSquare chi_square_test(std::string name, const std::vector<std::uint64_t>& observed,
                          const std::vector<double>& expected_weights, double alpha = 0.001);

struct AuditOptions {
  /// Fraction of records whose images get the pixel-level pair check.
  double pair_fraction = 0.1;
  bool full = false;
  std::uint64_t min_chi_square_count = 5000;
  double alpha = 0.001;
  int workers = 0;
};

inline constexpr std::size_t kMaxReportedViolations = 100;

struct AuditReport {
  std::uint64_t records = 0;
  std::vector<CheckResult> checks;
  std::vector<ChiSquare> distributions;
  /// First kMaxReportedViolations violations, ordered by id.
  std::vector<Violation> violations;
  std::uint64_t total_violations = 0;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// True for the records that get the pair check at `fraction`. Keyed on the
/// record index so the selection is stable across runs.
bool pair_check_selected(std::uint64_t index, double fraction);

/// Pixel-level checks of one record's images. Empty when clean.
std::vector<std::string> check_pair_images(const std::filesystem::path& dir, const SampleRecord& r);
/// Mask colors against the manifest angles. Empty when consistent.
std::vector<std::string> check_self_consistency(const std::filesystem::path& dir,
                                                const SampleRecord& r);

/// Throws IoError / ManifestError when the manifest cannot be read.
AuditReport validate_dataset(const std::filesystem::path& dir, const AuditOptions& opts = {});

/// Empirical distribution tables of a manifest.
struct DatasetStats {
  std::uint64_t records = 0;
  std::uint64_t flat = 0;
  std::array<std::uint64_t, 7> axis_counts{};
  /// [axis: theta, phi, gamma][magnitude][sense]
  std::array<std::array<std::array<std::uint64_t, 2>, 3>, 3> angle_counts{};
  std::array<std::uint64_t, 3> arc_counts{};
  std::array<std::uint64_t, 2> arc_direction_counts{};
  std::array<std::uint64_t, 2> kind_counts{};
  std::array<std::uint64_t, 2> policy_counts{};

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

DatasetStats compute_stats(const std::vector<SampleRecord>& records);

}  // namespace syn3dtxt
