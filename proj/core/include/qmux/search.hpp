// Copyright 2026 The qmuxopt Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "qmux/multiplexer.hpp"
#include "qmux/polarity.hpp"

namespace qmux {

inline constexpr int kMaxExhaustiveFpqfControls = 14;
inline constexpr int kMaxExhaustiveKqfControls = 9;
inline constexpr int kMaxRandomControls = 20;

enum class SearchMode { Exhaustive, Random };

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

struct SearchConfig {
  Family family = Family::Fixed;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t sample_count = 1;  // Random mode only
  std::uint64_t seed = 0;          // Random mode only
  unsigned threads = 1;            // 0 selects hardware concurrency
};

struct SearchReport {
  Family family = Family::Fixed;
  SearchMode mode = SearchMode::Exhaustive;
  int controls = 0;
  std::int64_t original_cost = 0;
  PolarityCost best;
  PolarityCost worst;
  double average_cost = 0.0;
  std::uint64_t polarities_evaluated = 0;
  double elapsed_seconds = 0.0;

  /// Percent saved by the average polarity relative to the standard form;
  /// 0 when the original costs nothing.
  double average_reduction_percent() const;
  double best_reduction_percent() const;

  /// `with_timing` = false drops elapsed_seconds so reports from different
  /// runs compare byte-for-byte.
  std::string to_json(bool with_timing = true) const;
  /// controls,original,best,worst,average,reduction_percent
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Costs every polarity of the family via a depth-first walk where each
/// tree level is one control's butterfly column. Throws
/// Error{FormMismatch} for non-standard input and Error{SizeLimitExceeded}
/// above kMaxExhaustive*Controls.
SearchReport exhaustive_search(const Multiplexer& std, const SearchConfig& cfg);

/// Draws cfg.sample_count polarities uniformly with replacement from a
/// std::mt19937_64 seeded with cfg.seed; digit k is engine() % base.
SearchReport random_polarity_search(const Multiplexer& std, const SearchConfig& cfg);

/// Dispatches on cfg.mode.
SearchReport run_search(const Multiplexer& std, const SearchConfig& cfg);

/// Every polarity of the family with its cost, in lexicographic order.
/// Same size limits as exhaustive_search().
std::vector<PolarityCost> polarity_costs(const Multiplexer& std, Family family);

}  // namespace qmux
