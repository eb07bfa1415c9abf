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
#include <string_view>
#include <vector>

namespace qmux {

/// Fixed-polarity (digits 0/1) or Kronecker (digits 0/1/2) families. The
/// classical names are FPRM/KRM, the quantum ones FPQF/KQF.
enum class Family { Fixed, Kronecker };

std::string_view quantum_name(Family f);    // "fpqf" | "kqf"
std::string_view classical_name(Family f);  // "fprm" | "krm"
/// Accepts fpqf/kqf/fprm/krm, case-insensitive.
Family parse_family(std::string_view text);

/// Per-variable polarity digits: '0' negative, '1' positive, '2' mixed.
///
/// Digit k (0-based, leftmost first) governs variable c_{k+1}, which is
/// bit (size() - 1 - k) of a minterm or gate index. Lexicographic order of
/// the digit string is the canonical order for ties and enumeration.
class Polarity {
 public:
  Polarity() = default;
  /// Throws Error{InvalidPolarity} on characters outside {0,1,2}.
  explicit Polarity(std::string digits);

  static Polarity uniform(int size, char digit);
  /// The i-th polarity of the family in lexicographic order.
  static Polarity nth(Family family, int size, std::uint64_t i);
  static std::uint64_t family_size(Family family, int size);

  int size() const { return static_cast<int>(digits_.size()); }
  const std::string& digits() const { return digits_; }
  char digit(int k) const { return digits_[static_cast<std::size_t>(k)]; }
  bool is_fixed() const { return digits_.find('2') == std::string::npos; }
  bool in_family(Family f) const { return f == Family::Kronecker || is_fixed(); }

  /// Index bit position governed by digit k.
  int bit_of(int k) const { return size() - 1 - k; }
  /// Index bitmasks of positions whose digit is '0' / '1' / '2'.
  std::uint64_t negative_mask() const { return mask_of('0'); }
  std::uint64_t positive_mask() const { return mask_of('1'); }
  std::uint64_t mixed_mask() const { return mask_of('2'); }
  std::uint64_t fixed_mask() const { return negative_mask() | positive_mask(); }

  friend auto operator<=>(const Polarity&, const Polarity&) = default;

 private:
  std::uint64_t mask_of(char d) const;

  std::string digits_;
};

struct PolarityCost {
  Polarity polarity;
  std::int64_t cost;

  friend bool operator==(const PolarityCost&, const PolarityCost&) = default;
};

/// Orders by cost, then lexicographic polarity.
inline bool cheaper(const PolarityCost& a, const PolarityCost& b) {
  return a.cost != b.cost ? a.cost < b.cost : a.polarity < b.polarity;
}

/// Throws Error{PolarityLengthMismatch} unless p.size() == expected.
void require_length(const Polarity& p, int expected);

}  // namespace qmux
