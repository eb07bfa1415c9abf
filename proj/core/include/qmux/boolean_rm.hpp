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

// Classical fixed-polarity (FPRM) and Kronecker (KRM) Reed-Muller forms over
// GF(2), computed with butterfly columns on packed bit-vectors.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmux/polarity.hpp"

namespace qmux {

inline constexpr int kMaxBoolVars = 26;

/// Bit-vector over the 2^n minterm indices of an n-variable function, in
/// ascending natural order. Variable c_1 (a) is the most significant index
/// bit. Also used to hold spectral coefficients.
class BoolFunc {
 public:
  /// Constant-0 function. Throws Error{InvalidArgument} for n < 1 and
  /// Error{SizeLimitExceeded} for n > kMaxBoolVars.
  explicit BoolFunc(int num_vars);

  static BoolFunc from_bits(std::span<const int> bits);
  static BoolFunc from_truth(int num_vars,
                             const std::function<bool(std::uint64_t)>& f);
  /// Binary ("0110") or hex ("0x6F") minterm string; the first character
  /// holds minterm 0. Length must expand to a power of two >= 2.
  static BoolFunc parse(std::string_view text);

  int num_vars() const { return num_vars_; }
  std::uint64_t size() const { return std::uint64_t{1} << num_vars_; }

  bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= bit; else words_[i >> 6] &= ~bit;
  }
  std::uint64_t count() const;
  std::vector<int> bits() const;
  /// Binary rendering, minterm 0 first.
  std::string to_string() const;

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BoolFunc&, const BoolFunc&) = default;

 private:
  int num_vars_;
  std::vector<std::uint64_t> words_;
};

/// Spectral coefficients in butterfly output order. Position i pairs with
/// the base function map_coefficient(i, polarity).
struct RMSpectrum {
  Polarity polarity;
  BoolFunc coefficients;
};

enum class Literal : std::uint8_t { Absent, Positive, Negative };

struct BaseFunction {
  std::vector<Literal> literals;  // one per variable, c_1 first

  int literal_count() const;
  /// e.g. "a~b" for a and b-bar, "1" for the constant.
  std::string to_string() const;

  friend bool operator==(const BaseFunction&, const BaseFunction&) = default;
};

/// Dense GF(2) matrix; used as an independent check of the butterfly path.
class GF2Matrix {
 public:
  explicit GF2Matrix(std::size_t dim) : dim_(dim), cells_(dim * dim, 0) {}

  std::size_t dim() const { return dim_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }

  BoolFunc apply(const BoolFunc& v) const;
  std::vector<std::vector<int>> rows() const;

 private:
  std::size_t dim_;
  std::vector<std::uint8_t> cells_;
};

/// Applies one butterfly column in place. Positive ('1'): (x,y)->(x, x^y),
/// negative ('0'): (x,y)->(x^y, y), mixed ('2'): identity; x is the entry
/// whose index has `bit` clear. Each kernel is its own inverse.
void rm_column(BoolFunc& v, int bit, char digit);

/// Throws Error{PolarityLengthMismatch}.
RMSpectrum rm_transform(const BoolFunc& f, const Polarity& p);
/// Recovers the minterm vector from a spectrum.
BoolFunc rm_inverse_transform(const RMSpectrum& s);
/// Kronecker product of the per-digit 2x2 matrices. n <= 12.
GF2Matrix rm_transform_matrix(const Polarity& p);

BaseFunction map_coefficient(std::uint64_t index, const Polarity& p);
/// Literal count of map_coefficient(index, p) without materializing it.
int coefficient_literals(std::uint64_t index, const Polarity& p);
int literal_cost(const RMSpectrum& s);

/// Spectrum reindexed so bit k of the index says whether variable k's
/// literal is present (fixed digits) or positive (mixed digits).
BoolFunc to_base_order(const RMSpectrum& s);
/// Value of the XOR-of-products form at an input point.
bool evaluate(const RMSpectrum& s, std::uint64_t input);

inline constexpr int kMaxFprmSearchVars = 16;
inline constexpr int kMaxKrmSearchVars = 10;

/// Every polarity of the family with its literal cost, sorted by cost then
/// lexicographic polarity. Throws Error{SizeLimitExceeded}.
std::vector<PolarityCost> rm_search(const BoolFunc& f, Family family);

}  // namespace qmux
