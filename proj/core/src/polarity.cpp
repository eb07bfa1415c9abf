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

#include "qmux/polarity.hpp"

#include <algorithm>
#include <cctype>

#include "qmux/error.hpp"

namespace qmux {

std::string_view quantum_name(Family f) {
  return f == Family::Fixed ? "fpqf" : "kqf";
}

std::string_view classical_name(Family f) {
  return f == Family::Fixed ? "fprm" : "krm";
}

Family parse_family(std::string_view text) {
  std::string s(text);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "fpqf" || s == "fprm") return Family::Fixed;
  if (s == "kqf" || s == "krm") return Family::Kronecker;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + s + "'");
}

Polarity::Polarity(std::string digits) : digits_(std::move(digits)) {
  if (digits_.size() > 63) {
    throw Error(ErrorKind::InvalidPolarity, "polarity longer than 63 digits");
  }
  for (char c : digits_) {
    if (c != '0' && c != '1' && c != '2') {
      throw Error(ErrorKind::InvalidPolarity,
                  "invalid polarity digit '" + std::string(1, c) + "' in '" +
                      digits_ + "'");
    }
  }
}

Polarity Polarity::uniform(int size, char digit) {
  return Polarity(std::string(static_cast<std::size_t>(size), digit));
}

std::uint64_t Polarity::family_size(Family family, int size) {
  std::uint64_t n = 1;
  const std::uint64_t base = family == Family::Fixed ? 2 : 3;
  for (int k = 0; k < size; ++k) n *= base;
  return n;
}

Polarity Polarity::nth(Family family, int size, std::uint64_t i) {
  const std::uint64_t base = family == Family::Fixed ? 2 : 3;
  std::string digits(static_cast<std::size_t>(size), '0');
  for (int k = size - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<char>('0' + i % base);
    i /= base;
  }
  return Polarity(std::move(digits));
}

std::uint64_t Polarity::mask_of(char d) const {
  std::uint64_t mask = 0;
  for (int k = 0; k < size(); ++k) {
    if (digit(k) == d) mask |= std::uint64_t{1} << bit_of(k);
  }
  return mask;
}

void require_length(const Polarity& p, int expected) {
  if (p.size() != expected) {
    throw Error(ErrorKind::PolarityLengthMismatch,
                "polarity '" + p.digits() + "' has " + std::to_string(p.size()) +
                    " digits, expected " + std::to_string(expected));
  }
}

}  // namespace qmux
