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

#include "qmux/boolean_rm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "qmux/error.hpp"

namespace qmux {

namespace {

// Bits whose in-word position has bit `b` clear, for b = 0..5.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

BoolFunc::BoolFunc(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) {
    throw Error(ErrorKind::InvalidArgument, "a Boolean function needs at least one variable");
  }
  if (num_vars > kMaxBoolVars) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(num_vars) + " variables exceeds the limit of " +
                    std::to_string(kMaxBoolVars));
  }
  words_.assign(std::max<std::uint64_t>(1, size() / 64), 0);
}

BoolFunc BoolFunc::from_bits(std::span<const int> bits) {
  if (!is_pow2(bits.size())) {
    throw Error(ErrorKind::LengthNotPowerOfTwo,
                "minterm vector length " + std::to_string(bits.size()) +
                    " is not a power of two >= 2");
  }
  BoolFunc f(std::countr_zero(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) f.set(i, bits[i] != 0);
  return f;
}

BoolFunc BoolFunc::from_truth(int num_vars,
                              const std::function<bool(std::uint64_t)>& fn) {
  BoolFunc f(num_vars);
  for (std::uint64_t i = 0; i < f.size(); ++i) f.set(i, fn(i));
  return f;
}

BoolFunc BoolFunc::parse(std::string_view text) {
  std::vector<int> bits;
  auto bad = [&](const std::string& why) -> Error {
    return Error(ErrorKind::InvalidArgument,
                 "bad minterm string '" + std::string(text) + "': " + why);
  };
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    for (char c : text.substr(2)) {
      if (!std::isxdigit(static_cast<unsigned char>(c))) throw bad("not a hex digit");
      const int v = std::isdigit(static_cast<unsigned char>(c))
                        ? c - '0'
                        : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
      for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
  } else {
    for (char c : text) {
      if (c != '0' && c != '1') throw bad("expected only 0 and 1");
      bits.push_back(c - '0');
    }
  }
  if (!is_pow2(bits.size())) throw bad("length is not a power of two >= 2");
  return from_bits(bits);
}

std::uint64_t BoolFunc::count() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::vector<int> BoolFunc::bits() const {
  std::vector<int> out(size());
  for (std::uint64_t i = 0; i < size(); ++i) out[i] = get(i);
  return out;
}

std::string BoolFunc::to_string() const {
  std::string out(size(), '0');
  for (std::uint64_t i = 0; i < size(); ++i) out[i] = get(i) ? '1' : '0';
  return out;
}

int BaseFunction::literal_count() const {
  return static_cast<int>(std::count_if(literals.begin(), literals.end(),
                                        [](Literal l) { return l != Literal::Absent; }));
}

std::string BaseFunction::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < literals.size(); ++k) {
    if (literals[k] == Literal::Absent) continue;
    if (literals[k] == Literal::Negative) out += '~';
    out += static_cast<char>('a' + k);
  }
  return out.empty() ? "1" : out;
}

BoolFunc GF2Matrix::apply(const BoolFunc& v) const {
  BoolFunc out(v.num_vars());
  for (std::size_t r = 0; r < dim_; ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < dim_; ++c) acc ^= (*this)(r, c) & static_cast<int>(v.get(c));
    out.set(r, acc != 0);
  }
  return out;
}

std::vector<std::vector<int>> GF2Matrix::rows() const {
  std::vector<std::vector<int>> out(dim_, std::vector<int>(dim_));
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

void rm_column(BoolFunc& v, int bit, char digit) {
  if (digit == '2') return;
  auto& w = v.words();
  const bool positive = digit == '1';
  if (bit < 6) {
    const std::uint64_t lo = kLowHalf[bit];
    const int s = 1 << bit;
    if (positive) {
      for (auto& x : w) x ^= (x & lo) << s;
    } else {
      for (auto& x : w) x ^= (x >> s) & lo;
    }
    return;
  }
  const std::size_t ws = std::size_t{1} << (bit - 6);
  for (std::size_t base = 0; base < w.size(); base += 2 * ws) {
    for (std::size_t j = 0; j < ws; ++j) {
      auto& x = w[base + j];
      auto& y = w[base + ws + j];
      if (positive) y ^= x; else x ^= y;
    }
  }
}

RMSpectrum rm_transform(const BoolFunc& f, const Polarity& p) {
  require_length(p, f.num_vars());
  RMSpectrum s{p, f};
  for (int k = 0; k < p.size(); ++k) rm_column(s.coefficients, p.bit_of(k), p.digit(k));
  return s;
}

BoolFunc rm_inverse_transform(const RMSpectrum& s) {
  const Polarity& p = s.polarity;
  require_length(p, s.coefficients.num_vars());
  BoolFunc f = s.coefficients;
  for (int k = p.size() - 1; k >= 0; --k) rm_column(f, p.bit_of(k), p.digit(k));
  return f;
}

GF2Matrix rm_transform_matrix(const Polarity& p) {
  if (p.size() < 1 || p.size() > 12) {
    throw Error(ErrorKind::SizeLimitExceeded, "transform matrix supports 1..12 variables");
  }
  GF2Matrix m(1);
  m(0, 0) = 1;
  for (char d : p.digits()) {
    const int k[2][2] = {{1, d == '0' ? 1 : 0}, {d == '1' ? 1 : 0, 1}};
    GF2Matrix next(m.dim() * 2);
    for (std::size_t r = 0; r < next.dim(); ++r)
      for (std::size_t c = 0; c < next.dim(); ++c)
        next(r, c) = static_cast<std::uint8_t>(m(r / 2, c / 2) & k[r % 2][c % 2]);
    m = std::move(next);
  }
  return m;
}

BaseFunction map_coefficient(std::uint64_t index, const Polarity& p) {
  BaseFunction b;
  b.literals.resize(static_cast<std::size_t>(p.size()), Literal::Absent);
  for (int k = 0; k < p.size(); ++k) {
    const int bit = static_cast<int>((index >> p.bit_of(k)) & 1u);
    const char d = p.digit(k);
    auto& lit = b.literals[static_cast<std::size_t>(k)];
    if (d == '2') {
      lit = bit ? Literal::Positive : Literal::Negative;
    } else if (bit == d - '0') {
      lit = d == '1' ? Literal::Positive : Literal::Negative;
    }
  }
  return b;
}

int coefficient_literals(std::uint64_t index, const Polarity& p) {
  const std::uint64_t matched = ~(index ^ p.positive_mask()) & p.fixed_mask();
  return std::popcount(matched) + std::popcount(p.mixed_mask());
}

namespace {

std::int64_t literal_cost_of(const BoolFunc& coeffs, std::uint64_t positive,
                             std::uint64_t fixed, int mixed_count) {
  std::int64_t cost = 0;
  const auto& w = coeffs.words();
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    for (std::uint64_t bits = w[wi]; bits != 0; bits &= bits - 1) {
      const std::uint64_t index = wi * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
      cost += std::popcount(~(index ^ positive) & fixed) + mixed_count;
    }
  }
  return cost;
}

}  // namespace

int literal_cost(const RMSpectrum& s) {
  const Polarity& p = s.polarity;
  return static_cast<int>(literal_cost_of(s.coefficients, p.positive_mask(), p.fixed_mask(),
                                          std::popcount(p.mixed_mask())));
}

BoolFunc to_base_order(const RMSpectrum& s) {
  BoolFunc out(s.coefficients.num_vars());
  const std::uint64_t flip = s.polarity.negative_mask();
  for (std::uint64_t i = 0; i < out.size(); ++i) {
    if (s.coefficients.get(i)) out.set(i ^ flip, true);
  }
  return out;
}

bool evaluate(const RMSpectrum& s, std::uint64_t input) {
  const Polarity& p = s.polarity;
  bool acc = false;
  for (std::uint64_t i = 0; i < s.coefficients.size(); ++i) {
    if (!s.coefficients.get(i)) continue;
    const BaseFunction b = map_coefficient(i, p);
    bool term = true;
    for (int k = 0; k < p.size() && term; ++k) {
      const bool x = (input >> p.bit_of(k)) & 1u;
      const Literal lit = b.literals[static_cast<std::size_t>(k)];
      if (lit == Literal::Positive) term = x;
      if (lit == Literal::Negative) term = !x;
    }
    acc ^= term;
  }
  return acc;
}

std::vector<PolarityCost> rm_search(const BoolFunc& f, Family family) {
  const int n = f.num_vars();
  const int limit = family == Family::Fixed ? kMaxFprmSearchVars : kMaxKrmSearchVars;
  if (n > limit) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::string(classical_name(family)) + " search supports at most " +
                    std::to_string(limit) + " variables, got " + std::to_string(n));
  }
  const std::string alphabet = family == Family::Fixed ? "01" : "012";

  std::vector<PolarityCost> out;
  out.reserve(Polarity::family_size(family, n));

  // Depth-first over variables; level k holds the vector after k columns so
  // sibling polarities share their common prefix.
  std::vector<BoolFunc> level(static_cast<std::size_t>(n) + 1, f);
  std::string digits(static_cast<std::size_t>(n), '0');
  auto visit = [&](auto&& self, int k) -> void {
    if (k == n) {
      const Polarity p(digits);
      out.push_back({p, literal_cost_of(level[static_cast<std::size_t>(n)], p.positive_mask(),
                                        p.fixed_mask(), std::popcount(p.mixed_mask()))});
      return;
    }
    for (char d : alphabet) {
      digits[static_cast<std::size_t>(k)] = d;
      auto& next = level[static_cast<std::size_t>(k) + 1];
      next = level[static_cast<std::size_t>(k)];
      rm_column(next, n - 1 - k, d);
      self(self, k + 1);
    }
  };
  visit(visit, 0);

  std::sort(out.begin(), out.end(), cheaper);
  return out;
}

}  // namespace qmux
