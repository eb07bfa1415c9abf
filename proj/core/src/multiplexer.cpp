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

#include "qmux/multiplexer.hpp"

#include <algorithm>
#include <bit>

#include "qmux/error.hpp"

namespace qmux {

namespace {

int controls_for(std::size_t n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw Error(ErrorKind::LengthNotPowerOfTwo,
                "multiplexer needs 2^m targets with m >= 1, got " + std::to_string(n));
  }
  const int m = std::countr_zero(n);
  if (m > kMaxControls) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(m) + " controls exceeds the limit of " +
                    std::to_string(kMaxControls));
  }
  return m;
}

}  // namespace

Multiplexer::Multiplexer(std::vector<Unitary2> targets, Form form, Polarity activation,
                         std::uint64_t inverted)
    : controls_(controls_for(targets.size())),
      targets_(std::move(targets)),
      form_(form),
      activation_(std::move(activation)),
      inverted_(inverted) {
  require_length(activation_, controls_);
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (!targets_[i].is_unitary()) {
      throw Error(ErrorKind::NonUnitary,
                  "target " + std::to_string(i) + " is not unitary: " + render_matrix(targets_[i]));
    }
  }
}

Multiplexer Multiplexer::standard(std::vector<Unitary2> targets) {
  const int m = controls_for(targets.size());
  return Multiplexer(std::move(targets), Form::Standard, Polarity::uniform(m, '2'), 0);
}

Multiplexer Multiplexer::polarized(std::vector<Unitary2> targets, Polarity p) {
  const Form form = p.is_fixed() ? Form::FixedPolarity : Form::Kronecker;
  return with_form(std::move(targets), form, std::move(p));
}

Multiplexer Multiplexer::with_form(std::vector<Unitary2> targets, Form form, Polarity p) {
  if (form == Form::Standard) {
    if (p.size() != 0 && p.digits().find_first_not_of('2') != std::string::npos) {
      throw Error(ErrorKind::FormMismatch, "standard form takes an all-'2' polarity");
    }
    return standard(std::move(targets));
  }
  if (form == Form::FixedPolarity && !p.is_fixed()) {
    throw Error(ErrorKind::FormMismatch, "FPQF polarity '" + p.digits() + "' contains '2'");
  }
  return Multiplexer(std::move(targets), form, std::move(p), 0);
}

Polarity Multiplexer::polarity() const {
  if (inverted_ == 0) return activation_;
  std::string digits = activation_.digits();
  for (int k = 0; k < controls_; ++k) {
    if ((inverted_ >> activation_.bit_of(k)) & 1u) digits[static_cast<std::size_t>(k)] = '0';
  }
  return Polarity(std::move(digits));
}

bool Multiplexer::is_active(std::uint64_t gate, std::uint64_t input_state) const {
  return gate_active(gate, input_state ^ inverted_, activation_);
}

Multiplexer Multiplexer::with_targets(std::vector<Unitary2> targets) const {
  return Multiplexer(std::move(targets), form_, activation_, inverted_);
}

bool gate_active(std::uint64_t gate, std::uint64_t input, const Polarity& p) {
  const std::uint64_t blocked = (gate & ~input & p.positive_mask()) |
                                (gate & input & p.negative_mask()) |
                                ((gate ^ input) & p.mixed_mask());
  return blocked == 0;
}

Unitary2 semantics(const Multiplexer& mux, std::uint64_t input_state) {
  const Polarity& p = mux.activation_polarity();
  const std::uint64_t j = input_state ^ mux.inverted_lines();
  // Active gates are exactly {base | s : s a submask of enabled}; walking
  // submasks in increasing order visits them in circuit order.
  const std::uint64_t enabled = (j & p.positive_mask()) | (~j & p.negative_mask());
  const std::uint64_t base = j & p.mixed_mask();
  Unitary2 acc = Unitary2::identity();
  std::uint64_t s = 0;
  do {
    acc = mux.target(base | s) * acc;
    s = (s - enabled) & enabled;
  } while (s != 0);
  return acc;
}

Multiplexer negative_control_realization(const Multiplexer& mux) {
  const Polarity p = mux.polarity();
  const std::uint64_t neg = p.negative_mask();
  if (neg == 0) return mux;
  std::string digits = p.digits();
  std::replace(digits.begin(), digits.end(), '0', '1');
  return Multiplexer(mux.targets(), mux.form(), Polarity(std::move(digits)), neg);
}

Kernel forward_kernel(char digit) {
  return digit == '0' ? Kernel::A0 : digit == '1' ? Kernel::A1 : Kernel::A2;
}

Kernel inverse_kernel(char digit) {
  return digit == '0' ? Kernel::P0 : digit == '1' ? Kernel::P1 : Kernel::P2;
}

namespace {

void check_stage(std::size_t n, int bit) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw Error(ErrorKind::LengthNotPowerOfTwo,
                "butterfly input length " + std::to_string(n) + " is not a power of two");
  }
  if (bit < 0 || bit >= std::countr_zero(n)) {
    throw Error(ErrorKind::InvalidArgument,
                "butterfly bit " + std::to_string(bit) + " out of range for length " +
                    std::to_string(n));
  }
}

template <typename F>
void for_each_pair(std::span<Unitary2> g, int bit, F&& f) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < g.size(); base += 2 * stride) {
    for (std::size_t lo = base; lo < base + stride; ++lo) f(g[lo], g[lo + stride]);
  }
}

}  // namespace

void butterfly_stage(std::span<Unitary2> gates, Kernel kernel, int bit) {
  check_stage(gates.size(), bit);
  switch (kernel) {
    case Kernel::A2:
    case Kernel::P2:
      return;
    case Kernel::A1:
      for_each_pair(gates, bit, [](Unitary2& a, Unitary2& b) { b = b * a.dagger(); });
      return;
    case Kernel::A0:
      for_each_pair(gates, bit, [](Unitary2& a, Unitary2& b) {
        const Unitary2 lo = b;
        b = a * b.dagger();
        a = lo;
      });
      return;
    case Kernel::P1:
      for_each_pair(gates, bit, [](Unitary2& a, Unitary2& b) { b = b * a; });
      return;
    case Kernel::P0:
      for_each_pair(gates, bit, [](Unitary2& a, Unitary2& b) {
        const Unitary2 hi = a;
        a = b * a;
        b = hi;
      });
      return;
  }
}

void butterfly_stage(std::span<Unitary2> gates, const PairKernel& kernel, int bit) {
  check_stage(gates.size(), bit);
  for_each_pair(gates, bit, [&](Unitary2& a, Unitary2& b) { std::tie(a, b) = kernel(a, b); });
}

std::vector<Unitary2> apply_stage(std::vector<Unitary2> gates, Kernel kernel, int bit) {
  butterfly_stage(std::span<Unitary2>(gates), kernel, bit);
  return gates;
}

Multiplexer forward_transform(const Multiplexer& std, const Polarity& p) {
  if (std.form() != Form::Standard) {
    throw Error(ErrorKind::FormMismatch, "forward transform expects a standard-form multiplexer");
  }
  require_length(p, std.controls());
  std::vector<Unitary2> g = std.targets();
  for (int k = 0; k < p.size(); ++k) butterfly_stage(g, forward_kernel(p.digit(k)), p.bit_of(k));
  return Multiplexer::polarized(std::move(g), p);
}

Multiplexer inverse_transform(const Multiplexer& polarized) {
  if (polarized.form() == Form::Standard) {
    throw Error(ErrorKind::FormMismatch, "inverse transform expects an FPQF/KQF multiplexer");
  }
  const Polarity p = polarized.polarity();
  std::vector<Unitary2> f = polarized.targets();
  for (int k = p.size() - 1; k >= 0; --k) {
    butterfly_stage(f, inverse_kernel(p.digit(k)), p.bit_of(k));
  }
  return Multiplexer::standard(std::move(f));
}

Multiplexer triangular_solve_oracle(const Multiplexer& std, const Polarity& p) {
  if (std.form() != Form::Standard) {
    throw Error(ErrorKind::FormMismatch, "oracle expects a standard-form multiplexer");
  }
  require_length(p, std.controls());
  if (std.controls() > 8) {
    throw Error(ErrorKind::SizeLimitExceeded, "triangular-solve oracle supports m <= 8");
  }
  const std::size_t n = std.size();
  std::vector<Unitary2> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t state = i ^ p.negative_mask();
    Unitary2 rest = Unitary2::identity();
    for (std::size_t j = 0; j < i; ++j) {
      if (gate_active(j, state, p)) rest = g[j] * rest;
    }
    g[i] = std.target(state) * rest.dagger();
  }
  return Multiplexer::polarized(std::move(g), p);
}

double max_semantic_deviation(const Multiplexer& a, const Multiplexer& b) {
  if (a.controls() != b.controls()) {
    throw Error(ErrorKind::InvalidArgument, "multiplexers have different control counts");
  }
  double worst = 0.0;
  for (std::uint64_t j = 0; j < a.size(); ++j) {
    worst = std::max(worst, max_abs_diff(semantics(a, j), semantics(b, j)));
  }
  return worst;
}

}  // namespace qmux
