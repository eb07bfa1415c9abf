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
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qmux/polarity.hpp"
#include "qmux/unitary.hpp"

namespace qmux {

inline constexpr int kMaxControls = 24;

enum class Form { Standard, FixedPolarity, Kronecker };

/// A binary quantum multiplexer: 2^m single-qubit gates on one target,
/// each gated by a product of control literals.
///
/// Gate index bit (m - k) corresponds to control c_k, so c_1 is the most
/// significant bit. Gates are applied to the target in ascending index
/// order, so the matrix of an input state is the product of its active
/// gates with the highest index leftmost.
///
/// Activation of gate i for input state j, per polarity digit of c_k:
///   '1'  i_k == 0 or j_k == 1
///   '0'  i_k == 0 or j_k == 0
///   '2'  i_k == j_k
/// Standard form behaves as all digits '2'.
///
/// A multiplexer may carry inverted control lines (see
/// negative_control_realization()); the input bits of those lines are
/// flipped before the rule above is applied.
class Multiplexer {
 public:
  /// Standard-form multiplexer. Throws Error{LengthNotPowerOfTwo},
  /// Error{NonUnitary} or Error{SizeLimitExceeded}.
  static Multiplexer standard(std::vector<Unitary2> targets);
  /// FPQF when p has no '2' digit, KQF otherwise.
  static Multiplexer polarized(std::vector<Unitary2> targets, Polarity p);
  /// Explicit form tag. Throws Error{FormMismatch} when an FPQF polarity
  /// contains '2', Error{PolarityLengthMismatch} on length mismatch.
  static Multiplexer with_form(std::vector<Unitary2> targets, Form form, Polarity p);

  int controls() const { return controls_; }
  std::size_t size() const { return targets_.size(); }
  const std::vector<Unitary2>& targets() const { return targets_; }
  const Unitary2& target(std::size_t i) const { return targets_[i]; }
  Form form() const { return form_; }

  /// The form's polarity: all '2' for Standard. For a realization with
  /// inverted lines this is the original polarity (inverted '1' -> '0').
  Polarity polarity() const;
  /// Digits driving the activation rule; differs from polarity() only on
  /// inverted lines.
  const Polarity& activation_polarity() const { return activation_; }
  std::uint64_t inverted_lines() const { return inverted_; }

  bool is_active(std::uint64_t gate, std::uint64_t input_state) const;

  Multiplexer with_targets(std::vector<Unitary2> targets) const;

 private:
  Multiplexer(std::vector<Unitary2> targets, Form form, Polarity activation,
              std::uint64_t inverted);

  int controls_ = 0;
  std::vector<Unitary2> targets_;
  Form form_ = Form::Standard;
  Polarity activation_;
  std::uint64_t inverted_ = 0;

  friend Multiplexer negative_control_realization(const Multiplexer& mux);
};

/// Activation rule on its own (no inverted lines).
bool gate_active(std::uint64_t gate, std::uint64_t input_state, const Polarity& p);

/// Matrix realized on the target for a control input state; I when no gate
/// is active.
Unitary2 semantics(const Multiplexer& mux, std::uint64_t input_state);

/// Equivalent multiplexer where every '0' control line is flagged as
/// inverted and driven by the positive rule. Unchanged when no digit is '0'.
Multiplexer negative_control_realization(const Multiplexer& mux);

enum class Kernel { A0, A1, A2, P0, P1, P2 };

using PairKernel = std::function<std::pair<Unitary2, Unitary2>(const Unitary2&, const Unitary2&)>;

/// Applies a 2-gate kernel to every index pair (lo, hi) that differs only in
/// `bit`, where lo has the bit clear. Throws Error{LengthNotPowerOfTwo}, or
/// Error{InvalidArgument} for a bit out of range.
///
///   A1: (a,b) -> (a, b a^-1)     P1: (a,b) -> (a, b a)
///   A0: (a,b) -> (b, a b^-1)     P0: (a,b) -> (b a, a)
///   A2, P2: identity
void butterfly_stage(std::span<Unitary2> gates, Kernel kernel, int bit);
void butterfly_stage(std::span<Unitary2> gates, const PairKernel& kernel, int bit);
/// Copying variant of the in-place stage.
[[nodiscard]] std::vector<Unitary2> apply_stage(std::vector<Unitary2> gates, Kernel kernel, int bit);

Kernel forward_kernel(char digit);
Kernel inverse_kernel(char digit);

/// Standard -> FPQF/KQF(p). Applies one A-column per control, c_1 (the most
/// significant bit) first and c_m last. Throws Error{FormMismatch} when
/// `std` is not standard form, Error{PolarityLengthMismatch}.
Multiplexer forward_transform(const Multiplexer& std, const Polarity& p);
/// FPQF/KQF -> Standard. P-columns in the reverse order of the forward
/// transform. Throws Error{FormMismatch} for standard input.
Multiplexer inverse_transform(const Multiplexer& polarized);

/// Independent route to the forward transform for m <= 8: solves the
/// defining equations gate by gate in ascending index order. For each gate
/// i there is exactly one input state whose active set has i as its largest
/// member; that state's equation determines G_i.
Multiplexer triangular_solve_oracle(const Multiplexer& std, const Polarity& p);

/// Largest |semantics(a, j) - semantics(b, j)| over all input states.
double max_semantic_deviation(const Multiplexer& a, const Multiplexer& b);

}  // namespace qmux
