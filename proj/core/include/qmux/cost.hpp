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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmux/multiplexer.hpp"

namespace qmux {

/// Cost of a gate with 0..9 controls, counted in uncontrolled and
/// singly-controlled primitives with one reusable ancilla.
inline constexpr std::array<std::int64_t, 10> kGateCostTable = {1,  1,  5,   13,  29,
                                                                52, 84, 116, 154, 192};

/// Table lookup below 10 controls, 32m - 96 from there on. Throws
/// Error{InvalidArgument} for negative input.
std::int64_t gate_cost(int num_controls);

/// Controls gate `gate_index` needs under p: one per '2' digit and one per
/// fixed digit whose index bit is set.
int control_count(std::uint64_t gate_index, const Polarity& p);

struct GateCost {
  std::uint64_t index;
  int controls;
  std::int64_t cost;

  friend bool operator==(const GateCost&, const GateCost&) = default;
};

struct CostReport {
  std::vector<GateCost> per_gate;  // non-identity gates only
  std::int64_t total = 0;
  std::uint64_t skipped_identities = 0;
  std::string form;  // form_label() of the costed multiplexer

  std::string to_json() const;
  /// Aligned columns: index, controls, gate, cost.
  std::string to_table(const Multiplexer& mux) const;
};

/// Identity gates (exact within kEpsilon, no phase forgiveness) are free;
/// inverters on negative lines are free.
CostReport multiplexer_cost(const Multiplexer& mux);

/// Total only, without allocating a report. `targets` are interpreted under
/// polarity p.
std::int64_t total_cost(std::span<const Unitary2> targets, const Polarity& p);

}  // namespace qmux
