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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qmux/multiplexer.hpp"
#include "qmux/polarity.hpp"

namespace qmux {

inline constexpr int kMaxGeneratedControls = 20;

struct GatePool {
  std::string name;
  std::vector<std::string> gates;  // tokens accepted by parse_gate
};

/// X, Y, Z, H, V, VD, I.
GatePool pool_full();
/// X, V, VD.
GatePool pool_nvv();
/// "full", "nvv" or "custom:<tok>,<tok>,..." (duplicates weight the draw).
/// Throws Error{InvalidArgument} or the parse_gate errors.
GatePool parse_pool(std::string_view spec);

/// Standard multiplexer with 2^m targets drawn i.i.d. uniformly from the
/// pool. The engine is std::mt19937_64 seeded with `seed`; each draw is
/// pool[engine() % pool.size()], so output is identical on every platform.
Multiplexer generate(int m, const GatePool& pool, std::uint64_t seed);

/// Single-qubit unitary RZ(a) RY(b) RZ(c) e^{i d} with angles drawn
/// uniformly from [0, 2pi). Covers all of U(2); for property tests.
Unitary2 random_unitary(std::mt19937_64& engine);
Multiplexer random_unitary_multiplexer(int m, std::mt19937_64& engine);

struct KnownCase {
  std::string name;
  Multiplexer mux;
  /// Best FPQF polarity when the case pins one.
  std::string expected_fpqf_polarity;
};

/// Hand-built cases: "ivvx" [I,V,V,X] (best FPQF polarity "11"),
/// "all-identity-2", "parity-3" (a^b^c over X/I), and "abc-xor-nanbnc"
/// (abc ^ a'b'c' over X/I).
std::vector<KnownCase> known_cases();
KnownCase known_case(std::string_view name);

}  // namespace qmux
