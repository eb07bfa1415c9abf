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

#include "qmux/testgen.hpp"

#include <bit>
#include <numbers>

#include "qmux/boolean_rm.hpp"
#include "qmux/error.hpp"
#include "qmux/pla.hpp"

namespace qmux {

GatePool pool_full() { return {"full", {"X", "Y", "Z", "H", "V", "VD", "I"}}; }

GatePool pool_nvv() { return {"nvv", {"X", "V", "VD"}}; }

GatePool parse_pool(std::string_view spec) {
  if (spec == "full") return pool_full();
  if (spec == "nvv") return pool_nvv();
  constexpr std::string_view prefix = "custom:";
  if (spec.substr(0, prefix.size()) != prefix) {
    throw Error(ErrorKind::InvalidArgument,
                "pool must be full, nvv or custom:<gates>, got '" + std::string(spec) + "'");
  }
  GatePool pool{std::string(spec), {}};
  std::string_view rest = spec.substr(prefix.size());
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string tok(rest.substr(0, comma));
    if (!tok.empty()) {
      parse_gate(tok);
      pool.gates.push_back(tok);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (pool.gates.empty()) throw Error(ErrorKind::InvalidArgument, "custom pool is empty");
  return pool;
}

Multiplexer generate(int m, const GatePool& pool, std::uint64_t seed) {
  if (m < 1 || m > kMaxGeneratedControls) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "generator supports 1.." + std::to_string(kMaxGeneratedControls) + " controls");
  }
  if (pool.gates.empty()) throw Error(ErrorKind::InvalidArgument, "gate pool is empty");
  std::vector<Unitary2> choices;
  for (const auto& g : pool.gates) choices.push_back(parse_gate(g));

  std::mt19937_64 engine(seed);
  std::vector<Unitary2> targets(std::size_t{1} << m);
  for (auto& t : targets) t = choices[engine() % choices.size()];
  return Multiplexer::standard(std::move(targets));
}

Unitary2 random_unitary(std::mt19937_64& engine) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  const double a = angle(engine);
  const double b = angle(engine);
  const double c = angle(engine);
  const double d = angle(engine);
  return gates::phase(d) * gates::RZ(a) * gates::RY(b) * gates::RZ(c);
}

Multiplexer random_unitary_multiplexer(int m, std::mt19937_64& engine) {
  std::vector<Unitary2> targets(std::size_t{1} << m);
  for (auto& t : targets) t = random_unitary(engine);
  return Multiplexer::standard(std::move(targets));
}

std::vector<KnownCase> known_cases() {
  using namespace gates;
  std::vector<KnownCase> out;
  out.push_back({"ivvx", Multiplexer::standard({I(), V(), V(), X()}), "11"});
  out.push_back({"all-identity-2", Multiplexer::standard({I(), I(), I(), I()}), ""});
  out.push_back({"parity-3",
                 to_multiplexer(BoolFunc::from_truth(3, [](std::uint64_t i) {
                   return std::popcount(i) % 2 == 1;
                 })),
                 ""});
  out.push_back({"abc-xor-nanbnc",
                 to_multiplexer(BoolFunc::from_truth(3, [](std::uint64_t i) {
                   return i == 0 || i == 7;
                 })),
                 ""});
  return out;
}

KnownCase known_case(std::string_view name) {
  for (auto& c : known_cases()) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown case '" + std::string(name) + "'");
}

}  // namespace qmux
