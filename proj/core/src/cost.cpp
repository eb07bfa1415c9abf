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

#include "qmux/cost.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "qmux/error.hpp"
#include "qmux/qmux_format.hpp"

namespace qmux {

std::int64_t gate_cost(int num_controls) {
  if (num_controls < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative control count");
  }
  if (num_controls < static_cast<int>(kGateCostTable.size())) {
    return kGateCostTable[static_cast<std::size_t>(num_controls)];
  }
  return 32 * static_cast<std::int64_t>(num_controls) - 96;
}

int control_count(std::uint64_t gate_index, const Polarity& p) {
  return std::popcount(gate_index & p.fixed_mask()) + std::popcount(p.mixed_mask());
}

std::int64_t total_cost(std::span<const Unitary2> targets, const Polarity& p) {
  const std::uint64_t fixed = p.fixed_mask();
  const int mixed = std::popcount(p.mixed_mask());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (is_identity(targets[i])) continue;
    total += gate_cost(std::popcount(i & fixed) + mixed);
  }
  return total;
}

CostReport multiplexer_cost(const Multiplexer& mux) {
  CostReport report;
  report.form = form_label(mux);
  const Polarity p = mux.polarity();
  for (std::uint64_t i = 0; i < mux.size(); ++i) {
    if (is_identity(mux.target(i))) {
      ++report.skipped_identities;
      continue;
    }
    const int controls = control_count(i, p);
    const std::int64_t cost = gate_cost(controls);
    report.per_gate.push_back({i, controls, cost});
    report.total += cost;
  }
  return report;
}

std::string CostReport::to_json() const {
  nlohmann::json doc;
  doc["form"] = form;
  doc["total"] = total;
  doc["skipped_identities"] = skipped_identities;
  auto gates = nlohmann::json::array();
  for (const auto& g : per_gate) {
    gates.push_back({{"index", g.index}, {"controls", g.controls}, {"cost", g.cost}});
  }
  doc["per_gate"] = std::move(gates);
  return doc.dump(2);
}

std::string CostReport::to_table(const Multiplexer& mux) const {
  std::vector<std::string> names;
  std::size_t name_width = 4;
  for (const auto& g : per_gate) {
    names.push_back(render_gate(mux.target(g.index)));
    name_width = std::max(name_width, names.back().size());
  }
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%8s  %8s  %-*s  %8s\n", "index", "controls",
                static_cast<int>(name_width), "gate", "cost");
  out += buf;
  for (std::size_t r = 0; r < per_gate.size(); ++r) {
    const auto& g = per_gate[r];
    std::snprintf(buf, sizeof buf, "%8llu  %8d  %-*s  %8lld\n",
                  static_cast<unsigned long long>(g.index), g.controls,
                  static_cast<int>(name_width), names[r].c_str(),
                  static_cast<long long>(g.cost));
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "total %lld (%llu identity gates skipped)\n",
                static_cast<long long>(total), static_cast<unsigned long long>(skipped_identities));
  out += buf;
  return out;
}

}  // namespace qmux
