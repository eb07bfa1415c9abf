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

#include "qmux/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "qmux/cost.hpp"
#include "qmux/error.hpp"

namespace qmux {

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::Exhaustive ? "exhaustive" : "random";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::Exhaustive;
  if (text == "random") return SearchMode::Random;
  throw Error(ErrorKind::InvalidArgument, "unknown search mode '" + std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

std::string alphabet(Family family) { return family == Family::Fixed ? "01" : "012"; }

void require_standard(const Multiplexer& mux) {
  if (mux.form() != Form::Standard) {
    throw Error(ErrorKind::FormMismatch, "polarity search expects a standard-form multiplexer");
  }
}

void require_limit(int m, int limit, const std::string& what) {
  if (m > limit) {
    throw Error(ErrorKind::SizeLimitExceeded,
                what + " supports at most " + std::to_string(limit) + " controls, got " +
                    std::to_string(m));
  }
}

int exhaustive_limit(Family family) {
  return family == Family::Fixed ? kMaxExhaustiveFpqfControls : kMaxExhaustiveKqfControls;
}

// Running min/max/sum over evaluated polarities. Merging is associative and
// ties resolve to the lexicographically smaller polarity, so the result is
// independent of evaluation order.
struct Tally {
  bool empty = true;
  PolarityCost best;
  PolarityCost worst;
  std::int64_t sum = 0;
  std::uint64_t count = 0;

  void add(const PolarityCost& pc) {
    if (empty || cheaper(pc, best)) best = pc;
    if (empty || pc.cost > worst.cost || (pc.cost == worst.cost && pc.polarity < worst.polarity)) {
      worst = pc;
    }
    empty = false;
    sum += pc.cost;
    ++count;
  }

  void merge(const Tally& other) {
    if (other.empty) return;
    const std::int64_t s = sum + other.sum;
    const std::uint64_t c = count + other.count;
    add(other.best);
    add(other.worst);
    sum = s;
    count = c;
  }
};

// Depth-first walk over polarities sharing butterfly prefixes. Level k
// holds the gate vector after the columns of c_1..c_k.
class Walker {
 public:
  Walker(const std::vector<Unitary2>& root, int controls, Family family)
      : root_(root), m_(controls), digits_(alphabet(family)),
        levels_(static_cast<std::size_t>(controls) + 1) {}

  template <typename Leaf>
  void walk(const std::string& prefix, Leaf&& leaf) {
    std::string digits(static_cast<std::size_t>(m_), '0');
    const std::vector<Unitary2>* cur = &root_;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      digits[k] = prefix[k];
      cur = step(*cur, static_cast<int>(k), prefix[k]);
    }
    descend(*cur, static_cast<int>(prefix.size()), digits, leaf);
  }

 private:
  const std::vector<Unitary2>* step(const std::vector<Unitary2>& cur, int k, char d) {
    if (d == '2') return &cur;
    auto& next = levels_[static_cast<std::size_t>(k) + 1];
    next = cur;
    butterfly_stage(std::span<Unitary2>(next), forward_kernel(d), m_ - 1 - k);
    return &next;
  }

  template <typename Leaf>
  void descend(const std::vector<Unitary2>& cur, int k, std::string& digits, Leaf& leaf) {
    if (k == m_) {
      Polarity p(digits);
      const std::int64_t cost = total_cost(cur, p);
      leaf(PolarityCost{std::move(p), cost});
      return;
    }
    for (char d : digits_) {
      digits[static_cast<std::size_t>(k)] = d;
      descend(*step(cur, k, d), k + 1, digits, leaf);
    }
  }

  const std::vector<Unitary2>& root_;
  int m_;
  std::string digits_;
  std::vector<std::vector<Unitary2>> levels_;
};

std::vector<std::string> prefixes(Family family, int m, unsigned threads) {
  if (threads <= 1) return {""};
  int depth = 0;
  while (depth < m && Polarity::family_size(family, depth) < 4ull * threads) ++depth;
  std::vector<std::string> out;
  for (std::uint64_t i = 0; i < Polarity::family_size(family, depth); ++i) {
    out.push_back(depth == 0 ? std::string{} : Polarity::nth(family, depth, i).digits());
  }
  return out;
}

SearchReport finish(const Multiplexer& std, const SearchConfig& cfg, const Tally& t,
                    Clock::time_point start) {
  SearchReport r;
  r.family = cfg.family;
  r.mode = cfg.mode;
  r.controls = std.controls();
  r.original_cost = total_cost(std.targets(), std.polarity());
  r.best = t.best;
  r.worst = t.worst;
  r.average_cost = t.count ? static_cast<double>(t.sum) / static_cast<double>(t.count) : 0.0;
  r.polarities_evaluated = t.count;
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

SearchReport exhaustive_search(const Multiplexer& std, const SearchConfig& cfg) {
  require_standard(std);
  require_limit(std.controls(), exhaustive_limit(cfg.family),
                "exhaustive " + std::string(quantum_name(cfg.family)) + " search");
  const auto start = Clock::now();
  unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : cfg.threads;

  const auto tasks = prefixes(cfg.family, std.controls(), threads);
  std::vector<Tally> partial(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Walker walker(std.targets(), std.controls(), cfg.family);
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      walker.walk(tasks[i], [&](const PolarityCost& pc) { partial[i].add(pc); });
    }
  };
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Tally total;
  for (const auto& t : partial) total.merge(t);
  return finish(std, cfg, total, start);
}

SearchReport random_polarity_search(const Multiplexer& std, const SearchConfig& cfg) {
  require_standard(std);
  require_limit(std.controls(), kMaxRandomControls, "random polarity search");
  if (cfg.sample_count == 0) {
    throw Error(ErrorKind::InvalidArgument, "random search needs at least one sample");
  }
  const auto start = Clock::now();
  const int m = std.controls();
  const std::uint64_t base = cfg.family == Family::Fixed ? 2 : 3;
  std::mt19937_64 engine(cfg.seed);

  Tally tally;
  std::vector<Unitary2> g;
  std::string digits(static_cast<std::size_t>(m), '0');
  for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
    for (auto& d : digits) d = static_cast<char>('0' + engine() % base);
    g = std.targets();
    for (int k = 0; k < m; ++k) {
      butterfly_stage(std::span<Unitary2>(g), forward_kernel(digits[static_cast<std::size_t>(k)]),
                      m - 1 - k);
    }
    Polarity p(digits);
    const std::int64_t cost = total_cost(g, p);
    tally.add({std::move(p), cost});
  }
  return finish(std, cfg, tally, start);
}

SearchReport run_search(const Multiplexer& std, const SearchConfig& cfg) {
  return cfg.mode == SearchMode::Exhaustive ? exhaustive_search(std, cfg)
                                            : random_polarity_search(std, cfg);
}

std::vector<PolarityCost> polarity_costs(const Multiplexer& std, Family family) {
  require_standard(std);
  require_limit(std.controls(), exhaustive_limit(family), "polarity enumeration");
  std::vector<PolarityCost> out;
  out.reserve(Polarity::family_size(family, std.controls()));
  Walker walker(std.targets(), std.controls(), family);
  walker.walk("", [&](const PolarityCost& pc) { out.push_back(pc); });
  return out;
}

double SearchReport::average_reduction_percent() const {
  if (original_cost == 0) return 0.0;
  return 100.0 * (1.0 - average_cost / static_cast<double>(original_cost));
}

double SearchReport::best_reduction_percent() const {
  if (original_cost == 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(best.cost) / static_cast<double>(original_cost));
}

std::string SearchReport::to_json(bool with_timing) const {
  nlohmann::ordered_json doc;
  doc["family"] = quantum_name(family);
  doc["mode"] = qmux::to_string(mode);
  doc["controls"] = controls;
  doc["original_cost"] = original_cost;
  doc["best"] = {{"polarity", best.polarity.digits()}, {"cost", best.cost}};
  doc["worst"] = {{"polarity", worst.polarity.digits()}, {"cost", worst.cost}};
  doc["average_cost"] = average_cost;
  doc["average_reduction_percent"] = average_reduction_percent();
  doc["polarities_evaluated"] = polarities_evaluated;
  if (with_timing) doc["elapsed_seconds"] = elapsed_seconds;
  return doc.dump(2);
}

std::string SearchReport::csv_header() {
  return "controls,original,best,worst,average,reduction_percent";
}

std::string SearchReport::to_csv_row() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%lld,%.3f,%.2f", controls,
                static_cast<long long>(original_cost), static_cast<long long>(best.cost),
                static_cast<long long>(worst.cost), average_cost, average_reduction_percent());
  return buf;
}

}  // namespace qmux
