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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "qmux/boolean_rm.hpp"
#include "qmux/cost.hpp"
#include "qmux/multiplexer.hpp"
#include "qmux/pla.hpp"
#include "qmux/search.hpp"
#include "qmux/testgen.hpp"

#ifndef QMUX_TEST_DATA_DIR
#define QMUX_TEST_DATA_DIR "tests/data"
#endif

namespace {

using namespace qmux;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first few failures; later ones only flip the verdict.
class Check {
 public:
  void fail(const std::string& why) {
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + why;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  Outcome done(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, std::to_string(failures_) + " failure(s): " + notes_};
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* pattern, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// 1. Literal costs of every FPRM polarity of a + (b ^ c) via the CLI command.
Outcome table_one() {
  Check c;
  const auto start = Clock::now();
  cli::ClassicalOptions opt;
  opt.input = "01101111";
  opt.order = "polarity";
  opt.common.format = cli::Format::Csv;
  opt.common.timing = false;
  std::ostringstream out, err;
  const int code = cli::cmd_classical(opt, out, err);
  const double elapsed = seconds_since(start);
  c.expect(code == 0, "exit code " + std::to_string(code) + ": " + err.str());

  std::vector<std::int64_t> costs;
  std::vector<std::string> order;
  std::istringstream lines(out.str());
  std::string line;
  bool in_table = false;
  while (std::getline(lines, line)) {
    if (line == "polarity,cost") {
      in_table = true;
    } else if (in_table && !line.empty()) {
      const auto comma = line.find(',');
      order.push_back(line.substr(0, comma));
      costs.push_back(std::stoll(line.substr(comma + 1)));
    }
  }
  const std::vector<std::int64_t> expected{5, 4, 4, 5, 7, 6, 6, 7};
  c.expect(order == testing::all_polarities(3, "01"), "rows not in polarity order 000..111");
  c.expect(costs == expected, "costs " + join(costs));
  c.expect(elapsed < 1.0, "took " + fmt("%.3f s", elapsed));
  return c.done("costs " + join(costs) + " in " + fmt("%.4f s", elapsed));
}

// 2. Spectra and transform matrices of a ^ b.
Outcome xor_fixtures() {
  Check c;
  const BoolFunc f = BoolFunc::parse("0110");
  c.expect(rm_transform(f, Polarity("10")).coefficients.bits() == std::vector<int>{1, 1, 0, 1},
           "spectrum at 10");
  c.expect(rm_transform(f, Polarity("20")).coefficients.bits() == std::vector<int>{1, 1, 1, 0},
           "spectrum at 20");
  const std::vector<std::vector<int>> t10{{1, 1, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {0, 1, 0, 1}};
  const std::vector<std::vector<int>> t20{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  c.expect(rm_transform_matrix(Polarity("10")).rows() == t10, "matrix at 10");
  c.expect(rm_transform_matrix(Polarity("20")).rows() == t20, "matrix at 20");
  return c.done("[1,1,0,1] and [1,1,1,0]; both 4x4 matrices exact");
}

// 3. KRM literal cost at polarity 021.
Outcome krm_fixture() {
  Check c;
  const int cost = literal_cost(rm_transform(BoolFunc::parse("01101111"), Polarity("021")));
  c.expect(cost == 10, "cost " + std::to_string(cost));
  return c.done("cost " + std::to_string(cost));
}

// 4. Two-control algebra of the forward transform, term by term.
Outcome two_control_algebra() {
  Check c;
  std::mt19937_64 rng(20260401);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto f = testing::random_gates(4, rng);
    const auto g = forward_transform(Multiplexer::standard(f), Polarity("11")).targets();
    const Unitary2 direct = f[3] * inverse(f[1]) * f[0] * inverse(f[2]);
    const double d = std::max({max_abs_diff(g[0], f[0]), max_abs_diff(g[1], f[1] * inverse(f[0])),
                               max_abs_diff(g[2], f[2] * inverse(f[0])), max_abs_diff(g[3], direct)});
    worst = std::max(worst, d);
    c.expect(d < 1e-9, "quadruple " + std::to_string(t) + " deviates by " + fmt("%.2e", d));
  }
  return c.done("100 quadruples, max deviation " + fmt("%.2e", worst));
}

// 5. The [I,V,V,X] case end to end, cross-checked against the triangular solve.
Outcome figure_thirteen() {
  Check c;
  using namespace gates;
  const Multiplexer mux = Multiplexer::standard({I(), V(), V(), X()});
  const SearchReport r = exhaustive_search(mux, SearchConfig{});
  const auto g = forward_transform(mux, r.best.polarity).targets();
  const auto oracle = triangular_solve_oracle(mux, Polarity("11")).targets();
  const std::vector<Unitary2> expected{I(), V(), V(), I()};
  c.expect(r.best.polarity.digits() == "11", "best polarity " + r.best.polarity.digits());
  c.expect(r.best.cost == 2, "best cost " + std::to_string(r.best.cost));
  c.expect(r.original_cost == 15, "original cost " + std::to_string(r.original_cost));
  for (std::size_t i = 0; i < 4; ++i) {
    c.expect(approx_eq(g[i], expected[i]), "target " + std::to_string(i));
    c.expect(approx_eq(oracle[i], expected[i]), "oracle target " + std::to_string(i));
  }
  const double reduction = r.best_reduction_percent();
  c.expect(std::lround(reduction) == 87, "reduction " + fmt("%.2f%%", reduction));
  return c.done("best 11, targets [I,V,V,I], cost 2 vs 15 (" + fmt("%.2f%%", reduction) +
                " reduction)");
}

// 6. Semantic equivalence for every polarity at m <= 4, plus round trip and
// agreement with the triangular solve.
Outcome semantic_equivalence() {
  Check c;
  const auto start = Clock::now();
  std::mt19937_64 rng(6);
  std::size_t checked = 0;
  double worst = 0;
  for (int m = 1; m <= 4; ++m) {
    const std::string mixed(static_cast<std::size_t>(m), '2');
    for (const auto& p : testing::all_polarities(m, "012")) {
      const Polarity pol(p);
      for (int rep = 0; rep < 25; ++rep) {
        const Multiplexer mux = Multiplexer::standard(testing::random_gates(std::size_t{1} << m, rng));
        const Multiplexer out = forward_transform(mux, pol);
        const double sem = testing::oracle_deviation(mux.targets(), mixed, out.targets(), p);
        const double lib = max_semantic_deviation(mux, out);
        const auto back = inverse_transform(out).targets();
        const auto tri = triangular_solve_oracle(mux, pol).targets();
        double trip = 0;
        double solve = 0;
        for (std::size_t i = 0; i < back.size(); ++i) {
          trip = std::max(trip, max_abs_diff(back[i], mux.target(i)));
          solve = std::max(solve, max_abs_diff(tri[i], out.target(i)));
        }
        const double d = std::max({sem, lib, trip, solve});
        worst = std::max(worst, d);
        c.expect(d < 1e-9, "polarity " + p + " deviates by " + fmt("%.2e", d));
        ++checked;
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 120, "took " + fmt("%.1f s", elapsed));
  return c.done(std::to_string(checked) + " multiplexers (FPQF polarities are the '2'-free KQF ones), max deviation " +
                fmt("%.2e", worst) + ", " + fmt("%.2f s", elapsed));
}

// 7. Gate-cost table and linear tail.
Outcome cost_model() {
  Check c;
  const std::vector<std::int64_t> table{1, 1, 5, 13, 29, 52, 84, 116, 154, 192};
  for (int n = 0; n < 10; ++n) {
    c.expect(gate_cost(n) == table[static_cast<std::size_t>(n)], "n=" + std::to_string(n));
  }
  for (int n = 9; n <= 15; ++n) c.expect(gate_cost(n) == 32 * n - 96, "tail n=" + std::to_string(n));
  c.expect(gate_cost(9) == 192, "n=9 agreement");
  return c.done("0..9 exact, 32m-96 for 9..15");
}

// 8. Kronecker forms never lose to fixed-polarity forms or to the original.
Outcome structural_dominance() {
  Check c;
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const GatePool pool = t % 2 ? pool_nvv() : pool_full();
    const Multiplexer mux = generate(m, pool, rng());
    SearchConfig cfg;
    const SearchReport fp = exhaustive_search(mux, cfg);
    cfg.family = Family::Kronecker;
    const SearchReport kq = exhaustive_search(mux, cfg);
    c.expect(kq.best.cost <= fp.best.cost, "KQF > FPQF at sample " + std::to_string(t));
    c.expect(kq.best.cost <= kq.original_cost, "KQF > original at sample " + std::to_string(t));
    ++checked;
  }
  return c.done(std::to_string(checked) + " multiplexers, 0 violations");
}

// 9. Mean average-polarity reduction at m = 5 over 20 seeds per pool.
Outcome statistical_replication() {
  Check c;
  std::string summary;
  for (const auto& [pool, lo, hi] : {std::tuple{pool_full(), 63.0, 83.0}, {pool_nvv(), 69.0, 89.0}}) {
    double total = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      total += exhaustive_search(generate(5, pool, seed), SearchConfig{}).average_reduction_percent();
    }
    const double mean = total / 20;
    c.expect(mean >= lo && mean <= hi,
             pool.name + " mean " + fmt("%.2f%%", mean) + " outside [" + fmt("%.0f", lo) + ", " +
                 fmt("%.0f", hi) + "]");
    summary += (summary.empty() ? "" : ", ") + pool.name + " " + fmt("%.2f%%", mean);
  }
  return c.done(summary);
}

// 10. Runtime at scale.
Outcome scale() {
  Check c;
  auto start = Clock::now();
  const SearchReport ex = exhaustive_search(generate(12, pool_full(), 12), SearchConfig{});
  const double t_ex = seconds_since(start);
  c.expect(ex.polarities_evaluated == 4096, "evaluated " + std::to_string(ex.polarities_evaluated));
  c.expect(t_ex < 180, "m=12 exhaustive took " + fmt("%.1f s", t_ex));

  start = Clock::now();
  SearchConfig cfg;
  cfg.mode = SearchMode::Random;
  cfg.sample_count = 16;
  cfg.seed = 17;
  const SearchReport rnd = random_polarity_search(generate(17, pool_full(), 17), cfg);
  const double t_rnd = seconds_since(start);
  c.expect(rnd.polarities_evaluated == 16, "random evaluated " + std::to_string(rnd.polarities_evaluated));
  c.expect(t_rnd < 60, "m=17 random took " + fmt("%.1f s", t_rnd));
  return c.done("m=12 exhaustive " + fmt("%.2f s", t_ex) + ", m=17 random (16 samples) " +
                fmt("%.2f s", t_rnd));
}

// Non-identity gate pattern of the quantum form against the nonzero pattern
// of the classical spectrum, for every fixed polarity.
int pattern_mismatches(const BoolFunc& f) {
  int mismatches = 0;
  const Multiplexer mux = to_multiplexer(f);
  for (const auto& p : testing::all_polarities(f.num_vars(), "01")) {
    const Polarity pol(p);
    const auto g = forward_transform(mux, pol).targets();
    const BoolFunc coeff = to_base_order(rm_transform(f, pol));
    for (std::uint64_t i = 0; i < g.size(); ++i) {
      if (!is_identity(g[i]) != coeff.get(i)) ++mismatches;
      if (!is_identity(g[i]) && !approx_eq(g[i], gates::X())) ++mismatches;
    }
  }
  return mismatches;
}

// 11. Classical/quantum consistency on random functions of 2..5 variables.
Outcome classical_quantum_consistency() {
  Check c;
  std::mt19937_64 rng(11);
  int total = 0;
  for (int t = 0; t < 100; ++t) {
    const BoolFunc f = testing::random_function(2 + t % 4, rng);
    const int bad = pattern_mismatches(f);
    total += bad;
    c.expect(bad == 0, "function " + f.to_string() + ": " + std::to_string(bad) + " mismatches");
  }
  return c.done("100 functions, every polarity, " + std::to_string(total) + " mismatches");
}

// 12. PLA pipeline: parity optimum plus criteria 8 and 11 on the bundled files.
Outcome pla_pipeline() {
  Check c;
  const std::string dir = QMUX_TEST_DATA_DIR;
  std::int64_t parity_best = -1;
  int functions = 0;
  for (const char* name : {"xor5.pla", "rd53.pla", "majority3.pla"}) {
    PlaFile pla;
    try {
      pla = load_pla(dir + "/" + name);
    } catch (const std::exception& e) {
      c.fail(std::string(name) + ": " + e.what());
      continue;
    }
    for (int out = 0; out < pla.num_outputs; ++out) {
      const BoolFunc f = to_bool_func(pla, out, semantics_for_type(pla.type));
      const Multiplexer mux = to_multiplexer(f);
      SearchConfig cfg;
      const SearchReport fp = exhaustive_search(mux, cfg);
      cfg.family = Family::Kronecker;
      const SearchReport kq = exhaustive_search(mux, cfg);
      const std::string tag = std::string(name) + "[" + std::to_string(out) + "]";
      c.expect(kq.best.cost <= fp.best.cost, tag + " KQF > FPQF");
      c.expect(kq.best.cost <= kq.original_cost, tag + " KQF > original");
      c.expect(pattern_mismatches(f) == 0, tag + " pattern mismatch");
      if (std::string(name) == "xor5.pla") parity_best = fp.best.cost;
      ++functions;
    }
  }
  c.expect(parity_best == 5, "parity best FPQF cost " + std::to_string(parity_best));
  return c.done(std::to_string(functions) + " PLA outputs consistent, parity best FPQF cost " +
                std::to_string(parity_best));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"FPRM literal-cost table for a+(b^c)", table_one},
      {"a^b spectra and transform matrices", xor_fixtures},
      {"KRM polarity 021 cost", krm_fixture},
      {"two-control forward-transform algebra", two_control_algebra},
      {"[I,V,V,X] end to end", figure_thirteen},
      {"semantic equivalence, m<=4, all polarities", semantic_equivalence},
      {"gate-cost model", cost_model},
      {"KQF dominance over FPQF and original", structural_dominance},
      {"m=5 average reduction over 20 seeds", statistical_replication},
      {"runtime at m=12 exhaustive and m=17 random", scale},
      {"classical/quantum pattern consistency", classical_quantum_consistency},
      {"PLA pipeline", pla_pipeline},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
