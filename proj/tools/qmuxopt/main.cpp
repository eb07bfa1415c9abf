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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace qmux::cli;

struct CommonFlags {
  std::string format = "text";
  std::string out;
  bool no_timing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out, "Write the report to PATH instead of stdout");
    cmd->add_flag("--no-timing", no_timing, "Omit wall-clock fields so output is byte-stable");
  }

  Common resolve() const { return {parse_format(format), out, !no_timing}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum multiplexer optimizer"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  OptimizeOptions optimize;
  CommonFlags optimize_flags;
  auto* opt_cmd = app.add_subcommand("optimize", "Search polarities for the cheapest form");
  opt_cmd->add_option("input", optimize.input, ".qmux or JSON multiplexer")->required();
  opt_cmd->add_option("--family", optimize.family, "Polarity family")->check(CLI::IsMember({"fpqf", "kqf"}));
  opt_cmd->add_option("--mode", optimize.mode, "Search strategy")->check(CLI::IsMember({"exhaustive", "random"}));
  opt_cmd->add_option("--samples", optimize.samples, "Polarities drawn in random mode");
  opt_cmd->add_option("--seed", optimize.seed, "Seed for random mode");
  opt_cmd->add_option("--threads", optimize.threads, "Worker threads (0: all cores)");
  optimize_flags.attach(opt_cmd);

  VerifyOptions verify;
  CommonFlags verify_flags;
  auto* ver_cmd = app.add_subcommand("verify", "Check that a polarized form matches the input");
  ver_cmd->add_option("input", verify.input, "Standard-form multiplexer")->required();
  auto* pol = ver_cmd->add_option("polarity", verify.polarity, "Polarity to transform with");
  auto* against = ver_cmd->add_option("--against", verify.against,
                                      "Polarized multiplexer to check instead of a transform");
  pol->excludes(against);
  verify_flags.attach(ver_cmd);

  ClassicalOptions classical;
  CommonFlags classical_flags;
  auto* cls_cmd = app.add_subcommand("classical", "Rank FPRM/KRM polarities by literal cost");
  cls_cmd->add_option("input", classical.input, ".pla path or binary/0x minterm string")
      ->required();
  cls_cmd->add_option("--family", classical.family, "Polarity family")->check(CLI::IsMember({"fprm", "krm"}));
  cls_cmd->add_option("--output-index", classical.output_index, "PLA output column");
  cls_cmd->add_option("--semantics", classical.semantics, "Override the PLA .type")
      ->check(CLI::IsMember({"f", "fr"}));
  cls_cmd->add_option("--top", classical.top, "Print only the first K rows");
  cls_cmd->add_option("--order", classical.order, "Row order")
      ->check(CLI::IsMember({"cost", "polarity"}));
  classical_flags.attach(cls_cmd);

  GenerateOptions gen;
  std::string gen_format = "qmux";
  auto* gen_cmd = app.add_subcommand("generate", "Write a random standard-form multiplexer");
  gen_cmd->add_option("--controls", gen.controls, "Control lines (1..20)");
  gen_cmd->add_option("--pool", gen.pool, "full, nvv or custom:<gate>,<gate>,...");
  gen_cmd->add_option("--seed", gen.seed, "Seed for the gate draw");
  gen_cmd->add_option("--targets", gen.targets, "Explicit comma-separated target list");
  gen_cmd->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"qmux", "json"}));
  gen_cmd->add_option("--out", gen.common.out_path, "Write to PATH instead of stdout");

  CostOptions cost;
  CommonFlags cost_flags;
  auto* cost_cmd = app.add_subcommand("cost", "Per-gate cost of a multiplexer in any form");
  cost_cmd->add_option("input", cost.input, "Multiplexer file in any form")->required();
  cost_flags.attach(cost_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*opt_cmd) {
    optimize.common = optimize_flags.resolve();
    return cmd_optimize(optimize, out, err);
  }
  if (*ver_cmd) {
    if (verify.polarity.empty() && verify.against.empty()) {
      err << "error: verify needs a polarity or --against\n";
      return kParseError;
    }
    verify.common = verify_flags.resolve();
    return cmd_verify(verify, out, err);
  }
  if (*cls_cmd) {
    classical.common = classical_flags.resolve();
    return cmd_classical(classical, out, err);
  }
  if (*gen_cmd) {
    if (gen.targets.empty() && gen.controls == 0) {
      err << "error: generate needs --controls or --targets\n";
      return kParseError;
    }
    gen.common.format = gen_format == "json" ? Format::Json : Format::Text;
    return cmd_generate(gen, out, err);
  }
  cost.common = cost_flags.resolve();
  return cmd_cost(cost, out, err);
}
