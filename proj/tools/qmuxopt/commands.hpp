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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmux::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kLimitExceeded = 3,
};

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& text);

struct Common {
  Format format = Format::Text;
  std::string out_path;  // empty: stdout
  bool timing = true;    // false drops wall-clock fields from reports
};

struct OptimizeOptions {
  Common common;
  std::string input;
  std::string family = "fpqf";
  std::string mode = "exhaustive";
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct VerifyOptions {
  Common common;
  std::string input;
  std::string polarity;
  std::string against;  // optional polarized .qmux checked instead of the transform
};

struct ClassicalOptions {
  Common common;
  std::string input;  // .pla path or minterm string
  std::string family = "fprm";
  int output_index = 0;
  std::string semantics;  // "f" | "fr"; empty: from .type
  std::size_t top = 0;    // 0: all rows
  std::string order = "cost";
};

struct GenerateOptions {
  Common common;
  int controls = 0;
  std::string pool = "full";
  std::uint64_t seed = 0;
  std::string targets;  // explicit comma-separated list; overrides pool
};

struct CostOptions {
  Common common;
  std::string input;
};

/// Provenance embedded in every report.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::uint64_t> seeds;
  std::optional<double> wall_seconds;
};

std::string tool_version();

// Each command writes its report to `out` (or to common.out_path) and
// diagnostics to `err`, and returns the process exit code.
int cmd_optimize(const OptimizeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_classical(const ClassicalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_cost(const CostOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace qmux::cli
