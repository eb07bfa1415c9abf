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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmux/boolean_rm.hpp"
#include "qmux/multiplexer.hpp"

namespace qmux {

/// One product term: input cube over {0,1,-} and output vector over
/// {0,1,~,-}.
struct PlaTerm {
  std::string inputs;
  std::string outputs;
};

/// A Berkeley-format PLA file.
struct PlaFile {
  int num_inputs = 0;
  int num_outputs = 0;
  std::optional<int> num_terms;  // .p, informational
  std::string type;              // .type; empty when absent
  std::vector<PlaTerm> terms;
  std::vector<std::string> warnings;  // e.g. ignored directives
};

enum class PlaSemantics { F, FR };

/// Accepts .i .o .p .type .ilb .ob .e/.end and '#' comments; other dot
/// directives are skipped with a warning. Terms may separate inputs and
/// outputs by whitespace or write them back to back.
///
/// Throws Error{MissingHeader} when a term precedes .i/.o,
/// Error{InconsistentWidth} on cube/output width mismatch and
/// Error{MalformedCube} on characters outside the alphabets. Messages
/// carry the line number.
PlaFile parse_pla(std::string_view text);
PlaFile load_pla(const std::filesystem::path& path);

/// Semantics from a .type value: "f" (or absent) -> F, "fr" -> FR.
/// Throws Error{UnsupportedType} for anything else.
PlaSemantics semantics_for_type(std::string_view type);

/// Expands the ON-set of one output to a minterm vector. The first input
/// column is the most significant index bit. F: union of cubes with output
/// '1'. FR: same ON-set; a minterm also covered by an explicit '0' cube is
/// an Error{UnsupportedType}. '~' and '-' outputs read as 0. Throws
/// Error{InvalidArgument} for a bad output_index.
BoolFunc to_bool_func(const PlaFile& pla, int output_index, PlaSemantics semantics);

/// Standard-form multiplexer with target X on ON minterms and I elsewhere.
Multiplexer to_multiplexer(const BoolFunc& f);

}  // namespace qmux
