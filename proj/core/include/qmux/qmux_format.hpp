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

// .qmux text format:
//
//   # comment
//   controls: 2
//   form: standard            (or fpqf:<digits> / kqf:<digits>)
//   targets:
//   I V V X
//
// Targets are gate tokens (see parse_gate) in ascending index order and may
// span several lines or follow "targets:" on the same line. The JSON mirror
// uses the same keys: {"controls":2,"form":"standard","targets":[...]}.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qmux/multiplexer.hpp"

namespace qmux {

std::string form_label(const Multiplexer& mux);  // "standard", "fpqf:11", ...

/// Throws ParseError with line/column, or the gate errors of parse_gate
/// rewrapped as ParseError.
Multiplexer parse_qmux(std::string_view text);
/// `header` lines are written as '#' comments before the body.
std::string write_qmux(const Multiplexer& mux, const std::vector<std::string>& header = {});

Multiplexer parse_qmux_json(std::string_view text);
std::string write_qmux_json(const Multiplexer& mux);

/// Reads a file in either format; JSON when the first non-blank character
/// is '{'. Throws ParseError (line 0) when the file cannot be read.
Multiplexer load_multiplexer(const std::filesystem::path& path);

}  // namespace qmux
