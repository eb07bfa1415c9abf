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

#include "qmux/pla.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qmux/error.hpp"

namespace qmux {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(ErrorKind kind, int line, const std::string& msg) {
  throw Error(kind, "line " + std::to_string(line) + ": " + msg);
}

int parse_count(const std::vector<std::string>& tok, int line) {
  int v = -1;
  if (tok.size() >= 2) {
    const auto& s = tok[1];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) v = -1;
  }
  if (v < 0) fail(ErrorKind::MissingHeader, line, "expected a count after " + tok[0]);
  return v;
}

}  // namespace

PlaFile parse_pla(std::string_view text) {
  PlaFile pla;
  bool have_i = false;
  bool have_o = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split(line);
    if (tok.empty()) continue;

    if (tok[0][0] == '.') {
      const std::string& d = tok[0];
      if (d == ".e" || d == ".end") break;
      if (d == ".i") {
        pla.num_inputs = parse_count(tok, lineno);
        have_i = true;
      } else if (d == ".o") {
        pla.num_outputs = parse_count(tok, lineno);
        have_o = true;
      } else if (d == ".p") {
        pla.num_terms = parse_count(tok, lineno);
      } else if (d == ".type") {
        pla.type = tok.size() > 1 ? tok[1] : "";
      } else if (d != ".ilb" && d != ".ob") {
        pla.warnings.push_back("line " + std::to_string(lineno) + ": ignored directive " + d);
      }
      continue;
    }

    if (!have_i || !have_o) fail(ErrorKind::MissingHeader, lineno, "term before .i/.o header");
    std::string cube;
    std::string outs;
    if (tok.size() == 1) {
      // Inputs and outputs written back to back.
      if (tok[0].size() != static_cast<std::size_t>(pla.num_inputs + pla.num_outputs)) {
        fail(ErrorKind::InconsistentWidth, lineno,
             "term '" + tok[0] + "' does not match .i " + std::to_string(pla.num_inputs) +
                 " + .o " + std::to_string(pla.num_outputs));
      }
      cube = tok[0].substr(0, static_cast<std::size_t>(pla.num_inputs));
      outs = tok[0].substr(static_cast<std::size_t>(pla.num_inputs));
    } else {
      cube = tok[0];
      for (std::size_t t = 1; t < tok.size(); ++t) outs += tok[t];
    }
    if (cube.size() != static_cast<std::size_t>(pla.num_inputs)) {
      fail(ErrorKind::InconsistentWidth, lineno,
           "cube '" + cube + "' has " + std::to_string(cube.size()) + " columns, .i is " +
               std::to_string(pla.num_inputs));
    }
    if (outs.size() != static_cast<std::size_t>(pla.num_outputs)) {
      fail(ErrorKind::InconsistentWidth, lineno,
           "output '" + outs + "' has " + std::to_string(outs.size()) + " columns, .o is " +
               std::to_string(pla.num_outputs));
    }
    for (char c : cube) {
      if (c != '0' && c != '1' && c != '-') {
        fail(ErrorKind::MalformedCube, lineno, "bad input character '" + std::string(1, c) + "'");
      }
    }
    for (char c : outs) {
      if (c != '0' && c != '1' && c != '~' && c != '-') {
        fail(ErrorKind::MalformedCube, lineno, "bad output character '" + std::string(1, c) + "'");
      }
    }
    pla.terms.push_back({std::move(cube), std::move(outs)});
  }
  if (!have_i || !have_o) fail(ErrorKind::MissingHeader, lineno, "missing .i or .o");
  return pla;
}

PlaFile load_pla(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pla(buf.str());
}

PlaSemantics semantics_for_type(std::string_view type) {
  if (type.empty() || type == "f") return PlaSemantics::F;
  if (type == "fr") return PlaSemantics::FR;
  throw Error(ErrorKind::UnsupportedType, "unsupported PLA type '" + std::string(type) + "'");
}

namespace {

// Calls f(index) for every minterm of the cube; column 0 is the MSB.
template <typename F>
void expand_cube(const std::string& cube, F&& f) {
  const int n = static_cast<int>(cube.size());
  std::uint64_t fixed = 0;
  std::uint64_t free = 0;
  for (int c = 0; c < n; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - c);
    if (cube[static_cast<std::size_t>(c)] == '1') fixed |= bit;
    if (cube[static_cast<std::size_t>(c)] == '-') free |= bit;
  }
  std::uint64_t s = 0;
  do {
    f(fixed | s);
    s = (s - free) & free;
  } while (s != 0);
}

}  // namespace

BoolFunc to_bool_func(const PlaFile& pla, int output_index, PlaSemantics semantics) {
  if (output_index < 0 || output_index >= pla.num_outputs) {
    throw Error(ErrorKind::InvalidArgument,
                "output index " + std::to_string(output_index) + " out of range 0.." +
                    std::to_string(pla.num_outputs - 1));
  }
  if (!pla.type.empty()) semantics_for_type(pla.type);
  BoolFunc f(pla.num_inputs);
  const auto col = static_cast<std::size_t>(output_index);
  for (const auto& t : pla.terms) {
    if (t.outputs[col] == '1') expand_cube(t.inputs, [&](std::uint64_t i) { f.set(i, true); });
  }
  if (semantics == PlaSemantics::FR) {
    for (const auto& t : pla.terms) {
      if (t.outputs[col] != '0') continue;
      expand_cube(t.inputs, [&](std::uint64_t i) {
        if (f.get(i)) {
          throw Error(ErrorKind::UnsupportedType,
                      "fr-type PLA assigns minterm " + std::to_string(i) + " to both ON and OFF sets");
        }
      });
    }
  }
  return f;
}

Multiplexer to_multiplexer(const BoolFunc& f) {
  std::vector<Unitary2> targets(f.size(), gates::I());
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (f.get(i)) targets[i] = gates::X();
  }
  return Multiplexer::standard(std::move(targets));
}

}  // namespace qmux
