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

#include "qmux/qmux_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qmux/error.hpp"

namespace qmux {

namespace {

using nlohmann::json;

struct Token {
  std::string text;
  int line;
  int column;
};

struct FormSpec {
  Form form = Form::Standard;
  Polarity polarity;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits on whitespace outside parentheses so "M(1, 0, ...)" stays whole,
// even when the literal continues onto the next line.
class Tokenizer {
 public:
  void feed(std::string_view line, int lineno, int col0) {
    std::size_t i = 0;
    while (i < line.size()) {
      if (depth_ == 0) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        current_ = Token{"", lineno, col0 + static_cast<int>(i) + 1};
      }
      while (i < line.size() && (depth_ > 0 || !is_space(line[i]))) {
        if (line[i] == '(') ++depth_;
        if (line[i] == ')') --depth_;
        if (!is_space(line[i])) current_.text += line[i];
        ++i;
      }
      if (depth_ == 0) out_.push_back(std::move(current_));
    }
  }

  // Throws when a parenthesis is still open at end of input.
  std::vector<Token> finish() {
    if (depth_ > 0) throw ParseError(current_.line, current_.column, "unterminated '('");
    return std::move(out_);
  }

 private:
  std::vector<Token> out_;
  Token current_{};
  int depth_ = 0;
};

// Parses "standard" / "fpqf:<digits>" / "kqf:<digits>".
std::optional<FormSpec> parse_form(std::string_view text) {
  const std::string s = lower(text);
  if (s == "standard") return FormSpec{};
  const auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string kind = s.substr(0, colon);
  FormSpec spec;
  if (kind == "fpqf") {
    spec.form = Form::FixedPolarity;
  } else if (kind == "kqf") {
    spec.form = Form::Kronecker;
  } else {
    return std::nullopt;
  }
  try {
    spec.polarity = Polarity(s.substr(colon + 1));
  } catch (const Error&) {
    return std::nullopt;
  }
  if (spec.form == Form::FixedPolarity && !spec.polarity.is_fixed()) return std::nullopt;
  return spec;
}

Multiplexer build(std::vector<Unitary2> targets, const FormSpec& spec, int controls, int line) {
  if (targets.size() != (std::size_t{1} << controls)) {
    throw ParseError(line, 0,
                     "expected " + std::to_string(std::size_t{1} << controls) +
                         " targets for " + std::to_string(controls) + " controls, got " +
                         std::to_string(targets.size()));
  }
  if (spec.form != Form::Standard && spec.polarity.size() != controls) {
    throw ParseError(line, 0, "polarity '" + spec.polarity.digits() + "' does not have " +
                                  std::to_string(controls) + " digits");
  }
  try {
    return Multiplexer::with_form(std::move(targets), spec.form, spec.polarity);
  } catch (const Error& e) {
    throw ParseError(line, 0, e.what());
  }
}

int parse_controls(std::string_view value, int line, int column) {
  int m = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), m);
  if (ec != std::errc{} || ptr != value.data() + value.size() || m < 1 || m > kMaxControls) {
    throw ParseError(line, column,
                     "controls must be an integer in 1.." + std::to_string(kMaxControls));
  }
  return m;
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && is_space(s[a])) ++a;
  std::size_t b = s.size();
  while (b > a && is_space(s[b - 1])) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

}  // namespace

std::string form_label(const Multiplexer& mux) {
  switch (mux.form()) {
    case Form::Standard: return "standard";
    case Form::FixedPolarity: return "fpqf:" + mux.polarity().digits();
    case Form::Kronecker: return "kqf:" + mux.polarity().digits();
  }
  return "standard";
}

Multiplexer parse_qmux(std::string_view text) {
  std::optional<int> controls;
  std::optional<FormSpec> form;
  bool in_targets = false;
  Tokenizer tokenizer;
  int targets_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    const std::string_view body = trim(line, &lead);
    if (body.empty()) continue;

    if (in_targets) {
      tokenizer.feed(line, lineno, 0);
      continue;
    }
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(lineno, static_cast<int>(lead) + 1, "expected 'key: value'");
    }
    const std::string key = lower(trim(body.substr(0, colon)));
    std::size_t vlead = 0;
    const std::string_view value = trim(body.substr(colon + 1), &vlead);
    const int vcol = static_cast<int>(lead + colon + 1 + vlead) + 1;

    if (key == "controls") {
      if (controls) throw ParseError(lineno, static_cast<int>(lead) + 1, "duplicate 'controls'");
      controls = parse_controls(value, lineno, vcol);
    } else if (key == "form") {
      if (form) throw ParseError(lineno, static_cast<int>(lead) + 1, "duplicate 'form'");
      form = parse_form(value);
      if (!form) {
        throw ParseError(lineno, vcol,
                         "form must be 'standard', 'fpqf:<digits>' or 'kqf:<digits>'");
      }
    } else if (key == "targets") {
      if (!controls || !form) {
        throw ParseError(lineno, static_cast<int>(lead) + 1,
                         "'targets' must follow 'controls' and 'form'");
      }
      in_targets = true;
      targets_line = lineno;
      tokenizer.feed(line.substr(lead + colon + 1), lineno, static_cast<int>(lead + colon + 1));
    } else {
      throw ParseError(lineno, static_cast<int>(lead) + 1, "unknown key '" + key + "'");
    }
  }
  if (!controls) throw ParseError(lineno, 0, "missing 'controls'");
  if (!form) throw ParseError(lineno, 0, "missing 'form'");
  if (!in_targets) throw ParseError(lineno, 0, "missing 'targets'");
  const std::vector<Token> tokens = tokenizer.finish();

  std::vector<Unitary2> targets;
  targets.reserve(tokens.size());
  for (const auto& t : tokens) {
    try {
      targets.push_back(parse_gate(t.text));
    } catch (const Error& e) {
      throw ParseError(t.line, t.column, e.what());
    }
  }
  return build(std::move(targets), *form, *controls, targets_line);
}

std::string write_qmux(const Multiplexer& mux, const std::vector<std::string>& header) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  out += "controls: " + std::to_string(mux.controls()) + "\n";
  out += "form: " + form_label(mux) + "\n";
  out += "targets:\n";
  // Eight tokens per line keeps large files readable.
  for (std::size_t i = 0; i < mux.size(); ++i) {
    out += render_gate(mux.target(i));
    out += (i % 8 == 7 || i + 1 == mux.size()) ? '\n' : ' ';
  }
  return out;
}

Multiplexer parse_qmux_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Map the byte offset back to a line/column.
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "invalid JSON");
  }
  try {
    const int m = doc.at("controls").get<int>();
    if (m < 1 || m > kMaxControls) throw ParseError(1, 0, "controls out of range");
    const auto form = parse_form(doc.at("form").get<std::string>());
    if (!form) throw ParseError(1, 0, "bad form '" + doc.at("form").get<std::string>() + "'");
    std::vector<Unitary2> targets;
    for (const auto& t : doc.at("targets")) targets.push_back(parse_gate(t.get<std::string>()));
    return build(std::move(targets), *form, m, 1);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(1, 0, e.what());
  } catch (const json::exception& e) {
    throw ParseError(1, 0, std::string("bad multiplexer JSON: ") + e.what());
  }
}

std::string write_qmux_json(const Multiplexer& mux) {
  json doc;
  doc["controls"] = mux.controls();
  doc["form"] = form_label(mux);
  json targets = json::array();
  for (const auto& t : mux.targets()) targets.push_back(render_gate(t));
  doc["targets"] = std::move(targets);
  return doc.dump(2) + "\n";
}

Multiplexer load_multiplexer(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_qmux_json(text);
  return parse_qmux(text);
}

}  // namespace qmux
