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

#include "qmux/unitary.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "qmux/error.hpp"

namespace qmux {

bool Unitary2::is_finite() const {
  return std::all_of(m_.begin(), m_.end(), [](const complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double Unitary2::unitarity_error() const {
  return max_abs_diff(*this * dagger(), identity());
}

Unitary2 multiply(const Unitary2& lhs, const Unitary2& rhs) {
  return lhs * rhs;
}

Unitary2 inverse(const Unitary2& u) { return u.dagger(); }

double max_abs_diff(const Unitary2& u, const Unitary2& v) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(u.entries()[i] - v.entries()[i]));
  }
  return worst;
}

bool approx_eq(const Unitary2& u, const Unitary2& v, double tol) {
  return max_abs_diff(u, v) <= tol;
}

namespace gates {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

Unitary2 I() { return Unitary2::identity(); }
Unitary2 X() { return {0, 1, 1, 0}; }
Unitary2 Y() { return {0, complex{0, -1}, complex{0, 1}, 0}; }
Unitary2 Z() { return {1, 0, 0, -1}; }
Unitary2 H() { return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}; }
Unitary2 V() {
  const complex p{0.5, 0.5};
  const complex q{0.5, -0.5};
  return {p, q, q, p};
}
Unitary2 VD() { return V().dagger(); }

Unitary2 RX(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {c, complex{0, -s}, complex{0, -s}, c};
}

Unitary2 RY(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {c, -s, s, c};
}

Unitary2 RZ(double theta) {
  return {std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
}

Unitary2 phase(double delta) {
  const complex p = std::polar(1.0, delta);
  return {p, 0, 0, p};
}

const std::vector<std::string>& fixed_names() {
  static const std::vector<std::string> names{"I", "X", "Y", "Z",
                                              "H", "V", "VD"};
  return names;
}

}  // namespace gates

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Unitary2> fixed_gate(const std::string& name) {
  if (name == "I" || name == "ID") return gates::I();
  if (name == "X" || name == "NOT" || name == "PX") return gates::X();
  if (name == "Y" || name == "PY") return gates::Y();
  if (name == "Z" || name == "PZ") return gates::Z();
  if (name == "H") return gates::H();
  if (name == "V") return gates::V();
  if (name == "VD" || name == "V+" || name == "VDG") return gates::VD();
  return std::nullopt;
}

[[noreturn]] void unknown(std::string_view token) {
  throw Error(ErrorKind::UnknownGate,
              "unknown gate '" + std::string(token) + "'");
}

double parse_number(std::string_view text, std::string_view token) {
  text = trim(text);
  if (text.empty()) unknown(token);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) unknown(token);
  return value;
}

std::vector<double> parse_args(std::string_view body, std::string_view token) {
  std::vector<double> args;
  while (true) {
    const auto comma = body.find(',');
    args.push_back(parse_number(body.substr(0, comma), token));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return args;
}

}  // namespace

Unitary2 parse_gate(std::string_view token) {
  const std::string_view raw = trim(token);
  const auto open = raw.find('(');
  if (open == std::string_view::npos) {
    if (auto g = fixed_gate(upper(raw))) return *g;
    unknown(raw);
  }
  if (raw.back() != ')') unknown(raw);
  const std::string head = upper(trim(raw.substr(0, open)));
  const auto args = parse_args(raw.substr(open + 1, raw.size() - open - 2), raw);

  if (head == "RX" || head == "RY" || head == "RZ") {
    if (args.size() != 1) unknown(raw);
    if (head == "RX") return gates::RX(args[0]);
    if (head == "RY") return gates::RY(args[0]);
    return gates::RZ(args[0]);
  }
  if (head == "M") {
    if (args.size() != 8) unknown(raw);
    const Unitary2 u{complex{args[0], args[1]}, complex{args[2], args[3]},
                     complex{args[4], args[5]}, complex{args[6], args[7]}};
    if (!u.is_unitary()) {
      throw Error(ErrorKind::NonUnitary,
                  "matrix literal is not unitary: '" + std::string(raw) + "'");
    }
    return u;
  }
  unknown(raw);
}

std::string render_matrix(const Unitary2& u) {
  std::string out = "M(";
  char buf[40];
  for (int i = 0; i < 4; ++i) {
    const complex z = u.entries()[i];
    for (double part : {z.real(), z.imag()}) {
      // %.17g round-trips any double; normalize -0 for stable output.
      std::snprintf(buf, sizeof buf, "%.17g", part == 0.0 ? 0.0 : part);
      if (out.size() > 2) out += ',';
      out += buf;
    }
  }
  return out + ")";
}

std::string render_gate(const Unitary2& u) {
  for (const auto& name : gates::fixed_names()) {
    if (*fixed_gate(name) == u) return name;
  }
  return render_matrix(u);
}

std::optional<std::string> catalog_name(const Unitary2& u, double tol) {
  for (const auto& name : gates::fixed_names()) {
    if (approx_eq(*fixed_gate(name), u, tol)) return name;
  }
  return std::nullopt;
}

}  // namespace qmux
