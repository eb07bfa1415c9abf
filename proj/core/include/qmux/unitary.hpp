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

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmux {

using complex = std::complex<double>;

// Default tolerance for unitarity checks and gate equality.
inline constexpr double kEpsilon = 1e-9;

/// A 2x2 complex matrix acting on the target qubit, stored row-major as
/// (a, b; c, d). Values built through the catalog or parse_gate() are
/// unitary within kEpsilon; the raw constructor does not check.
class Unitary2 {
 public:
  constexpr Unitary2() : m_{complex{1, 0}, {}, {}, complex{1, 0}} {}
  constexpr Unitary2(complex a, complex b, complex c, complex d)
      : m_{a, b, c, d} {}

  static constexpr Unitary2 identity() { return Unitary2{}; }

  complex operator()(int row, int col) const { return m_[2 * row + col]; }
  const std::array<complex, 4>& entries() const { return m_; }

  /// Conjugate transpose. Equal to the inverse for unitary input.
  Unitary2 dagger() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
            std::conj(m_[3])};
  }

  bool is_finite() const;
  /// Max entrywise |U U^dagger - I|.
  double unitarity_error() const;
  bool is_unitary(double tol = kEpsilon) const {
    return is_finite() && unitarity_error() <= tol;
  }

  friend Unitary2 operator*(const Unitary2& lhs, const Unitary2& rhs) {
    const auto& l = lhs.m_;
    const auto& r = rhs.m_;
    return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
            l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
  }
  friend Unitary2 operator*(complex s, const Unitary2& u) {
    return {s * u.m_[0], s * u.m_[1], s * u.m_[2], s * u.m_[3]};
  }
  friend Unitary2 operator-(const Unitary2& u) { return complex{-1, 0} * u; }

  // Bitwise equality; use approx_eq() for numerics.
  friend bool operator==(const Unitary2&, const Unitary2&) = default;

 private:
  std::array<complex, 4> m_;
};

Unitary2 multiply(const Unitary2& lhs, const Unitary2& rhs);
Unitary2 inverse(const Unitary2& u);

/// Max entrywise |u - v|. Global phase is NOT factored out.
double max_abs_diff(const Unitary2& u, const Unitary2& v);
bool approx_eq(const Unitary2& u, const Unitary2& v, double tol = kEpsilon);
inline bool is_identity(const Unitary2& u, double tol = kEpsilon) {
  return approx_eq(u, Unitary2::identity(), tol);
}

namespace gates {

Unitary2 I();
Unitary2 X();
Unitary2 Y();
Unitary2 Z();
Unitary2 H();
/// Square root of NOT; V * V == X.
Unitary2 V();
/// V dagger.
Unitary2 VD();
Unitary2 RX(double theta);
Unitary2 RY(double theta);
/// diag(e^{-i theta/2}, e^{i theta/2}).
Unitary2 RZ(double theta);
Unitary2 phase(double delta);

/// Canonical names of the fixed (non-parameterized) catalog gates.
const std::vector<std::string>& fixed_names();

}  // namespace gates

/// Parses a gate token.
///
/// Grammar (names are case-insensitive):
///   I | X | NOT | PX | Y | PY | Z | PZ | H | V | VD | RX(t) | RY(t) | RZ(t)
///   M(a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im)
///
/// Throws Error{UnknownGate} for anything else and Error{NonUnitary} when a
/// matrix literal is not unitary within kEpsilon.
Unitary2 parse_gate(std::string_view token);

/// Renders as a catalog name when the matrix equals a fixed catalog gate
/// bit-for-bit, otherwise as an M(...) literal at full precision.
std::string render_gate(const Unitary2& u);
/// Always an M(...) literal; parse_gate(render_matrix(u)) == u exactly.
std::string render_matrix(const Unitary2& u);

/// Name of the fixed catalog gate equal to u within tol, if any.
std::optional<std::string> catalog_name(const Unitary2& u,
                                        double tol = kEpsilon);

}  // namespace qmux
