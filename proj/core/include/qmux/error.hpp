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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmux {

enum class ErrorKind {
  UnknownGate,
  NonUnitary,
  PolarityLengthMismatch,
  InvalidPolarity,
  SizeLimitExceeded,
  FormMismatch,
  LengthNotPowerOfTwo,
  MalformedCube,
  MissingHeader,
  InconsistentWidth,
  UnsupportedType,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Text-format failure with a 1-based source position. Column 0 means the
// whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::Parse, format(line, column, message)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(int line, int column, const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace qmux
