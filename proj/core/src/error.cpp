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

#include "qmux/error.hpp"

namespace qmux {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownGate: return "UnknownGate";
    case ErrorKind::NonUnitary: return "NonUnitary";
    case ErrorKind::PolarityLengthMismatch: return "PolarityLengthMismatch";
    case ErrorKind::InvalidPolarity: return "InvalidPolarity";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::FormMismatch: return "FormMismatch";
    case ErrorKind::LengthNotPowerOfTwo: return "LengthNotPowerOfTwo";
    case ErrorKind::MalformedCube: return "MalformedCube";
    case ErrorKind::MissingHeader: return "MissingHeader";
    case ErrorKind::InconsistentWidth: return "InconsistentWidth";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qmux
