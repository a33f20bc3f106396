// Copyright 2026 The ebug Authors.
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

#include "ebug/error.hpp"

namespace ebug {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kNotPrimePower: return "NotPrimePower";
    case Errc::kNotPrimitive: return "NotPrimitive";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kLogOfZero: return "LogOfZero";
    case Errc::kNotADivisor: return "NotADivisor";
    case Errc::kKTooLarge: return "KTooLarge";
    case Errc::kDegenerateK: return "DegenerateK";
    case Errc::kDegenerateField: return "DegenerateField";
    case Errc::kOrderTooSmall: return "OrderTooSmall";
    case Errc::kWindowMismatch: return "WindowMismatch";
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kInvalidColouring: return "InvalidColouring";
    case Errc::kNotFound: return "NotFound";
    case Errc::kNotAWalk: return "NotAWalk";
    case Errc::kCarvingFailed: return "CarvingFailed";
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kOverflow: return "Overflow";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kMalformed: return "Malformed";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace ebug
