// Copyright 2026 The fockpath Authors
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

#include "fockpath/error.hpp"

namespace fockpath {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNullState: return "null state";
    case ErrorCode::kUnknownPort: return "unknown port";
    case ErrorCode::kNotUnitary: return "element not unitary";
    case ErrorCode::kModeMismatch: return "mode mismatch";
    case ErrorCode::kEnergyViolation: return "energy conservation violated";
    case ErrorCode::kPhaseViolation: return "phase relation violated";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kPhotonBudget: return "photon budget exceeded";
    case ErrorCode::kEngineDisagreement: return "engine disagreement";
    case ErrorCode::kOutsideAperture: return "outside aperture";
    case ErrorCode::kNonConvergent: return "quadrature did not converge";
    case ErrorCode::kTruncationTooSmall: return "truncation too small";
    case ErrorCode::kImageAtInfinity: return "image at infinity";
    case ErrorCode::kParse: return "parse error";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace fockpath
