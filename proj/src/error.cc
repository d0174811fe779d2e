// Copyright 2026 The ghapprox Authors.
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

#include "ghapprox/error.h"

#include <sstream>
#include <utility>

namespace ghapprox {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kNonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::kAsymmetric: return "Asymmetric";
    case ErrorCode::kTriangleViolation: return "TriangleViolation";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kZeroActivation: return "ZeroActivation";
    case ErrorCode::kActivationNotMultiplicative: return "ActivationNotMultiplicative";
    case ErrorCode::kNotSigmoidal: return "NotSigmoidal";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kNetExhausted: return "NetExhausted";
    case ErrorCode::kFitFailed: return "FitFailed";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<std::size_t> indices)
    : std::runtime_error(std::move(message)), code_(code), indices_(std::move(indices)) {}

std::string Error::Tag() const {
  std::ostringstream out;
  out << ErrorCodeName(code_);
  if (!indices_.empty()) {
    out << '(';
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (k > 0) out << ',';
      out << indices_[k];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace ghapprox
