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

#ifndef GHAPPROX_ERROR_H_
#define GHAPPROX_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghapprox {

enum class ErrorCode {
  kNotSquare,
  kNonFinite,
  kNegativeEntry,
  kNonzeroDiagonal,
  kAsymmetric,
  kTriangleViolation,
  kDuplicatePoints,
  kEmptyInput,
  kDimensionMismatch,
  kDomainMismatch,
  kSpaceMismatch,
  kInvalidArgument,
  kTooLarge,
  kZeroActivation,
  kActivationNotMultiplicative,
  kNotSigmoidal,
  kSingularSystem,
  kNetExhausted,
  kFitFailed,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `indices` holds
// the point indices named by the failure, e.g. (k, l, m) for a triangle
// violation dist[k][l] > dist[k][m] + dist[m][l].
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::size_t> indices = {});

  ErrorCode code() const { return code_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

  // "Name(i,j,...)", as printed by the CLI.
  std::string Tag() const;

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace ghapprox

#endif  // GHAPPROX_ERROR_H_
